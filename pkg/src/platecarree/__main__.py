import sys

from platecarree.cli import main

sys.exit(main())
