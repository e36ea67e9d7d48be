"""CSV pair files in, survey CSV out."""

from __future__ import annotations

import csv
import io
import os
import tempfile
from pathlib import Path
from typing import Iterable, TextIO

from platecarree.errors import GeodesyError, InvalidInputError
from platecarree.geo import GeoPoint
from platecarree.survey import BAND_WIDTH_DEG, PairRecord, SurveyRow, band_means

PAIR_COLUMNS = ("name_a", "lat_a", "lon_a", "name_b", "lat_b", "lon_b")
REPORT_COLUMNS = PAIR_COLUMNS + (
    "planar_km",
    "chord_km",
    "great_circle_km",
    "haversine_km",
    "paper_arcsin_km",
    "error_pct",
)


class CsvFormatError(GeodesyError):
    def __init__(self, line: int, reason: str):
        self.line = line
        super().__init__(f"line {line}: {reason}")


def fmt(value: float, places: int) -> str:
    s = f"{value:.{places}f}"
    # "-0.000" and "0.000" must not differ between runs or platforms
    if float(s) == 0.0:
        s = s.lstrip("-")
    return s


def fmt_deg(value: float) -> str:
    return fmt(value, 9)


def read_pairs(stream: TextIO) -> list[PairRecord]:
    """Parse a pair file: header row, ``#`` comments, lat/lon in degrees."""
    pairs = []
    header = None
    for lineno, line in enumerate(stream, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        cells = [c.strip() for c in next(csv.reader([line]))]
        if header is None:
            missing = [c for c in PAIR_COLUMNS if c not in cells]
            if missing:
                raise CsvFormatError(lineno, f"header is missing column(s) {', '.join(missing)}")
            header = cells
            continue
        if len(cells) != len(header):
            raise CsvFormatError(lineno, f"expected {len(header)} fields, got {len(cells)}")
        row = dict(zip(header, cells))
        try:
            a = GeoPoint.from_degrees(float(row["lat_a"]), float(row["lon_a"]))
            b = GeoPoint.from_degrees(float(row["lat_b"]), float(row["lon_b"]))
            pairs.append(PairRecord(row["name_a"], row["name_b"], a, b))
        except (ValueError, GeodesyError) as exc:
            raise CsvFormatError(lineno, str(exc)) from exc
    if header is None:
        raise CsvFormatError(1, "missing header row")
    if not pairs:
        raise InvalidInputError("pair file holds no data rows")
    return pairs


def load_pairs(path: str | os.PathLike) -> list[PairRecord]:
    with open(path, encoding="utf-8", newline="") as f:
        return read_pairs(f)


def format_survey(rows: Iterable[SurveyRow], wrapped_planar: bool = False) -> str:
    rows = list(rows)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = list(REPORT_COLUMNS)
    if wrapped_planar:
        header.append("wrapped_planar_km")
    writer.writerow(header)
    for row in rows:
        r = row.report
        cells = [
            row.name_a,
            fmt_deg(row.a.lat_deg),
            fmt_deg(row.a.lon_deg),
            row.name_b,
            fmt_deg(row.b.lat_deg),
            fmt_deg(row.b.lon_deg),
            fmt(r.planar_km, 3),
            fmt(r.chord_km, 3),
            fmt(r.great_circle_km, 3),
            fmt(r.haversine_km, 3),
            fmt(r.paper_arcsin_km, 3),
            fmt(r.planar_error_pct, 3),
        ]
        if wrapped_planar:
            cells.append(fmt(row.wrapped_planar_km, 3))
        writer.writerow(cells)
    buf.write("# summary: mean error_pct by |midpoint latitude| band (degrees)\n")
    buf.write("# band_lo,band_hi,count,mean_error_pct\n")
    for band, (count, mean) in band_means(rows).items():
        buf.write(f"# {band:g},{band + BAND_WIDTH_DEG:g},{count},{fmt(mean, 3)}\n")
    return buf.getvalue()


def write_atomic(path: str | os.PathLike, data: str | bytes) -> None:
    """Write the whole file to a sibling temp file, then rename over ``path``."""
    path = Path(path)
    mode = "wb" if isinstance(data, bytes) else "w"
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, mode, **({} if mode == "wb" else {"encoding": "utf-8", "newline": ""})) as f:
            f.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise
