"""Annual log series of production, capital and labor: bundled reference data
plus CSV ingestion and validation."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError

# Natural logs of the 1899-1922 US manufacturing index numbers (physical
# production, fixed capital, manual labor; base year 1899 = 100) compiled by
# Cobb and Douglas.  Stored exactly as published, to six decimal places.
_REFERENCE_ROWS: tuple[tuple[int, float, float, float], ...] = (
    (1899, 4.605170, 4.605170, 4.605170),
    (1900, 4.615121, 4.672829, 4.653960),
    (1901, 4.718499, 4.736198, 4.700480),
    (1902, 4.804021, 4.804021, 4.770685),
    (1903, 4.820282, 4.875197, 4.812184),
    (1904, 4.804021, 4.927254, 4.753590),
    (1905, 4.962845, 5.003946, 4.828314),
    (1906, 5.023881, 5.093750, 4.890349),
    (1907, 5.017280, 5.170484, 4.927254),
    (1908, 4.836282, 5.220356, 4.795791),
    (1909, 5.043425, 5.288267, 4.941642),
    (1910, 5.068904, 5.337538, 4.969813),
    (1911, 5.030438, 5.375278, 4.976734),
    (1912, 5.176150, 5.420535, 5.023881),
    (1913, 5.214936, 5.463832, 5.036953),
    (1914, 5.129899, 5.497168, 5.003946),
    (1915, 5.241747, 5.583469, 5.036953),
    (1916, 5.416100, 5.697093, 5.204007),
    (1917, 5.424950, 5.814131, 5.278115),
    (1918, 5.407172, 5.902633, 5.298317),
    (1919, 5.384495, 5.958425, 5.262690),
    (1920, 5.442418, 6.008813, 5.262690),
    (1921, 5.187386, 6.033086, 4.990433),
    (1922, 5.480639, 6.066108, 5.081404),
)

_HEADER = ("year", "output", "capital", "labor")


@dataclass(frozen=True)
class Observation:
    """One year of the series; all three values are natural logs of index numbers."""

    year: int
    ln_output: float
    ln_capital: float
    ln_labor: float

    def __post_init__(self) -> None:
        for name in ("ln_output", "ln_capital", "ln_labor"):
            if not math.isfinite(getattr(self, name)):
                raise InputError(f"{name} must be finite in year {self.year}")


@dataclass(frozen=True)
class SeriesTable:
    """Consecutive annual observations, immutable after construction.

    Years must advance by exactly one and at least three observations are
    required (two parameters per fitted line plus one degree of freedom, and
    a meaningful 2x2 solve downstream).
    """

    observations: tuple[Observation, ...]

    def __post_init__(self) -> None:
        if len(self.observations) < 3:
            raise InputError(
                f"need at least 3 observations, got {len(self.observations)}"
            )
        for prev, cur in zip(self.observations, self.observations[1:]):
            if cur.year != prev.year + 1:
                raise InputError(
                    f"years must be consecutive: {cur.year} follows {prev.year}"
                )

    def __len__(self) -> int:
        return len(self.observations)

    @property
    def first_year(self) -> int:
        return self.observations[0].year

    @property
    def years(self) -> np.ndarray:
        return np.array([o.year for o in self.observations])

    @property
    def ln_output(self) -> np.ndarray:
        return np.array([o.ln_output for o in self.observations])

    @property
    def ln_capital(self) -> np.ndarray:
        return np.array([o.ln_capital for o in self.observations])

    @property
    def ln_labor(self) -> np.ndarray:
        return np.array([o.ln_labor for o in self.observations])

    def to_csv(self) -> str:
        """Serialize as ``year,output,capital,labor`` with log values.

        Floats are written in shortest round-trip form, so
        ``parse_csv(table.to_csv(), values_are_logs=True)`` reproduces the
        table exactly.
        """
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(_HEADER)
        for o in self.observations:
            writer.writerow([o.year, repr(o.ln_output), repr(o.ln_capital), repr(o.ln_labor)])
        return out.getvalue()


def reference_series() -> SeriesTable:
    """The bundled 1899-1922 manufacturing series, in natural-log form."""
    return SeriesTable(tuple(Observation(*row) for row in _REFERENCE_ROWS))


def parse_csv(text: str, values_are_logs: bool = False) -> SeriesTable:
    """Parse a ``year,output,capital,labor`` CSV into a validated SeriesTable.

    Parameters
    ----------
    text : str
        CSV content.  UTF-8, ``.`` decimal separator; lines whose first
        non-blank character is ``#`` are skipped.
    values_are_logs : bool
        When False (the default) the three value columns are raw index
        levels and the natural log is applied; levels must be positive.
        When True the columns are taken as logs unchanged.

    Raises
    ------
    InputError
        Malformed rows (with line number), non-positive raw values,
        non-consecutive years, or fewer than 3 data rows.
    """
    lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((lineno, raw))
    if not lines:
        raise InputError("empty input: no header row found")

    header_lineno, header_raw = lines[0]
    header = tuple(field.strip().lower() for field in next(csv.reader([header_raw])))
    if header != _HEADER:
        raise InputError(
            f"line {header_lineno}: expected header 'year,output,capital,labor', "
            f"got {','.join(header) or '<empty>'!r}"
        )

    observations = []
    for lineno, raw in lines[1:]:
        fields = next(csv.reader([raw]))
        if len(fields) != 4:
            raise InputError(f"line {lineno}: expected 4 fields, got {len(fields)}")
        try:
            year = int(fields[0].strip())
        except ValueError:
            raise InputError(f"line {lineno}: year {fields[0].strip()!r} is not an integer") from None
        values = []
        for name, field in zip(_HEADER[1:], fields[1:]):
            try:
                value = float(field.strip())
            except ValueError:
                raise InputError(f"line {lineno}: {name} value {field.strip()!r} is not numeric") from None
            if not math.isfinite(value):
                raise InputError(f"line {lineno}: {name} value is not finite")
            if not values_are_logs:
                if value <= 0:
                    raise InputError(f"line {lineno}: {name} level {value} must be positive to take logs")
                value = math.log(value)
            values.append(value)
        observations.append(Observation(year, *values))

    return SeriesTable(tuple(observations))


def time_index(table: SeriesTable, origin: int = 0) -> np.ndarray:
    """Regression time axis t_j = (year_j - first_year) + origin.

    The default ``origin=0`` puts the first observation at t = 0, so fitted
    intercepts are the log levels of the first year.  ``origin=1`` is the
    alternative one-based convention; slopes are identical under either.
    """
    return (table.years - table.first_year + origin).astype(float)
