"""OEIS b-file parsing and series cross-checks.

A b-file is plain text with one "index value" pair per line; '#' comments and
blank lines are ignored.  Files are read from local paths only, keeping the
test suite hermetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional


class BFileEntry(NamedTuple):
    index: int
    value: int


class BFileParseError(ValueError):
    pass


@dataclass(frozen=True)
class BFileComparison:
    matched: int
    first_mismatch_index: Optional[int] = None
    expected: Optional[int] = None
    actual: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.first_mismatch_index is None


def parse_bfile(path) -> list[BFileEntry]:
    entries: list[BFileEntry] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise BFileParseError(f"line {lineno}: expected 'index value'")
            try:
                entry = BFileEntry(int(parts[0]), int(parts[1]))
            except ValueError:
                raise BFileParseError(f"line {lineno}: non-integer field") from None
            if entries and entry.index <= entries[-1].index:
                raise BFileParseError(
                    f"line {lineno}: indices must be strictly increasing"
                )
            entries.append(entry)
    return entries


def compare_bfile(coefficients, entries, offset_shift: int = 0) -> BFileComparison:
    """Align b-file entry i against coefficient i + offset_shift and compare
    over the overlap.  Coefficients may be any exact integers/rationals."""
    matched = 0
    for entry in entries:
        n = entry.index + offset_shift
        if not 0 <= n < len(coefficients):
            continue
        if coefficients[n] != entry.value:
            return BFileComparison(
                matched,
                first_mismatch_index=entry.index,
                expected=entry.value,
                actual=coefficients[n],
            )
        matched += 1
    return BFileComparison(matched)
