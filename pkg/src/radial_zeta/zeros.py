"""Ordinates of the first non-trivial zeros and their tabulated U values.

Ordinates are kept as decimal text; the float is the binary64 rounding of it.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path

from .errors import MonotonicityError, ParseError

# index, ordinate t (zero at 1/2 + i t), U(1/2 - i t)
_TABLE = """\
1 14.1347251417346937904572519835624766 8
2 21.0220396387715549926284795938969162 14
3 25.0108575801456887632137909925627734 18
4 30.4248761258595132103118975305839571 24
5 32.9350615877391896906623689640747418 28
6 37.5861781588256712572177634807052984 32
7 40.9187190121474951873981269146334247 38
8 43.3270732809149995194961221654068456 40
9 48.0051508811671597279424727494276636 46
10 49.7738324776723021819167846785638367 48
11 52.9703214777144606441472966088808216 52
12 56.4462476970633948043677594767060321 56
13 59.3470440026023530796536486749921759 60
14 60.8317785246098098442599018245240815 64
15 65.1125440480816066608750542531836072 68
16 67.0798105294941737144788288965220700 72
17 69.5464017111739792529268575265546586 76
18 72.0671576744819075825221079698261175 78
19 75.7046906990839331683269167620305404 84
20 77.1448400688748053726826648563046925 88
21 79.3373750202493679227635928771160578 90
22 82.9103808540860301831648374947705599 94
23 84.7354929805170501057353112068275569 96
24 87.4252746131252294065316678509191351 100
25 88.8091112076344654236823480795095125 104
26 92.4918992705584842962597252418104965 108
27 94.6513440405198869665979258152079645 110
28 95.8706342282453097587410292192466718 114
29 98.8311942181936922333244201386223539 118
30 101.317851005731391228785447940292361 122
"""

CSV_HEADER = ["index", "ordinate", "expected_u"]


@dataclass(frozen=True)
class ZeroRecord:
    index: int
    ordinate_text: str
    ordinate: float
    expected_u: int | None = None

    @classmethod
    def from_text(cls, index: int, text: str, expected_u: int | None = None) -> "ZeroRecord":
        text = text.strip()
        value = float(text)
        if not value > 0:
            raise ValueError(f"ordinate must be positive, got {text}")
        return cls(index, text, value, expected_u)


def _validate(records: list[ZeroRecord]) -> list[ZeroRecord]:
    for a, b in zip(records, records[1:]):
        if b.index <= a.index:
            raise MonotonicityError(f"indices not increasing: {a.index} then {b.index}")
        if b.ordinate <= a.ordinate:
            raise MonotonicityError(f"ordinates not increasing at index {b.index}")
    return records


def builtin_zeros() -> list[ZeroRecord]:
    rows = [line.split() for line in _TABLE.splitlines()]
    return [ZeroRecord.from_text(int(i), t, int(u)) for i, t, u in rows]


def _parse_ordinate(text: str, line: int) -> str:
    text = text.strip()
    try:
        value = float(text)
    except ValueError:
        raise ParseError(f"not a decimal number: {text!r}", line) from None
    if not value > 0 or not all(c in "0123456789.+-eE" for c in text):
        raise ParseError(f"ordinate must be a positive decimal, got {text!r}", line)
    return text


def loads_zeros(text: str, fmt: str = "plain") -> list[ZeroRecord]:
    records = []
    if fmt == "plain":
        for lineno, line in enumerate(text.splitlines(), start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            t = _parse_ordinate(stripped, lineno)
            records.append(ZeroRecord.from_text(len(records) + 1, t))
    elif fmt == "csv":
        reader = csv.reader(io.StringIO(text))
        header = next(reader, None)
        if header != CSV_HEADER:
            raise ParseError(f"expected header {','.join(CSV_HEADER)!r}, got {header!r}", 1)
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 3:
                raise ParseError(f"expected 3 fields, got {len(row)}", lineno)
            try:
                index = int(row[0])
                expected = int(row[2]) if row[2].strip() else None
            except ValueError:
                raise ParseError(f"bad integer field in {row!r}", lineno) from None
            records.append(ZeroRecord.from_text(index, _parse_ordinate(row[1], lineno), expected))
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return _validate(records)


def load_zeros(path, fmt: str = "plain") -> list[ZeroRecord]:
    return loads_zeros(Path(path).read_text(encoding="utf-8"), fmt)


def dumps_zeros(records: list[ZeroRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow([r.index, r.ordinate_text, "" if r.expected_u is None else r.expected_u])
    return buf.getvalue()


def dump_zeros(records: list[ZeroRecord], path) -> None:
    Path(path).write_text(dumps_zeros(records), encoding="utf-8", newline="\n")
