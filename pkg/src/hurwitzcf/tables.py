"""Golden expansions of sqrt(m+ni) - floor_H(sqrt(m+ni)) and a row-level differ.

The expected strings are kept exactly as printed (LaTeX notation).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .cfengine import Algorithm, Status, expand
from .exactnum import sqrt_element
from .regions import floor_H
from .textio import format_expansion, parse_gaussian_int

__all__ = ["TABLE_1", "TABLE_2", "RowResult", "check_row", "check_tables", "parse_label", "table_rows"]

TABLE_1 = (
    (r"\sqrt{-2-2i}-(1-i)", r"[0;\overline{-1+i,2-2i}]"),
    (r"\sqrt{-2-i}-(-2i)", r"[0;\overline{1-i,-1+3i,-1+i,1-3i}]"),
    (r"\sqrt{-2}-2i", r"[0;\overline{2i,4i}]"),
    (r"\sqrt{-2+i}-2i", r"[0;\overline{1+i,-1-3i,-1-i,1+3i}]"),
    (r"\sqrt{-2+2i}-(1+i)", r"[0;\overline{-1-i,2+2i}]"),
    (r"\sqrt{-1-2i}-(1-i)", r"[0;\overline{-2+2i,2-2i}]"),
    (r"\sqrt{-1-i}-(1-i)", r"[0;\overline{-2,2-2i}]"),
    (r"\sqrt{-1+i}-(1+i)", r"[0;\overline{-2,2+2i}]"),
    (r"\sqrt{-1+2i}-(1+i)", r"[0;\overline{-2-2i,2+2i}]"),
    (r"\sqrt{-i}-(1-i)", r"[0;\overline{-2-2i,2-2i}]"),
    (r"\sqrt{i}-(1+i)", r"[0;\overline{-2+2i,2+2i}]"),
    (r"\sqrt{1-2i}-(1-i)", r"[0;\overline{2-2i}]"),
    (r"\sqrt{1-i}-(1-i)", r"[0;\overline{-2i,2-2i}]"),
    (r"\sqrt{1+i}-(1+i)", r"[0;\overline{2i,2+2i}]"),
    (r"\sqrt{1+2i}-(1+i)", r"[0;\overline{2+2i}]"),
    (r"\sqrt{2-2i}-(1-i)", r"[0;\overline{1-i,2-2i}]"),
    (r"\sqrt{2-i}-2", r"[0;\overline{-1+i,-3+i,1-i,3-i}]"),
    (r"\sqrt{2}-2", r"[0;\overline{-2,4}]"),
    (r"\sqrt{2+i}-2", r"[0;\overline{-1-i,-3-i,1+i,3+i}]"),
    (r"\sqrt{2+2i}-(1+i)", r"[0;\overline{1+i,2+2i}]"),
)

TABLE_2 = (
    (r"\sqrt{-3-3i}-(-2i)", r"[0;\overline{2,-2,1-i,1-i,-1+i,1-3i}]"),
    (r"\sqrt{-3-2i}-(-2i)", r"[0;\overline{2,-1+i,1-3i}]"),
    (r"\sqrt{-3-i}-(-2i)", r"[0;\overline{2-2i,-4i}]"),
    (r"\sqrt{-3}-2i", r"[0;\overline{4i}]"),
    (r"\sqrt{-3+i}-2i", r"[0;\overline{2+2i,4i}]"),
    (r"\sqrt{-3+2i}-2i", r"[0;\overline{2,-1-i,1+3i}]"),
    (r"\sqrt{-3+3i}-2i", r"[0;\overline{2,-2,1+i,1+i,-1-i,1+3i}]"),
    (r"\sqrt{3-3i}-2", r"[0;\overline{2i,2i,-1+i,1-i,1-i,3-i}]"),
    (r"\sqrt{3-2i}-2", r"[0;\overline{2i,-1+i,-3+i,-2i,1-i,3-i}]"),
    (r"\sqrt{3-i}-2", r"[0;\overline{-2+2i,4}]"),
    (r"\sqrt{3}-2", r"[0;\overline{-4,4}]"),
    (r"\sqrt{3+i}-2", r"[0;\overline{-2-2i,4}]"),
    (r"\sqrt{3+2i}-2", r"[0;\overline{-2i,-1-i,-3-i,2i,1+i,3+i}]"),
    (r"\sqrt{3+3i}-2", r"[0;\overline{-2i,-2i,-1-i,1+i,1+i,3+i}]"),
    (r"\sqrt{-2-3i}-(1-i)", r"[0;\overline{2i,-1+i,1-i,-2+2i,-2i,1-i,-1+i,2-2i}]"),
    (r"\sqrt{-1-3i}-(1-i)", r"[0;\overline{2i,2-2i}]"),
    (r"\sqrt{-3i}-(1-i)", r"[0;\overline{2+2i,2-2i}]"),
    (r"\sqrt{1-3i}-(1-i)", r"[0;\overline{2,2-2i}]"),
    (r"\sqrt{2-3i}-(1-i)", r"[0;\overline{2,-1+i,-1+i,-2+2i,-2,1-i,1-i,2-2i}]"),
    (r"\sqrt{-2+3i}-(1+i)", r"[0;\overline{-2i,-1-i,1+i,-2-2i,2i,1+i,-1-i,2+2i}]"),
    (r"\sqrt{-1+3i}-(1+i)", r"[0;\overline{-2i,2+2i}]"),
    (r"\sqrt{3i}-(1+i)", r"[0;\overline{2-2i,2+2i}]"),
    (r"\sqrt{1+3i}-(1+i)", r"[0;\overline{2,2+2i}]"),
    (r"\sqrt{2+3i}-(1+i)", r"[0;\overline{2,-1-i,-1-i,-2-2i,-2,1+i,1+i,2+2i}]"),
)

_LABEL = re.compile(r"^\\sqrt\{([^}]*)\}-(?:\(([^)]*)\)|(.+))$")


def parse_label(label: str):
    """``\\sqrt{-2-i}-(-2i)`` -> (m, n, printed floor)."""
    m = _LABEL.match(label.strip())
    if m is None:
        raise ValueError(f"unrecognised row label {label!r}")
    d = parse_gaussian_int(m.group(1))
    floor = parse_gaussian_int(m.group(2) if m.group(2) is not None else m.group(3))
    return d.re_num, d.im_num, floor


@dataclass(frozen=True)
class RowResult:
    table: int
    label: str
    expected: str
    computed: str
    floor_ok: bool
    t_agrees: bool  # the T expansion of the same value is identical

    @property
    def ok(self) -> bool:
        return self.floor_ok and self.computed == self.expected


def check_row(table: int, label: str, expected: str) -> RowResult:
    m, n, printed_floor = parse_label(label)
    root = sqrt_element(m, n)
    a0 = floor_H(root)
    alpha = root - a0
    e = expand(alpha, Algorithm.H)
    computed = format_expansion(e, "paper")
    t_agrees = False
    try:
        et = expand(alpha, Algorithm.T)
        t_agrees = et.status is Status.PERIODIC and (et.preperiod, et.period) == (e.preperiod, e.period)
    except Exception:  # alpha outside the open box
        pass
    return RowResult(table, label, expected, computed, a0 == printed_floor, t_agrees)


def table_rows(which="all"):
    which = str(which)
    if which not in ("1", "2", "all"):
        raise ValueError("table must be 1, 2 or all")
    rows = []
    if which in ("1", "all"):
        rows += [(1, label, exp) for label, exp in TABLE_1]
    if which in ("2", "all"):
        rows += [(2, label, exp) for label, exp in TABLE_2]
    return rows


def check_tables(which="all") -> list[RowResult]:
    return [check_row(*row) for row in table_rows(which)]
