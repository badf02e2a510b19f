"""Inclusions between Fuchsian triangle groups, with finite index.

Rows a, b, c are the normal inclusions; rows A to K are not normal.
Period patterns are written in the parameters ``s``, ``t`` and ``n``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable


@dataclass(frozen=True)
class InclusionRow:
    case_label: str
    sub_type_pattern: str
    over_type_pattern: str
    index: int
    group_name: str
    normal: bool
    theorem_column: str
    # solve(a, b, c) -> parameters such that the sub-type pattern equals (a, b, c), or None
    _solve: Callable[[int, int, int], dict | None] = field(repr=False, compare=False)
    _over: Callable[[dict], tuple[int, int, int]] = field(repr=False, compare=False)

    def match(self, dtype: tuple[int, int, int]) -> dict | None:
        """Parameters for the first ordering of ``dtype`` fitting the pattern."""
        if min(dtype) < 2:
            return None
        for perm in sorted(set(permutations(dtype))):
            params = self._solve(*perm)
            if params is not None and all(v >= 2 for v in params.values()):
                return params
        return None

    def over_type(self, params: dict) -> tuple[int, int, int]:
        return self._over(params)


def _sporadic(sub):
    return lambda a, b, c: {} if (a, b, c) == sub else None


def _const(over):
    return lambda params: over


TABLE1: tuple[InclusionRow, ...] = (
    InclusionRow("a", "(s,s,t)", "(2,s,2t)", 2, "S_2", True, "(1), (2)",
                 lambda a, b, c: {"s": a, "t": c} if a == b else None,
                 lambda p: (2, p["s"], 2 * p["t"])),
    InclusionRow("b", "(t,t,t)", "(3,3,t)", 3, "A_3", True, "(2)",
                 lambda a, b, c: {"t": a} if a == b == c else None,
                 lambda p: (3, 3, p["t"])),
    InclusionRow("c", "(t,t,t)", "(2,3,2t)", 6, "S_3", True, "(1), (2)",
                 lambda a, b, c: {"t": a} if a == b == c else None,
                 lambda p: (2, 3, 2 * p["t"])),
    InclusionRow("A", "(7,7,7)", "(2,3,7)", 24, "L_2(7)", False, "(1)", _sporadic((7, 7, 7)), _const((2, 3, 7))),
    InclusionRow("B", "(2,7,7)", "(2,3,7)", 9, "L_2(8)", False, "(2)", _sporadic((2, 7, 7)), _const((2, 3, 7))),
    InclusionRow("C", "(3,3,7)", "(2,3,7)", 8, "L_2(7)", False, "(2)", _sporadic((3, 3, 7)), _const((2, 3, 7))),
    InclusionRow("D", "(4,8,8)", "(2,3,8)", 12, r"(C_4\times C_4)\rtimes S_3", False, "(2)",
                 _sporadic((4, 8, 8)), _const((2, 3, 8))),
    InclusionRow("E", "(3,8,8)", "(2,3,8)", 10, "PGL_2(9)", False, "(2)", _sporadic((3, 8, 8)), _const((2, 3, 8))),
    InclusionRow("F", "(9,9,9)", "(2,3,9)", 12, r"L_2({\mathbb Z}_9)", False, "(2)",
                 _sporadic((9, 9, 9)), _const((2, 3, 9))),
    InclusionRow("G", "(4,4,5)", "(2,4,5)", 6, "S_5", False, "(2)", _sporadic((4, 4, 5)), _const((2, 4, 5))),
    InclusionRow("H", "(n,4n,4n)", "(2,3,4n)", 6, "S_4", False, "(2)",
                 lambda a, b, c: {"n": a} if b == c == 4 * a else None,
                 lambda p: (2, 3, 4 * p["n"])),
    InclusionRow("I", "(n,2n,2n)", "(2,4,2n)", 4, "D_4", False, "(2)",
                 lambda a, b, c: {"n": a} if b == c == 2 * a else None,
                 lambda p: (2, 4, 2 * p["n"])),
    InclusionRow("J", "(3,n,3n)", "(2,3,2n)", 4, "A_4", False, "(1)",
                 lambda a, b, c: {"n": b} if a == 3 and c == 3 * b else None,
                 # the pattern string is kept as printed; index 4 forces period 3n by area
                 lambda p: (2, 3, 3 * p["n"])),
    InclusionRow("K", "(2,n,2n)", "(2,3,2n)", 3, "S_3", False, "(1)",
                 lambda a, b, c: {"n": b} if a == 2 and c == 2 * b else None,
                 lambda p: (2, 3, 2 * p["n"])),
)

ROWS = {row.case_label: row for row in TABLE1}


def table1_candidates(dtype: tuple[int, int, int]) -> list[InclusionRow]:
    """Rows whose sub-type pattern matches ``dtype`` as an unordered triple."""
    return [row for row in TABLE1 if row.match(tuple(dtype)) is not None]
