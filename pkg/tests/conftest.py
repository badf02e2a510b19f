from __future__ import annotations

import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dessinsym import constructions as C  # noqa: E402
from dessinsym.dessin import RegularDessin  # noqa: E402
from dessinsym.permgroup import Perm  # noqa: E402


def s3_dessin() -> RegularDessin:
    """S_3 acting regularly on its six elements: x an involution, y a 3-cycle."""
    from itertools import permutations

    elements = list(permutations(range(3)))
    index = {e: k for k, e in enumerate(elements)}

    def right(g):
        return Perm(index[tuple(g[h[i]] for i in range(3))] for h in elements)

    return RegularDessin(right((1, 0, 2)), right((1, 2, 0)), "s3")


@lru_cache(maxsize=None)
def fixtures() -> dict[str, RegularDessin]:
    return {
        "c3": C.cyclic_dessin(3),
        "c3_star": C.cyclic_dessin(3, 2),
        "c4": C.cyclic_dessin(4),
        "c6_star": C.cyclic_dessin(6, 5),
        "s3": s3_dessin(),
        "v4": C.v4_map(),
        "tetrahedron": C.biggs_map(4),
        "biggs8": C.biggs_map(8),
        "torus44": C.torus_map("44", "12"),
        "torus44_mirror": C.torus_map("44", "21"),
        "torus36": C.torus_map("36", "12"),
        "torus36_mirror": C.torus_map("36", "21"),
        "klein21": C.klein21(),
        "exceptional3": C.exceptional_dessin(3),
        "join_biggs8_v4": C.join(C.biggs_map(8), C.v4_map()),
    }


# light fixtures for operations that are quadratic in the group order
SMALL = ("c3", "c3_star", "c4", "c6_star", "s3", "v4", "tetrahedron", "torus44", "torus36", "klein21", "biggs8")


@pytest.fixture(scope="session")
def fx() -> dict[str, RegularDessin]:
    return fixtures()


ACCEPTANCE_RESULTS: list[tuple[str, bool]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
