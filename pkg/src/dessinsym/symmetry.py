"""Deciding whether the surface carrying a regular dessin is symmetric.

The surface admits an anticonformal involution iff one of four conditions
holds on ``G = <x, y>`` with ``z = (x*y)^-1``:

1. an automorphism ``x -> x^-1, y -> y^-1``;
2. after some cyclic shift of the triple, an automorphism ``x -> y^-1, y -> x^-1``;
3. after some cyclic shift, type ``(2n, 2n, n)``, an automorphism ``gamma``
   swapping ``x`` and ``y``, and an automorphism of ``<G, gamma>`` swapping
   ``x`` and ``x*gamma``;
4. genus 1.

When the triangle group is maximal among those normalising the surface
group, conditions 1 and 2 alone decide.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .dessin import RegularDessin, rotate
from .errors import IncompatibleHypothesis, InternalInvariant, MaximalityNotAsserted, NotGenerating
from .inclusions import InclusionRow, table1_candidates
from .permgroup import Perm, anchored_relabel, automorphism_exists, holomorph_extension, split_extension


def _automorphism(D: RegularDessin, images: tuple[Perm, Perm]) -> Perm | None:
    try:
        return automorphism_exists(D.closure, images)
    except NotGenerating:
        return None


def check_condition1(D: RegularDessin) -> Perm | None:
    return _automorphism(D, (D.x.inverse(), D.y.inverse()))


def check_condition2(D: RegularDessin) -> tuple[int, Perm] | None:
    for r in range(3):
        R = rotate(D, r)
        if R.type.l != R.type.m:
            continue
        beta = _automorphism(R, (R.y.inverse(), R.x.inverse()))
        if beta is not None:
            return r, beta
    return None


def find_gamma(D: RegularDessin) -> Perm | None:
    """The automorphism swapping ``x`` and ``y`` as a point map, if any."""
    return _automorphism(D, (D.y, D.x))


def find_cycling(D: RegularDessin) -> Perm | None:
    """The automorphism ``x -> y -> z -> x`` as a point map, if any."""
    return _automorphism(D, (D.y, D.z))


@dataclass(frozen=True)
class Condition3:
    rotation: int
    gamma: Perm
    delta: Perm
    # gamma is the identity: <G, gamma> is taken as G x C_2
    gamma_trivial: bool = False


def find_delta(D: RegularDessin, gamma: Perm) -> Perm | None:
    """Automorphism of ``<G, gamma>`` swapping ``x`` and ``x*gamma``, as a
    point map on the extension's regular action."""
    if gamma.is_identity():
        (X, _), c = split_extension((D.x, D.y), gamma, 2)
        XG = X * c
    else:
        E = holomorph_extension(D.closure, gamma)
        X, XG = E.right_regular(D.x), E.right_regular(D.x * gamma)
    return anchored_relabel((X, XG), (XG, X))


def check_condition3(D: RegularDessin) -> Condition3 | None:
    for r in range(3):
        R = rotate(D, r)
        l, m, n = R.type
        if not l == m == 2 * n:
            continue
        gamma = find_gamma(R)
        if gamma is None:
            continue
        delta = find_delta(R, gamma)
        if delta is not None:
            return Condition3(r, gamma, delta, gamma.is_identity())
    return None


def check_condition4(D: RegularDessin) -> bool:
    return D.genus == 1


@dataclass(frozen=True)
class SymmetryReport:
    c1: Perm | None
    c2: tuple[int, Perm] | None
    c3: Condition3 | None
    c4: bool
    symmetric: bool
    degenerate: bool
    maximal: bool = False

    @property
    def holding(self) -> list[int]:
        """Indices of the conditions that hold."""
        flags = (self.c1 is not None, self.c2 is not None, self.c3 is not None, self.c4)
        return [k + 1 for k, f in enumerate(flags) if f]


def decide_symmetric(D: RegularDessin) -> SymmetryReport:
    c1 = check_condition1(D)
    c2 = check_condition2(D)
    c3 = check_condition3(D)
    c4 = check_condition4(D)
    symmetric = c1 is not None or c2 is not None or c3 is not None or c4
    return SymmetryReport(c1, c2, c3, c4, symmetric, D.degenerate)


def decide_symmetric_maximal(D: RegularDessin, maximality_asserted: bool) -> SymmetryReport:
    """Verdict under the caller's assertion that the triangle group is maximal.

    Conditions 3 and 4 are still computed but do not enter the verdict.
    Genus 1 is refused outright: no maximal triangle group exists there.
    """
    if not maximality_asserted:
        raise MaximalityNotAsserted("maximality of the triangle group must be asserted by the caller")
    if D.genus == 1:
        raise IncompatibleHypothesis("genus 1 surfaces have no maximal normalising triangle group")
    report = decide_symmetric(D)
    symmetric = report.c1 is not None or report.c2 is not None
    return SymmetryReport(report.c1, report.c2, report.c3, report.c4, symmetric, report.degenerate, maximal=True)


GROWTH_INDEX = {"row-a": 2, "row-b": 3}


@dataclass(frozen=True)
class GrowthStep:
    rule: str
    rotation: int
    grown: RegularDessin
    # images of the (rotated) x and y inside the grown dessin's group
    embedding: tuple[Perm, Perm] = field(repr=False)

    @property
    def index(self) -> int:
        return GROWTH_INDEX[self.rule]


def _validate_growth(step: GrowthStep, base: RegularDessin, expected_type: tuple, factor: int) -> GrowthStep:
    g = step.grown
    if g.order != factor * base.order:
        raise InternalInvariant(f"{step.rule}: order {g.order}, expected {factor * base.order}")
    if tuple(g.type) != tuple(expected_type):
        raise InternalInvariant(f"{step.rule}: type {g.type}, expected {expected_type}")
    if not (g.x * g.y * g.z).is_identity():
        raise InternalInvariant(f"{step.rule}: triple product is not the identity")
    if g.genus != base.genus:
        raise InternalInvariant(f"{step.rule}: genus {g.genus} differs from {base.genus}")
    return step


def grow_normal(D: RegularDessin) -> list[GrowthStep]:
    """Quotients of the triangle groups containing ``Delta`` normally.

    Row a, per rotation with ``order(x) == order(y) = s``: ``gamma`` swapping
    ``x`` and ``y`` yields ``<G, gamma>`` with triple ``(x, gamma, gamma*x^-1)``
    of type ``(s, 2, 2t)``.  Row b, for type ``(t, t, t)``: the cycling
    automorphism ``pi`` yields ``<G, pi>`` with triple ``(pi, pi^-1*x^-1, x)``
    of type ``(3, 3, t)``.  Iterate to reach row c.
    """
    steps = []
    for r in range(3):
        R = rotate(D, r)
        s, s2, t = R.type
        if s != s2:
            continue
        gamma = find_gamma(R)
        if gamma is None:
            continue
        (X, Y), c = split_extension((R.x, R.y), gamma, 2)
        grown = RegularDessin(X, c)
        steps.append(_validate_growth(GrowthStep("row-a", r, grown, (X, Y)), R, (s, 2, 2 * t), 2))
    t = D.type.l
    if D.type == (t, t, t):
        pi = find_cycling(D)
        if pi is not None:
            (X, Y), c = split_extension((D.x, D.y), pi, 3)
            P = c.inverse()
            grown = RegularDessin(P, P.inverse() * X.inverse())
            steps.append(_validate_growth(GrowthStep("row-b", 0, grown, (X, Y)), D, (3, 3, t), 3))
    return steps


def candidate_rows(D: RegularDessin) -> list[InclusionRow]:
    return table1_candidates(D.type)


__all__ = [
    "Condition3",
    "GrowthStep",
    "SymmetryReport",
    "candidate_rows",
    "check_condition1",
    "check_condition2",
    "check_condition3",
    "check_condition4",
    "decide_symmetric",
    "decide_symmetric_maximal",
    "find_cycling",
    "find_delta",
    "find_gamma",
    "grow_normal",
    "table1_candidates",
]
