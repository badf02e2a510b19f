"""Regular dessins as regular permutation pairs, and their Walsh maps.

A regular dessin of degree ``d`` is a pair ``(x, y)`` of permutations of
``d`` points generating a group ``G`` that acts regularly, so ``|G| = d``.
Points are the edges of the Walsh map; ``x`` rotates edges around black
vertices, ``y`` around white vertices, and ``z = (x*y)^-1`` around faces.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple

from .errors import CapExceeded, InternalInvariant, InvalidInput, NotAMap, NotBipartite, NotRegular
from .permgroup import DEFAULT_CAP, GroupClosure, Perm, anchored_relabel, closure, is_transitive

DUALS = ("01", "02", "12")


class DessinType(NamedTuple):
    l: int
    m: int
    n: int

    def rotated(self, r: int = 1) -> DessinType:
        r %= 3
        return DessinType(*(self[r:] + self[:r]))


@dataclass(frozen=True)
class RegularDessin:
    """An ordered generating pair of a regular permutation group.

    Construction validates regularity and raises NotRegular otherwise.
    """

    x: Perm
    y: Perm
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.x.degree != self.y.degree:
            raise InvalidInput("x and y have different degrees")
        d = self.x.degree
        if d == 0:
            raise InvalidInput("empty dessin")
        if not is_transitive((self.x, self.y), d):
            raise NotRegular("<x, y> is not transitive")
        try:
            cl = closure((self.x, self.y), cap=min(d, DEFAULT_CAP))
        except CapExceeded:
            raise NotRegular(f"<x, y> has more than {d} elements") from None
        if len(cl) != d:
            raise NotRegular(f"|<x, y>| = {len(cl)} differs from degree {d}")
        # cached_property slot; frozen dataclasses still allow __dict__ writes
        self.__dict__["closure"] = cl

    @property
    def degree(self) -> int:
        return self.x.degree

    @property
    def order(self) -> int:
        return self.x.degree

    @cached_property
    def closure(self) -> GroupClosure:
        return closure((self.x, self.y))

    @cached_property
    def z(self) -> Perm:
        return (self.x * self.y).inverse()

    @property
    def triple(self) -> tuple[Perm, Perm, Perm]:
        return self.x, self.y, self.z

    @cached_property
    def type(self) -> DessinType:
        return DessinType(self.x.order, self.y.order, self.z.order)

    @cached_property
    def genus(self) -> int:
        return genus(self)

    @property
    def degenerate(self) -> bool:
        return 1 in self.type

    def with_name(self, name: str | None) -> RegularDessin:
        d = RegularDessin.__new__(RegularDessin)
        object.__setattr__(d, "x", self.x)
        object.__setattr__(d, "y", self.y)
        object.__setattr__(d, "name", name)
        d.__dict__["closure"] = self.closure
        return d

    def __repr__(self) -> str:
        label = f"{self.name!r}, " if self.name else ""
        return f"RegularDessin({label}degree={self.degree}, type={tuple(self.type)})"


def from_perms(x: Perm, y: Perm, name: str | None = None) -> RegularDessin:
    return RegularDessin(x, y, name)


def type_of(D: RegularDessin) -> DessinType:
    return D.type


def euler_characteristic(order: int, dtype: tuple[int, int, int]) -> Fraction:
    l, m, n = dtype
    return order * (Fraction(1, l) + Fraction(1, m) + Fraction(1, n) - 1)


def genus(D: RegularDessin) -> int:
    return genus_from(D.order, D.type)


def genus_from(order: int, dtype: tuple[int, int, int]) -> int:
    chi = euler_characteristic(order, dtype)
    if chi.denominator != 1 or chi.numerator % 2:
        raise InternalInvariant(f"Euler characteristic {chi} is not an even integer")
    g = 1 - chi.numerator // 2
    if g < 0:
        raise InternalInvariant(f"negative genus {g}")
    return g


def mirror(D: RegularDessin) -> RegularDessin:
    return RegularDessin(D.x.inverse(), D.y.inverse())


def rotate(D: RegularDessin, r: int = 1) -> RegularDessin:
    """Cyclically shift the triple: ``(x, y, z) -> (y, z, x)``, ``r`` times."""
    for _ in range(r % 3):
        D = RegularDessin(D.y, D.z)
    return D


def dual(D: RegularDessin, which: str) -> RegularDessin:
    """Colour-transposing duals: 01 -> (y, x), 12 -> (x, z), 02 -> (z, y)."""
    if which == "01":
        return RegularDessin(D.y, D.x)
    if which == "12":
        return RegularDessin(D.x, D.z)
    if which == "02":
        return RegularDessin(D.z, D.y)
    raise InvalidInput(f"unknown dual {which!r}; expected one of {DUALS}")


def is_isomorphic(D1: RegularDessin, D2: RegularDessin) -> Perm | None:
    """Orientation- and colour-preserving isomorphism as a point map, or None."""
    if D1.degree != D2.degree or D1.type != D2.type:
        return None
    return anchored_relabel((D1.x, D1.y), (D2.x, D2.y))


def is_reflexible(D: RegularDessin) -> bool:
    return is_isomorphic(D, mirror(D)) is not None


@dataclass(frozen=True)
class OrientedMap:
    """Darts with a rotation and a fixed-point-free edge involution."""

    rotation: Perm
    edge_involution: Perm

    def __post_init__(self):
        a = self.edge_involution
        if a.degree != self.rotation.degree or a.degree % 2:
            raise InvalidInput("dart count must be even and shared by both permutations")
        if any(a[i] == i or a[a[i]] != i for i in range(a.degree)):
            raise InvalidInput("edge involution must be a fixed-point-free involution")
        if not is_transitive((self.rotation, a)):
            raise InvalidInput("map is not connected")

    @property
    def dart_count(self) -> int:
        return self.rotation.degree

    @property
    def face_permutation(self) -> Perm:
        return self.rotation * self.edge_involution

    def vertices(self) -> list[tuple[int, ...]]:
        return self.rotation.cycles()

    def edges(self) -> list[tuple[int, ...]]:
        return self.edge_involution.cycles()

    def faces(self) -> list[tuple[int, ...]]:
        return self.face_permutation.cycles()

    def euler_characteristic(self) -> int:
        return len(self.vertices()) - len(self.edges()) + len(self.faces())


def walsh(D: RegularDessin) -> OrientedMap:
    """The bipartite Walsh map: dart ``p`` is edge ``p`` at its black end,
    dart ``d + p`` the same edge at its white end."""
    d = D.degree
    sigma = Perm(list(D.x.images) + [d + q for q in D.y.images], check=False)
    alpha = Perm(list(range(d, 2 * d)) + list(range(d)), check=False)
    return OrientedMap(sigma, alpha)


def map_automorphism_count(M: OrientedMap) -> int:
    """Number of dart permutations commuting with rotation and edge involution."""
    gens = (M.rotation, M.edge_involution)
    return sum(anchored_relabel(gens, gens, 0, c) is not None for c in range(M.dart_count))


def restrict(p: Perm, points: list[int]) -> Perm:
    """Restriction of ``p`` to an invariant set, relabelled in sorted order."""
    pos = {q: k for k, q in enumerate(points)}
    return Perm((pos[p.images[q]] for q in points), check=False)


def walsh_inverse(D: RegularDessin) -> RegularDessin:
    """The dessin whose Walsh map is the bipartite map described by ``D`` (``m = 2``)."""
    if D.type.m != 2:
        raise NotAMap(f"y has order {D.type.m}, not 2")
    white = D.y * D.x * D.y
    even = closure((D.x, white), cap=D.order)
    if len(even) == D.order:
        raise NotBipartite("<x, yxy> is the whole group")
    if 2 * len(even) != D.order:
        raise InternalInvariant("vertex-colour subgroup does not have index 2")
    points = even.orbit(0)
    return RegularDessin(restrict(D.x, points), restrict(white, points))
