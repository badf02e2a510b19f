"""Permutations, group closures and anchored relabelling.

Permutations act on the right and products read left to right: ``p * q``
applies ``p`` first and then ``q``, so ``(p * q)(i) == q(p(i))``.  Every
construction in the package relies on this convention, including the
product rule ``x * y * z == 1`` for dessin triples.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from math import lcm
from typing import Iterable, Sequence

from .errors import CapExceeded, GammaNotInvolution, InternalInvariant, InvalidInput, NotGenerating

DEFAULT_CAP = 10**6


class Perm:
    """A bijection of ``{0, ..., d-1}`` stored as its tuple of images."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(images)
        if check:
            if sorted(images) != list(range(len(images))):
                raise InvalidInput(f"not a permutation: {images!r}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> Perm:
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> Perm:
        """Build a permutation from disjoint cycles, e.g. ``from_cycles(4, (0, 1), (2, 3))``."""
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for k, a in enumerate(cycle):
                if a in seen:
                    raise InvalidInput(f"point {a} repeated in cycles {cycles!r}")
                seen.add(a)
                images[a] = cycle[(k + 1) % len(cycle)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __getitem__(self, i: int) -> int:
        return self.images[i]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __mul__(self, other: Perm) -> Perm:
        return compose(self, other)

    def inverse(self) -> Perm:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv, check=False)

    __invert__ = inverse

    def __pow__(self, k: int) -> Perm:
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles, fixed points included, each starting at its least point."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cycle = []
            i = start
            while not seen[i]:
                seen[i] = True
                cycle.append(i)
                i = self.images[i]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> list[int]:
        return sorted(len(c) for c in self.cycles())

    @property
    def order(self) -> int:
        return order_of(self)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Perm):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return f"Perm.identity({self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)
        return f"Perm<{self.degree}>{body}"


def compose(p: Perm, q: Perm) -> Perm:
    """Apply ``p`` then ``q``."""
    if len(p.images) != len(q.images):
        raise InvalidInput(f"degree mismatch: {p.degree} vs {q.degree}")
    return Perm(map(q.images.__getitem__, p.images), check=False)


def order_of(p: Perm) -> int:
    return lcm(*(len(c) for c in p.cycles())) if p.degree else 1


def conjugate(g: Perm, phi: Perm) -> Perm:
    """``phi^-1 * g * phi``: the image of ``g`` under the automorphism with point map ``phi``."""
    return phi.inverse() * g * phi


@dataclass(frozen=True)
class GroupClosure:
    """All elements of the group generated by ``generators``.

    ``elements[0]`` is the identity and ``words[k]`` lists generator
    indices whose left-to-right product is ``elements[k]``; words are
    shortest, ties broken by generator order.
    """

    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...]
    words: tuple[tuple[int, ...], ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return self.elements[0].degree

    @cached_property
    def _index(self) -> dict[Perm, int]:
        return {g: k for k, g in enumerate(self.elements)}

    def __contains__(self, p: Perm) -> bool:
        return p in self._index

    def index(self, p: Perm) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise InvalidInput(f"{p!r} is not an element of this group") from None

    def evaluate(self, word: Sequence[int], generators: Sequence[Perm] | None = None) -> Perm:
        gens = self.generators if generators is None else generators
        result = Perm.identity(gens[0].degree if gens else self.degree)
        for k in word:
            result = result * gens[k]
        return result

    def right_regular(self, p: Perm) -> Perm:
        """``p`` acting on the group's own elements by right multiplication."""
        idx = self._index
        return Perm((idx[g * p] for g in self.elements), check=False)

    def orbit(self, point: int = 0) -> list[int]:
        return sorted({g.images[point] for g in self.elements})


def closure(generators: Iterable[Perm], cap: int = DEFAULT_CAP, degree: int | None = None) -> GroupClosure:
    """Breadth-first closure of ``generators`` under right multiplication."""
    gens = tuple(generators)
    if gens:
        degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise InvalidInput("generators have different degrees")
    elif degree is None:
        raise InvalidInput("degree is required when there are no generators")
    identity = Perm.identity(degree)
    elements = [identity]
    words: list[tuple[int, ...]] = [()]
    seen = {identity}
    i = 0
    while i < len(elements):
        g, w = elements[i], words[i]
        for k, s in enumerate(gens):
            h = g * s
            if h not in seen:
                if len(elements) >= cap:
                    raise CapExceeded(f"group has more than {cap} elements")
                seen.add(h)
                elements.append(h)
                words.append(w + (k,))
        i += 1
    return GroupClosure(gens, tuple(elements), tuple(words))


def is_transitive(generators: Sequence[Perm], degree: int | None = None) -> bool:
    if degree is None:
        degree = generators[0].degree
    seen = {0}
    queue = deque([0])
    while queue:
        p = queue.popleft()
        for g in generators:
            q = g.images[p]
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return len(seen) == degree


def is_regular_pair(x: Perm, y: Perm) -> bool:
    """True iff ``<x, y>`` is transitive of order exactly the degree."""
    if x.degree != y.degree:
        raise InvalidInput("degree mismatch")
    d = x.degree
    if not is_transitive((x, y), d):
        return False
    try:
        return len(closure((x, y), cap=d)) == d
    except CapExceeded:
        return False


def anchored_relabel(
    sources: Sequence[Perm],
    targets: Sequence[Perm],
    base: int = 0,
    target_base: int = 0,
) -> Perm | None:
    """Find the bijection ``phi`` with ``phi(base) == target_base`` and
    ``phi(s_i(p)) == t_i(phi(p))`` for every point and generator.

    ``sources`` must generate a transitive group, which makes ``phi`` unique
    when it exists.  Points are visited breadth first from ``base``; the
    first conflict or collision aborts the search.
    """
    if len(sources) != len(targets):
        raise InvalidInput("sources and targets differ in length")
    if not sources:
        raise InvalidInput("empty generator assignment")
    n = sources[0].degree
    if any(s.degree != n for s in sources) or any(t.degree != n for t in targets):
        raise InvalidInput("generator assignment mixes degrees")
    phi = [-1] * n
    used = [False] * n
    phi[base] = target_base
    used[target_base] = True
    queue = [base]
    pairs = [(s.images, t.images) for s, t in zip(sources, targets)]
    for p in queue:
        fp = phi[p]
        for s, t in pairs:
            q, img = s[p], t[fp]
            cur = phi[q]
            if cur < 0:
                if used[img]:
                    return None
                phi[q] = img
                used[img] = True
                queue.append(q)
            elif cur != img:
                return None
    if len(queue) != n:
        raise InvalidInput("source generators are not transitive")
    return Perm(phi, check=False)


@dataclass(frozen=True)
class GeneratorAssignment:
    sources: tuple[Perm, ...]
    targets: tuple[Perm, ...]

    def __post_init__(self):
        if len(self.sources) != len(self.targets) or not self.sources:
            raise InvalidInput("sources and targets must be non-empty and of equal length")


def hom_extends(a: GeneratorAssignment, check: bool = False) -> Perm | None:
    """Witness that ``s_i -> t_i`` extends to a group isomorphism, or None.

    With ``check=True`` the sources are first verified to act regularly.
    The witness is the point bijection ``phi``; the isomorphism itself is
    ``g -> phi^-1 * g * phi``.
    """
    if check:
        d = a.sources[0].degree
        if not is_transitive(a.sources) or len(closure(a.sources, cap=d + 1)) != d:
            raise InvalidInput("sources do not act regularly")
    return anchored_relabel(a.sources, a.targets)


def automorphism_exists(g: GroupClosure, images: Sequence[Perm]) -> Perm | None:
    """Point map of the automorphism of ``g`` sending its generators to ``images``.

    Returns None when no such automorphism exists.  Raises NotGenerating
    when the images fail to generate the group, which rules out an
    automorphism for a distinct reason.
    """
    images = tuple(images)
    if len(images) != len(g.generators):
        raise InvalidInput("need one image per generator")
    for im in images:
        if im not in g:
            raise InvalidInput(f"{im!r} is not in the group")
    phi = anchored_relabel(g.generators, images)
    if phi is None and len(closure(images, cap=len(g) + 1)) < len(g):
        raise NotGenerating("images generate a proper subgroup")
    return phi


def holomorph_extension(g: GroupClosure, gamma: Perm) -> GroupClosure:
    """The group ``<G, gamma>`` on the points of ``G``'s regular action.

    ``gamma`` is an automorphism point map of order 2; it fixes point 0,
    so it lies outside ``G`` and the extension has order ``2|G|``.  Use
    ``right_regular`` on the result for its regular action.
    """
    if gamma.is_identity() or not (gamma * gamma).is_identity():
        raise GammaNotInvolution("gamma must have order exactly 2")
    if gamma[0] != 0:
        raise InvalidInput("gamma must fix the base point")
    ext = closure(g.generators + (gamma,), cap=2 * len(g) + 1)
    if len(ext) != 2 * len(g):
        raise InternalInvariant(f"<G, gamma> has order {len(ext)}, expected {2 * len(g)}")
    return ext


def split_extension(generators: Sequence[Perm], phi: Perm, k: int) -> tuple[tuple[Perm, ...], Perm]:
    """Regular action of ``G x| C_k`` where the cyclic generator acts through ``phi``.

    ``generators`` act regularly on ``d`` points and ``phi`` is an
    automorphism point map with ``phi**k == 1`` (it may be trivial, which
    gives the direct product).  The result acts on ``d*k`` points ``(p, i)``
    encoded as ``i*d + p``.  Returns the lifted generators and the new
    element ``c``, which satisfies ``c^-1 * g * c == theta(g)`` for
    ``theta(g) = phi^-1 * g * phi``.
    """
    if not (phi**k).is_identity():
        raise InvalidInput(f"automorphism order does not divide {k}")
    d = phi.degree
    lifted = []
    for g in generators:
        images = []
        twisted = g
        for i in range(k):
            images.extend(i * d + twisted.images[p] for p in range(d))
            twisted = conjugate(twisted, phi)
        lifted.append(Perm(images, check=False))
    c = Perm((((i - 1) % k) * d + p for i in range(k) for p in range(d)), check=False)
    return tuple(lifted), c
