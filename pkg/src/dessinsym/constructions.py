"""Example dessins: affine groups, Biggs maps, torus maps, joins and the
exceptional family built from them.

Groups given abstractly are realised through their right-regular action
on their own elements, enumerated breadth first from the identity.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Sequence, TypeVar

from .dessin import RegularDessin, genus_from, walsh_inverse
from .errors import CapExceeded, ConstructionError, InternalInvariant, NotPrimePower, OddPrimeVariantUnsupported
from .gf2 import GF2e, gf2e_field
from .permgroup import DEFAULT_CAP, Perm

T = TypeVar("T", bound=Hashable)


def right_regular_action(identity: T, generators: Sequence[T], mul: Callable[[T, T], T],
                         cap: int = DEFAULT_CAP) -> tuple[list[T], list[Perm]]:
    """Enumerate ``<generators>`` and return each generator as a permutation
    of the enumerated elements (``h -> mul(h, g)``)."""
    elements = [identity]
    index = {identity: 0}
    i = 0
    while i < len(elements):
        h = elements[i]
        for g in generators:
            k = mul(h, g)
            if k not in index:
                if len(elements) >= cap:
                    raise CapExceeded(f"group has more than {cap} elements")
                index[k] = len(elements)
                elements.append(k)
        i += 1
    perms = [Perm((index[mul(h, g)] for h in elements), check=False) for g in generators]
    return elements, perms


@dataclass(frozen=True)
class AffineMap:
    """``t -> a*t + b`` over GF(2^e) (``field`` set) or Z/p (``field`` None, ``p`` set)."""

    a: int
    b: int
    field: GF2e | None = None
    p: int | None = None

    def _mul(self, u: int, v: int) -> int:
        return self.field.mul(u, v) if self.field else u * v % self.p

    def _add(self, u: int, v: int) -> int:
        return u ^ v if self.field else (u + v) % self.p

    def __call__(self, t: int) -> int:
        return self._add(self._mul(self.a, t), self.b)

    def then(self, other: AffineMap) -> AffineMap:
        """Apply ``self`` and then ``other``."""
        return AffineMap(self._mul(other.a, self.a), other(self.b), self.field, self.p)

    def inverse(self) -> AffineMap:
        if self.field:
            ai, neg_b = self.field.inv(self.a), self.b
        else:
            ai, neg_b = pow(self.a, -1, self.p), -self.b % self.p
        return AffineMap(ai, self._mul(ai, neg_b), self.field, self.p)


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, int(n**0.5) + 1))


def primitive_root(p: int) -> int:
    for g in range(1, p):
        if len({pow(g, k, p) for k in range(1, p)}) == p - 1:
            return g
    raise ConstructionError(f"no primitive root mod {p}")


def _affine_dessin(x: AffineMap, y: AffineMap, identity: AffineMap, name: str) -> RegularDessin:
    _, (px, py) = right_regular_action(identity, [x, y], AffineMap.then)
    return RegularDessin(px, py, name)


def biggs_map(q: int, xi: int | None = None) -> RegularDessin:
    """Orientably regular embedding of ``K_q`` with group ``AGL_1(q)``.

    ``x: t -> xi*t`` rotates around a vertex and ``y`` is the edge
    reversal, ``t -> t + 1`` for ``q = 2^e`` and ``t -> 1 - t`` for odd
    prime ``q``.  ``xi`` defaults to the field's stored generator.
    """
    if q >= 4 and q & (q - 1) == 0:
        F = gf2e_field(q.bit_length() - 1)
        xi = F.generator if xi is None else xi
        if F.multiplicative_order(xi) != q - 1:
            raise ConstructionError(f"{xi} is not primitive in GF({q})")
        one = AffineMap(1, 0, F)
        D = _affine_dessin(AffineMap(xi, 0, F), AffineMap(1, 1, F), one, f"biggs:{q}")
        expected = (q - 1) * (q - 4) // 4
        if D.type != (q - 1, 2, q - 1) or D.genus != expected:
            raise InternalInvariant(f"Biggs map for q={q}: type {D.type}, genus {D.genus}")
        return D
    if _is_prime(q) and q > 2:
        xi = primitive_root(q) if xi is None else xi % q
        if len({pow(xi, k, q) for k in range(1, q)}) != q - 1:
            raise ConstructionError(f"{xi} is not a primitive root mod {q}")
        one = AffineMap(1, 0, p=q)
        return _affine_dessin(AffineMap(xi, 0, p=q), AffineMap(q - 1, 1, p=q), one, f"biggs:{q}")
    if q > 2 and _prime_power_base(q):
        raise OddPrimeVariantUnsupported(f"odd prime powers such as {q} are not supported")
    raise NotPrimePower(f"{q} is not a supported prime power")


def _prime_power_base(q: int) -> int | None:
    for p in range(2, q + 1):
        if q % p == 0:
            while q % p == 0:
                q //= p
            return p if q == 1 else None
    return None


def v4_map() -> RegularDessin:
    """Two vertices joined by two edges on the sphere; group V_4."""
    x = Perm.from_cycles(4, (0, 1), (2, 3))
    y = Perm.from_cycles(4, (0, 2), (1, 3))
    return RegularDessin(x, y, "v4")


def trivial_dessin() -> RegularDessin:
    return RegularDessin(Perm.identity(1), Perm.identity(1), "trivial")


def cyclic_dessin(n: int, k: int = 1) -> RegularDessin:
    """``C_n`` with ``x`` the standard ``n``-cycle and ``y = x**k``."""
    x = Perm([(i + 1) % n for i in range(n)])
    return RegularDessin(x, x**k, f"cyclic:{n}:{k}")


TORUS_KINDS = {"44": 5, "36": 7}


def torus_map(kind: str, chiral_variant: str = "12") -> RegularDessin:
    """Chiral torus embeddings of ``K_5`` ({4,4}) and ``K_7`` ({3,6}).

    Variant ``12`` uses the least primitive root ``c`` in ``x: t -> c*t``,
    variant ``21`` uses ``c^-1``; the two are mirror images.
    """
    kind = str(kind)
    if kind not in TORUS_KINDS:
        raise ConstructionError(f"unknown torus kind {kind!r}")
    p = TORUS_KINDS[kind]
    c = primitive_root(p)
    if chiral_variant == "21":
        c = pow(c, -1, p)
    elif chiral_variant != "12":
        raise ConstructionError(f"unknown chiral variant {chiral_variant!r}")
    D = biggs_map(p, xi=c).with_name(f"torus:{kind}:{chiral_variant}")
    if D.genus != 1:
        raise InternalInvariant(f"torus map has genus {D.genus}")
    return D


def join(D1: RegularDessin, D2: RegularDessin, cap: int = DEFAULT_CAP) -> RegularDessin:
    """Componentwise generators on pairs of points, restricted to the orbit of ``(0, 0)``."""
    d2 = D2.degree
    if D1.degree * d2 > cap:
        raise CapExceeded(f"join would act on {D1.degree * d2} points")
    gens = [(D1.x, D2.x), (D1.y, D2.y)]
    orbit = {0: 0}
    queue = [(0, 0)]
    for p1, p2 in queue:
        for g1, g2 in gens:
            q = (g1[p1], g2[p2])
            key = q[0] * d2 + q[1]
            if key not in orbit:
                orbit[key] = len(orbit)
                queue.append(q)
    keys = sorted(orbit)
    pos = {k: i for i, k in enumerate(keys)}

    def act(g1: Perm, g2: Perm) -> Perm:
        return Perm((pos[g1[k // d2] * d2 + g2[k % d2]] for k in keys), check=False)

    name = f"join({D1.name},{D2.name})" if D1.name and D2.name else None
    return RegularDessin(act(D1.x, D2.x), act(D1.y, D2.y), name)


def exceptional_dessin(e: int) -> RegularDessin:
    """Type ``(2n, 2n, n)`` dessin with ``n = 2^e - 1`` whose Walsh map is
    the join of the Biggs map of ``K_{2^e}`` with ``v4_map``."""
    if e < 3:
        raise ConstructionError("exceptional construction needs q = 2^e >= 8")
    q = 1 << e
    n = q - 1
    M3 = join(biggs_map(q), v4_map())
    if M3.order != 4 * q * (q - 1):
        raise InternalInvariant(f"join has order {M3.order}, expected {4 * q * (q - 1)}")
    D = walsh_inverse(M3).with_name(f"exceptional:{e}")
    if D.type != (2 * n, 2 * n, n) or D.genus != n * n - n - 1:
        raise InternalInvariant(f"exceptional dessin: type {D.type}, genus {D.genus}")
    if genus_from(M3.order, M3.type) != D.genus:
        raise InternalInvariant("join and its Walsh preimage disagree on genus")
    return D


def klein21_generators() -> tuple[AffineMap, AffineMap]:
    """``a: t -> t+1`` and ``b: t -> 4t`` over Z/7, so ``b*a*b^-1 == a^2``
    with products read left to right."""
    return AffineMap(1, 1, p=7), AffineMap(4, 0, p=7)


def klein21() -> RegularDessin:
    """The group of order 21 with triple ``(b, b^-1*a, a^-1)`` of type (3, 3, 7)."""
    a, b = klein21_generators()
    x = b
    y = b.inverse().then(a)
    D = _affine_dessin(x, y, AffineMap(1, 0, p=7), "klein21")
    if D.order != 21 or D.type != (3, 3, 7) or D.genus != 3:
        raise InternalInvariant(f"klein21: order {D.order}, type {D.type}, genus {D.genus}")
    return D
