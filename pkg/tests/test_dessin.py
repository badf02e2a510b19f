from __future__ import annotations

import random
from collections import Counter

import pytest

from conftest import SMALL, fixtures
from dessinsym.dessin import (RegularDessin, dual, from_perms, genus, genus_from, is_isomorphic, is_reflexible,
                              map_automorphism_count, mirror, restrict, rotate, type_of, walsh, walsh_inverse)
from dessinsym.errors import NotAMap, NotBipartite, NotRegular
from dessinsym.permgroup import Perm, closure, conjugate
from dessinsym.symmetry import find_gamma

ALL = tuple(fixtures())


def relabel(D: RegularDessin, seed: int) -> RegularDessin:
    images = list(range(D.degree))
    random.Random(seed).shuffle(images)
    pi = Perm(images)
    return RegularDessin(conjugate(D.x, pi), conjugate(D.y, pi))


def test_from_perms_examples():
    c = Perm([1, 2, 0])
    assert type_of(from_perms(c, c)) == (3, 3, 3)
    with pytest.raises(NotRegular):
        from_perms(Perm.from_cycles(4, (0, 1)), Perm.from_cycles(4, (2, 3)))
    b = fixtures()["biggs8"]
    assert (b.degree, tuple(b.type)) == (56, (7, 2, 7))


@pytest.mark.parametrize("name, dtype, g", [
    ("c3", (3, 3, 3), 1),
    ("c3_star", (3, 3, 1), 0),
    ("c6_star", (6, 6, 1), 0),
    ("torus44", (4, 2, 4), 1),
    ("torus36", (6, 2, 3), 1),
    ("biggs8", (7, 2, 7), 7),
    ("klein21", (3, 3, 7), 3),
    ("exceptional3", (14, 14, 7), 41),
    ("join_biggs8_v4", (14, 2, 14), 41),
])
def test_type_and_genus(name, dtype, g):
    D = fixtures()[name]
    assert tuple(type_of(D)) == dtype
    assert genus(D) == g


def test_degenerate_flag():
    assert fixtures()["c3_star"].degenerate
    assert not fixtures()["c3"].degenerate


@pytest.mark.parametrize("name", ALL)
def test_triple_product_is_identity(name):
    D = fixtures()[name]
    assert (D.x * D.y * D.z).is_identity()


def test_mirror_examples(fx):
    assert is_isomorphic(fx["c3"], mirror(fx["c3"])) is not None
    assert is_isomorphic(fx["biggs8"], mirror(fx["biggs8"])) is None


def test_rotate_types(fx):
    assert tuple(rotate(fx["biggs8"]).type) == (2, 7, 7)
    assert tuple(rotate(fx["exceptional3"]).type) == (14, 7, 14)


@pytest.mark.parametrize("name", ALL)
def test_exact_identities(name):
    D = fixtures()[name]
    assert mirror(mirror(D)) == D
    assert rotate(rotate(rotate(D))) == D
    assert rotate(D, 3) == D
    assert dual(dual(D, "01"), "01") == D


@pytest.mark.parametrize("name", SMALL)
def test_dual_involutions_up_to_isomorphism(name):
    D = fixtures()[name]
    for which in ("02", "12"):
        assert is_isomorphic(dual(dual(D, which), which), D) is not None


def test_dual02_type_bookkeeping(fx):
    for D in fx.values():
        l, m, n = D.type
        assert tuple(dual(D, "02").type) == (n, m, l)
        assert tuple(dual(D, "01").type) == (m, l, n)
        assert tuple(dual(D, "12").type) == (l, n, m)


# each operation with the permutation it induces on colour positions
OPS = {
    "id": (lambda D: D, (0, 1, 2)),
    "rot": (lambda D: rotate(D), (1, 2, 0)),
    "rot2": (lambda D: rotate(D, 2), (2, 0, 1)),
    "d01": (lambda D: dual(D, "01"), (1, 0, 2)),
    "d12": (lambda D: dual(D, "12"), (0, 2, 1)),
    "d02": (lambda D: dual(D, "02"), (2, 1, 0)),
}
BY_ARRAY = {arr: name for name, (_, arr) in OPS.items()}


@pytest.mark.parametrize("name", ["s3", "klein21", "biggs8", "c3", "v4", "c6_star"])
def test_duality_operations_compose_like_s3(name):
    D = fixtures()[name]
    for a, (fa, arr_a) in OPS.items():
        for b, (fb, arr_b) in OPS.items():
            composite = tuple(arr_a[arr_b[i]] for i in range(3))
            expected = OPS[BY_ARRAY[composite]][0](D)
            assert is_isomorphic(fb(fa(D)), expected) is not None, (a, b)


@pytest.mark.parametrize("name", ALL)
def test_invariance_under_structural_operations(name):
    D = fixtures()[name]
    for op, _ in OPS.values():
        E = op(D)
        assert (E.genus, E.order, E.degree) == (D.genus, D.order, D.degree)
    M = mirror(D)
    assert (M.genus, M.order) == (D.genus, D.order)


def test_biggs8_mirror_of_vertex_face_dual(fx):
    b = fx["biggs8"]
    assert is_isomorphic(b, mirror(dual(b, "02"))) is not None


@pytest.mark.parametrize("name", SMALL)
def test_isomorphism_is_an_equivalence(name):
    D = fixtures()[name]
    E, F = relabel(D, 1), relabel(D, 2)
    assert is_isomorphic(D, D).is_identity()
    phi = is_isomorphic(D, E)
    assert phi is not None
    assert is_isomorphic(E, D) == phi.inverse()
    psi = is_isomorphic(E, F)
    assert is_isomorphic(D, F) == phi * psi


def test_isomorphism_requires_matching_type(fx):
    assert is_isomorphic(fx["c3"], fx["c3_star"]) is None
    assert is_isomorphic(fx["torus44"], fx["torus36"]) is None


@pytest.mark.parametrize("name, expected", [
    ("c3", True), ("c4", True), ("v4", True), ("s3", True), ("tetrahedron", True),
    ("torus44", False), ("torus36", False), ("biggs8", False), ("klein21", False), ("exceptional3", False),
])
def test_is_reflexible(name, expected):
    assert is_reflexible(fixtures()[name]) is expected


@pytest.mark.parametrize("name", ALL)
def test_walsh_counts(name):
    D = fixtures()[name]
    l, m, n = D.type
    M = walsh(D)
    d = D.degree
    assert M.dart_count == 2 * d
    black = [v for v in M.vertices() if v[0] < d]
    white = [v for v in M.vertices() if v[0] >= d]
    assert Counter(map(len, black)) == {l: d // l}
    assert Counter(map(len, white)) == {m: d // m}
    assert Counter(map(len, M.faces())) == {2 * n: d // n}
    assert M.euler_characteristic() == 2 - 2 * D.genus


def test_walsh_examples(fx):
    M = walsh(fx["c3"])
    assert M.dart_count == 6 and len(M.vertices()) == 2
    assert map_automorphism_count(M) == 6
    assert len([v for v in walsh(fx["biggs8"]).vertices() if len(v) == 7]) == 8
    faces = walsh(fx["exceptional3"]).faces()
    assert len(faces) == 16 and {len(f) for f in faces} == {14}


@pytest.mark.parametrize("name", ALL)
def test_walsh_automorphism_count(name):
    D = fixtures()[name]
    count = map_automorphism_count(walsh(D))
    assert count in (D.order, 2 * D.order)
    assert (count == 2 * D.order) == (find_gamma(D) is not None)


def test_walsh_exceptional_is_regular(fx):
    assert map_automorphism_count(walsh(fx["exceptional3"])) == 224


def test_walsh_inverse_examples(fx):
    W = walsh_inverse(fx["v4"])
    assert (W.degree, tuple(W.type), W.genus) == (2, (2, 2, 1), 0)
    E = walsh_inverse(fx["join_biggs8_v4"])
    assert (E.degree, tuple(E.type), E.genus) == (112, (14, 14, 7), 41)
    with pytest.raises(NotBipartite):
        walsh_inverse(fx["biggs8"])
    with pytest.raises(NotAMap):
        walsh_inverse(fx["klein21"])


@pytest.mark.parametrize("name", ["v4", "join_biggs8_v4", "torus44"])
def test_walsh_inverse_other_orbit(name):
    D = fixtures()[name]
    if name == "torus44":
        with pytest.raises(NotBipartite):
            walsh_inverse(D)
        return
    W = walsh_inverse(D)
    white = D.y * D.x * D.y
    rest = sorted(set(range(D.degree)) - set(closure((D.x, white)).orbit(0)))
    other = RegularDessin(restrict(D.x, rest), restrict(white, rest))
    assert is_isomorphic(W, other) is not None
    assert W.genus == D.genus


def test_exceptional_genus_two_routes(fx):
    J = fx["join_biggs8_v4"]
    E = fx["exceptional3"]
    assert genus_from(J.order, tuple(J.type)) == genus_from(E.order, tuple(E.type)) == 41
    assert J.order == 2 * E.order
