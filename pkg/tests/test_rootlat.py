from fractions import Fraction

import numpy as np
import pytest

from voacensus import rootlat as rl


@pytest.mark.parametrize("tag,count", [
    ("A1", 2), ("A2", 6), ("A5", 30), ("A7", 56),
    ("D2", 4), ("D4", 24), ("D6", 60), ("D8", 112),
    ("E6", 72), ("E7", 126), ("E8", 240),
    ("E8H", 240), ("D4C", 24), ("D6C", 60), ("D8C", 112),
])
def test_root_counts(tag, count):
    lat = rl.build_lattice(tag)
    assert len(lat.roots) == count
    assert lat.coxeter_number * lat.rank == count
    norms = (lat.roots * lat.roots).sum(axis=1)
    assert (norms == 2 * lat.scale_sq).all()


def test_coxeter_and_charges():
    e8 = rl.build_lattice("E8")
    assert e8.coxeter_number == 30
    assert Fraction(2 * 8, 30 + 2) == Fraction(1, 2)
    a1 = rl.build_lattice("A1")
    assert a1.coxeter_number == 2
    assert Fraction(2 * 1, 2 + 2) == Fraction(1, 2)
    e7 = rl.build_lattice("E7")
    assert len(e7.pairs) == 63


def test_invalid_tags():
    for bad in ("F4", "A0", "Q3", "D1"):
        with pytest.raises(rl.LatticeError):
            rl.build_lattice(bad)


def test_weyl_reflect_basics():
    lat = rl.build_lattice("E8")
    alpha = lat.roots[0]
    assert (lat.weyl_reflect(alpha, alpha) == -alpha).all()
    perp = next(r for r in lat.roots if int(np.dot(r, alpha)) == 0)
    assert (lat.weyl_reflect(alpha, perp) == perp).all()
    with pytest.raises(rl.LatticeError):
        lat.weyl_reflect(np.array([1, 0, 0, 0, 0, 0, 0, 0]), alpha)


def test_weyl_reflect_preserves_gram():
    lat = rl.build_lattice("E6")
    rng = np.random.RandomState(7)
    roots = lat.roots
    for _ in range(50):
        a = roots[rng.randint(len(roots))]
        u = roots[rng.randint(len(roots))]
        v = roots[rng.randint(len(roots))]
        ru, rv = lat.weyl_reflect(a, u), lat.weyl_reflect(a, v)
        assert lat.inner(ru, rv) == lat.inner(u, v)


def test_root_orbit_transitive():
    # the reflection closure of one root reaches all of them
    lat = rl.build_lattice("E8")
    roots = {tuple(r) for r in lat.roots.tolist()}
    seen = {tuple(lat.roots[0])}
    frontier = [lat.roots[0]]
    gens = lat.roots[:16]
    while frontier:
        v = frontier.pop()
        for a in gens:
            w = tuple(lat.weyl_reflect(a, v))
            if w not in seen:
                seen.add(w)
                frontier.append(np.array(w))
    assert seen == roots


def test_mod2_census():
    lat = rl.build_lattice("E8")
    classes = lat.mod2_classes()
    kinds = {}
    for cl in classes:
        kinds[cl.kind] = kinds.get(cl.kind, 0) + 1
    assert kinds == {"zero": 1, "root-pair": 120, "frame": 135}
    assert len(classes) == 256


def test_mod2_frame_classes_are_frames():
    lat = rl.build_lattice("E8")
    for cl in lat.mod2_classes():
        if cl.kind == "frame":
            arr = np.array(cl.min_vectors, dtype=np.int64)
            assert len(arr) == 16
            gram = arr @ arr.T // lat.scale_sq
            assert np.isin(gram, [-4, 0, 4]).all()
            assert (np.diag(gram) == 4).all()
        elif cl.kind == "root-pair":
            assert len(cl.min_vectors) == 2


def test_class_of_consistency():
    lat = rl.build_lattice("E8")
    cl = lat.class_of(lat.roots[5])
    assert cl.kind == "root-pair"
    assert lat.class_of(np.zeros(8, dtype=np.int64)).kind == "zero"
    doubled = 2 * lat.basis[0]
    assert lat.class_of(doubled).kind == "zero"


def test_sublattice_embedding_a1_e7():
    emb = rl.sublattice_embedding("A1_E7_in_E8")
    axis, perp = emb.components
    assert len(axis) == 2 and len(perp) == 126
    a0 = np.array(emb.alpha0)
    assert all(int(np.dot(r, a0)) == 0 for r in perp)


def test_sublattice_embedding_a7_e7():
    emb = rl.sublattice_embedding("A7_in_E7_with_xi")
    lat = emb.ambient
    xi = np.array(emb.glue, dtype=np.int64)
    assert tuple(xi) not in {tuple(r) for r in emb.sub_roots}
    # xi is in the ambient lattice, 2*xi is in the sublattice span integrally
    assert xi in lat
    sub = np.array([np.asarray(r) for r in emb.sub_roots])
    from voacensus.rootlat import _hnf_basis as _row_basis
    basis = _row_basis(sub)
    assert len(basis) == 7
    coords = _solve_int(basis, 2 * xi)
    assert coords is not None
    # index two: every ambient root is in the sublattice span or xi + span
    half = _solve_int(basis, xi)
    assert half is None


def test_sublattice_embedding_e6():
    emb = rl.sublattice_embedding("A5_A1_in_E6_with_xi")
    l1, l2 = emb.components
    assert len(l1) == 30 and len(l2) == 2
    xi = np.array(emb.glue, dtype=np.int64)
    assert xi in emb.ambient


def _solve_int(basis, v):
    sol = np.linalg.lstsq(np.array(basis, dtype=float).T,
                          np.array(v, dtype=float), rcond=None)[0]
    rounded = np.round(sol).astype(np.int64)
    if (rounded @ basis == v).all():
        return rounded
    return None


def test_unknown_embedding():
    with pytest.raises(rl.LatticeError):
        rl.sublattice_embedding("A3_in_D7")


def test_norm_counts_known_thetas():
    counts = rl.norm_counts(rl.build_lattice("E8"), 4)
    assert counts[Fraction(0)] == 1
    assert counts[Fraction(2)] == 240
    assert counts[Fraction(4)] == 2160
    counts7 = rl.norm_counts(rl.build_lattice("E7"), 2)
    assert counts7[Fraction(2)] == 126


def test_norm_counts_shifted_coset():
    emb = rl.sublattice_embedding("A7_in_E7_with_xi")
    sub = np.array([np.asarray(r) for r in emb.sub_roots])
    lat = rl.RootLattice("A7It", "A", 7, 8, emb.ambient.scale_sq, sub)
    counts = rl.norm_counts(lat, 4, np.array(emb.glue, dtype=np.int64))
    # the shifted coset has no vectors of norm below 3/2 and none of norm 0
    assert all(n >= Fraction(3, 2) for n in counts)
    assert sum(c for n, c in counts.items() if n == min(counts)) > 0


def test_root_isometry_models():
    e8 = rl.build_lattice("E8")
    e8h = rl.build_lattice("E8H")
    T = rl.root_isometry(e8, e8h)
    assert T is not None
    # bijective on roots with exact preservation of inner products
    imgs = set()
    for r in e8.roots:
        img = rl._apply_fraction_map(T, r)
        assert all(x.denominator == 1 for x in img)
        imgs.add(tuple(int(x) for x in img))
    assert imgs == {tuple(r) for r in e8h.roots.tolist()}
