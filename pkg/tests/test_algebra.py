import itertools
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from forceproof import (
    AlgebraSignature,
    IncompatibleAlgebraError,
    card,
    complement,
    implies,
    join,
    meet,
    moebius_over_subsets,
    moebius_over_supersets,
    zeta_over_subsets,
    zeta_over_supersets,
)
from forceproof import oracle
from forceproof.algebra import membership, popcounts
from forceproof.errors import TableSizeError


class TestSignature:
    def test_indices(self, xy):
        assert xy.size == 4
        assert xy.bottom.bits == 0 and xy.top.bits == 3
        assert xy.element(["y"]).bits == 2
        assert xy.names(3) == ["x", "y"]
        assert xy.label(0) == "F" and xy.label(3) == "T" and xy.label(1) == "{x}"

    @pytest.mark.parametrize("atoms", [(), ("x", "x"), ("",), (1,)])
    def test_rejects_bad_atoms(self, atoms):
        with pytest.raises(ValueError):
            AlgebraSignature(atoms)

    def test_atom_cap(self):
        AlgebraSignature.numbered("a", 16)
        with pytest.raises(TableSizeError):
            AlgebraSignature.numbered("a", 17)

    def test_unknown_atom(self, xy):
        with pytest.raises(ValueError):
            xy.element(["z"])

    def test_element_range(self, xy):
        with pytest.raises(ValueError):
            xy.from_bits(4)


class TestElementOps:
    def test_complement(self, xy):
        x, y = xy.element(["x"]), xy.element(["y"])
        assert complement(x) == y
        assert complement(xy.bottom) == xy.top
        assert complement(xy.top) == xy.bottom
        assert ~~x == x

    def test_implies(self, xy):
        x, y, t = xy.element(["x"]), xy.element(["y"]), xy.top
        assert implies(x, t)
        assert implies(xy.bottom, y)
        assert not implies(x, y)
        assert x <= t

    def test_meet_join_card(self, xy):
        x, y, t = xy.element(["x"]), xy.element(["y"]), xy.top
        assert meet(x, t) == x
        assert join(x, y) == t
        assert card(t) == 2
        assert (x | y) == t and (x & y) == xy.bottom

    def test_mismatched_algebras(self, xy):
        other = AlgebraSignature.of("u", "v")
        for op in (implies, meet, join):
            with pytest.raises(IncompatibleAlgebraError):
                op(xy.top, other.top)

    def test_implies_is_material_implication(self):
        # A1 => A2 means A1^C v A2 = T
        alg = AlgebraSignature.numbered("a", 3)
        for a1, a2 in itertools.product(alg.elements(), repeat=2):
            assert implies(a1, a2) == (join(complement(a1), a2) == alg.top)

    def test_helpers(self):
        assert popcounts(3).tolist() == [0, 1, 1, 2, 1, 2, 2, 3]
        assert membership(2).tolist() == [[False, False], [True, False], [False, True], [True, True]]


class TestTransforms:
    def test_moebius_of_constant(self):
        assert moebius_over_subsets([1, 1, 1, 1]).tolist() == [1, 0, 0, 0]
        assert moebius_over_supersets([1, 1, 1, 1]).tolist() == [0, 0, 0, 1]

    def test_moebius_example(self):
        # direct alternating sums: T -> 1.0 - 0.3 - 0.7 + 0 = 0
        v = [0, 0.3, 0.7, 1.0]
        assert oracle.naive_moebius_over_subsets(v) == pytest.approx([0, 0.3, 0.7, 0], abs=1e-15)
        assert moebius_over_subsets(v) == pytest.approx([0, 0.3, 0.7, 0], abs=1e-15)

    def test_zeta_example(self):
        v = [0, 0.3, 0.7, 0]
        assert oracle.naive_zeta_over_subsets(v) == pytest.approx([0, 0.3, 0.7, 1.0])
        assert zeta_over_subsets(v) == pytest.approx([0, 0.3, 0.7, 1.0])

    def test_superset_moebius_on_e1_column(self):
        # FP(., {y}) for the E1 fixture, indices F, {x}, {y}, T
        col = [1, 0.75, 1, 0.75]
        expected = [0, 0, 0.25, 0.75]
        assert oracle.naive_moebius_over_supersets(col) == expected
        assert moebius_over_supersets(col).tolist() == expected

    @pytest.mark.parametrize("n", [0, 3, 6])
    def test_non_power_of_two(self, n):
        for fn in (moebius_over_subsets, zeta_over_subsets, moebius_over_supersets, zeta_over_supersets):
            with pytest.raises(ValueError):
                fn(np.zeros(n))

    def test_input_not_mutated(self):
        v = np.array([1.0, 2.0, 3.0, 4.0])
        moebius_over_subsets(v)
        assert v.tolist() == [1.0, 2.0, 3.0, 4.0]

    def test_axis(self, rng):
        t = rng.random((8, 4))
        rows = np.array([moebius_over_subsets(r) for r in t])
        cols = np.array([moebius_over_supersets(c) for c in t.T]).T
        assert np.array_equal(moebius_over_subsets(t, axis=1), rows)
        assert np.array_equal(moebius_over_supersets(t, axis=0), cols)

    @pytest.mark.parametrize("m", range(0, 7))
    def test_inversion(self, rng, m):
        for _ in range(20):
            v = rng.normal(size=1 << m)
            for zeta, moeb in ((zeta_over_subsets, moebius_over_subsets),
                               (zeta_over_supersets, moebius_over_supersets)):
                assert np.max(np.abs(zeta(moeb(v)) - v), initial=0) <= 1e-12
                assert np.max(np.abs(moeb(zeta(v)) - v), initial=0) <= 1e-12

    @pytest.mark.parametrize("m", range(0, 5))
    def test_oracle_equivalence_exact(self, rng, m):
        # quarter-valued inputs keep every partial sum exact in binary
        grid = np.array([0, 0.25, 0.5, 0.75, 1.0])
        for _ in range(50):
            v = rng.choice(grid, size=1 << m)
            assert moebius_over_subsets(v).tolist() == oracle.naive_moebius_over_subsets(v)
            assert zeta_over_subsets(v).tolist() == oracle.naive_zeta_over_subsets(v)
            assert moebius_over_supersets(v).tolist() == oracle.naive_moebius_over_supersets(v)
            assert zeta_over_supersets(v).tolist() == oracle.naive_zeta_over_supersets(v)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(1, 5).flatmap(
        lambda m: st.lists(st.floats(0, 1), min_size=m, max_size=m).filter(lambda w: sum(w) > 1e-3)))
    def test_moebius_of_additive_measure_is_nonnegative(self, weights):
        w = np.array(weights) / sum(weights)
        p = membership(len(w)).astype(float) @ w
        assert moebius_over_subsets(p).min() >= -1e-12


@pytest.mark.parametrize("n", range(1, 13))
def test_alternating_binomial_sum(n):
    assert sum(comb(n, k) * (-1) ** (n - k) for k in range(n + 1)) == 0
