import numpy as np
import pytest

from forceproof import classify, validate_axioms, validate_relation, relation_from_atom_pairs
from forceproof.sampling import (
    algebra,
    random_argument,
    random_atom_pairs,
    random_discrete_table,
    random_dyadic_argument,
    random_implication_argument,
    random_inference_argument,
    random_mass,
)


@pytest.mark.parametrize("m, n", [(1, 1), (1, 4), (3, 2), (4, 4)])
def test_generators_are_valid(rng, m, n):
    for _ in range(10):
        a = random_argument(rng, m, n)
        assert validate_axioms(a.table, a.domain, a.codomain) == []
        d = random_dyadic_argument(rng, m, n)
        assert np.all(d.table * 16 == np.round(d.table * 16))
        t = random_discrete_table(rng, m, n)
        assert validate_axioms(t, algebra(m), algebra(n, "b")) == []
        assert set(np.unique(t)) <= {0.0, 1.0}


def test_inference_and_implication_samplers(rng):
    for _ in range(50):
        m, n = (int(x) for x in rng.integers(1, 5, size=2))
        assert classify(random_inference_argument(rng, m, n)).inference
        assert classify(random_implication_argument(rng, m, n)).implication


def test_atom_pairs_cover(rng):
    for _ in range(50):
        m, n = (int(x) for x in rng.integers(1, 5, size=2))
        pairs = random_atom_pairs(rng, m, n)
        assert {i for i, _ in pairs} == set(range(m))
        assert {j for _, j in pairs} == set(range(n))
        assert validate_relation(relation_from_atom_pairs(algebra(m), algebra(n, "b"), pairs)) == []


def test_random_mass(rng):
    alg = algebra(3)
    m = random_mass(rng, alg, normalized=True)
    assert m.normalized and abs(m.total() - 1) <= 1e-12
