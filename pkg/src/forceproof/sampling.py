"""Random generators for arguments, measures, matrices, relations and masses.

All functions take a ``numpy.random.Generator`` so runs are reproducible.
"""

from __future__ import annotations

import numpy as np

from .algebra import AlgebraSignature
from .argument import Argument, contrapositive
from .constructors import (
    ProbabilityMeasure,
    RowStochasticMatrix,
    argument_from_relation,
    product_argument,
    relation_from_atom_pairs,
)
from .mass import MassFunction


def algebra(m: int, prefix: str = "a") -> AlgebraSignature:
    return AlgebraSignature.numbered(prefix, m)


def _monotone_hull(x: np.ndarray) -> np.ndarray:
    """Smallest table above ``x`` that decreases in A and increases in B."""
    y = x.copy()
    na, nb = y.shape
    for i in range(na.bit_length() - 1):
        v = y.reshape(-1, 2, 1 << i, nb)
        np.maximum(v[:, 0], v[:, 1], out=v[:, 0])
    for j in range(nb.bit_length() - 1):
        v = y.reshape(na, -1, 2, 1 << j)
        np.maximum(v[:, :, 1], v[:, :, 0], out=v[:, :, 1])
    return y


def random_valid_table(rng: np.random.Generator, m: int, n: int, *, power: float | None = None) -> np.ndarray:
    """A random table satisfying axioms i-v.

    Uniform noise is pushed up to its monotone hull, then the boundary rows
    and the ``(T, F)`` corner are fixed. ``power`` > 1 skews entries towards 0.
    """
    x = rng.random((1 << m, 1 << n))
    if power is None:
        power = float(rng.choice([1.0, 2.0, 4.0, 8.0]))
    y = _monotone_hull(x ** power)
    y[0, :] = 1.0
    y[:, -1] = 1.0
    y[-1, 0] = 0.0
    return y


def random_argument(rng: np.random.Generator, m: int, n: int, **kw) -> Argument:
    return Argument(algebra(m, "a"), algebra(n, "b"), random_valid_table(rng, m, n, **kw))


def random_dyadic_argument(rng: np.random.Generator, m: int, n: int, bits: int = 4) -> Argument:
    """Valid argument whose entries are multiples of ``2**-bits``, so transforms are exact."""
    y = np.floor(random_valid_table(rng, m, n) * (1 << bits)) / (1 << bits)
    return Argument(algebra(m, "a"), algebra(n, "b"), y)


def random_discrete_table(rng: np.random.Generator, m: int, n: int) -> np.ndarray:
    """Random {0,1}-valued valid table: a thresholded monotone table."""
    y = random_valid_table(rng, m, n, power=1.0)
    t = rng.uniform(0.05, 1.0)
    return (y >= t).astype(np.float64)


def random_measure(rng: np.random.Generator, m: int, alg: AlgebraSignature | None = None) -> ProbabilityMeasure:
    w = rng.dirichlet(np.full(m, rng.choice([0.3, 1.0, 3.0])))
    w = w / w.sum()
    return ProbabilityMeasure(alg or algebra(m, "a"), w)


def random_stochastic(rng: np.random.Generator, m: int, n: int) -> RowStochasticMatrix:
    rows = rng.dirichlet(np.full(n, rng.choice([0.3, 1.0, 3.0])), size=m)
    return RowStochasticMatrix(rows / rows.sum(axis=1, keepdims=True))


def random_atom_pairs(rng: np.random.Generator, m: int, n: int, density: float = 0.3) -> list[tuple[int, int]]:
    """Random atom pairs covering every atom on both sides."""
    pairs = {(i, j) for i in range(m) for j in range(n) if rng.random() < density}
    for i in range(m):
        if not any(p[0] == i for p in pairs):
            pairs.add((i, int(rng.integers(n))))
    for j in range(n):
        if not any(p[1] == j for p in pairs):
            pairs.add((int(rng.integers(m)), j))
    return sorted(pairs)


def random_inference_argument(rng: np.random.Generator, m: int, n: int,
                              domain: AlgebraSignature | None = None,
                              codomain: AlgebraSignature | None = None) -> Argument:
    """Random uncertain inference argument, generally outside the product class.

    A convex mixture of a product argument and the contrapositive of a
    relation argument. Both have nonnegative backward kernels, and the
    kernel is linear in the table, so the mixture does too.
    """
    domain = domain or algebra(m, "a")
    codomain = codomain or algebra(n, "b")
    prod = product_argument(random_stochastic(rng, m, n), domain, codomain)
    rel = relation_from_atom_pairs(codomain, domain, random_atom_pairs(rng, n, m))
    disc = contrapositive(argument_from_relation(rel))
    w = rng.random()
    return Argument(domain, codomain, w * prod.table + (1 - w) * disc.table)


def random_implication_argument(rng: np.random.Generator, m: int, n: int,
                                domain: AlgebraSignature | None = None,
                                codomain: AlgebraSignature | None = None) -> Argument:
    """Random uncertain implication argument: contrapositive of an inference one."""
    return contrapositive(random_inference_argument(rng, n, m, codomain, domain))


def random_mass(rng: np.random.Generator, alg: AlgebraSignature, *, normalized: bool = False,
                sparsity: float = 0.5) -> MassFunction:
    w = rng.random(alg.size) * (rng.random(alg.size) >= sparsity)
    if normalized:
        w[0] = 0.0
    if w.sum() == 0:
        w[-1] = 1.0
    return MassFunction(alg, w / w.sum())
