"""Families of arguments built from simpler data.

* :func:`prototypical` -- ``FP(A1, A2) = p(A1^C v A2)`` for an additive
  probability ``p`` on a single algebra.
* :func:`product_argument` -- per-atom rows of a row-stochastic matrix,
  multiplied across the atoms of the premise.
* :func:`argument_from_relation` -- the discrete argument induced by a
  compatibility relation.
* :func:`identity_argument` -- ``FP(A, B) = 1`` iff ``A <= B``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .algebra import (
    MAX_TABLE_BITS,
    AlgebraSignature,
    Element,
    as_bits,
    check_table_bits,
    membership,
)
from .argument import DEFAULT_TOL, Argument, Violation
from .errors import RelationError

MEASURE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class ProbabilityMeasure:
    """An additive probability on an algebra, given by its atom weights."""

    algebra: AlgebraSignature
    atom_probs: np.ndarray

    def __post_init__(self):
        probs = np.array(self.atom_probs, dtype=np.float64)
        if probs.shape != (self.algebra.atom_count,):
            raise ValueError(
                f"expected {self.algebra.atom_count} atom probabilities, got shape {probs.shape}"
            )
        if not np.all(np.isfinite(probs)) or np.any(probs < 0):
            raise ValueError("atom probabilities must be finite and nonnegative")
        if abs(probs.sum() - 1.0) > MEASURE_TOL:
            raise ValueError(f"atom probabilities sum to {probs.sum()!r}, not 1")
        probs.flags.writeable = False
        object.__setattr__(self, "atom_probs", probs)

    def __call__(self, a: Element | int) -> float:
        bits = as_bits(a)
        return float(sum(p for i, p in enumerate(self.atom_probs) if bits >> i & 1))

    def values(self) -> np.ndarray:
        """``p(A)`` for every element index."""
        return membership(self.algebra.atom_count).astype(np.float64) @ self.atom_probs


@dataclass(frozen=True, eq=False)
class RowStochasticMatrix:
    """Nonnegative ``m x n`` matrix whose rows each sum to 1."""

    rows: np.ndarray

    def __post_init__(self):
        rows = np.array(self.rows, dtype=np.float64)
        if rows.ndim != 2 or 0 in rows.shape:
            raise ValueError(f"expected a non-empty 2-D matrix, got shape {rows.shape}")
        if not np.all(np.isfinite(rows)) or np.any(rows < 0):
            raise ValueError("stochastic matrix entries must be finite and nonnegative")
        sums = rows.sum(axis=1)
        bad = np.flatnonzero(np.abs(sums - 1.0) > MEASURE_TOL)
        if bad.size:
            raise ValueError(f"row {bad[0]} sums to {sums[bad[0]]!r}, not 1")
        rows.flags.writeable = False
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows.shape


def prototypical(p: ProbabilityMeasure, *, max_table_bits: int = MAX_TABLE_BITS) -> Argument:
    """The argument ``FP(A1, A2) = p(A1^C v A2)`` on ``p``'s algebra."""
    alg = p.algebra
    check_table_bits(alg.atom_count, alg.atom_count, max_table_bits)
    idx = np.arange(alg.size)
    table = p.values()[(alg.full_mask ^ idx)[:, None] | idx[None, :]]
    return Argument(alg, alg, table, max_table_bits=max_table_bits)


def _singleton_force(P: RowStochasticMatrix, n: int) -> np.ndarray:
    # FP({a_i}, B) = sum of p_ij over b_j in B, shape (m, 2**n)
    return P.rows @ membership(n).T.astype(np.float64)


def product_argument(P: RowStochasticMatrix, domain: AlgebraSignature, codomain: AlgebraSignature,
                     *, max_table_bits: int = MAX_TABLE_BITS) -> Argument:
    """Product-class argument: ``FP(A, B)`` is the product over atoms ``a_i`` in ``A`` of
    ``sum_{b_j in B} p_ij`` (the empty product is 1)."""
    m, n = domain.atom_count, codomain.atom_count
    if P.shape != (m, n):
        raise ValueError(f"matrix shape {P.shape} does not match {m} x {n} atoms")
    check_table_bits(m, n, max_table_bits)
    single = _singleton_force(P, n)
    table = np.ones((1, codomain.size))
    for i in range(m):
        table = np.vstack([table, table * single[i]])
    return Argument(domain, codomain, table, max_table_bits=max_table_bits)


def product_forward_closed_form(P: RowStochasticMatrix, a: Element | int, b: Element | int) -> float:
    """``->FP(A, B) = FP(A, B) * prod over a_i not in A of (1 - FP({a_i}, B))``."""
    a, b = as_bits(a), as_bits(b)
    m, n = P.shape
    single = [float(P.rows[i] @ ((b >> np.arange(n)) & 1)) for i in range(m)]
    out = 1.0
    for i in range(m):
        out *= single[i] if a >> i & 1 else 1.0 - single[i]
    return out


class RelationMode(enum.Enum):
    STRICT = "strict"
    GENERATED = "generated"


@dataclass(frozen=True, eq=False)
class CompatibilityRelation:
    """A dense boolean relation over ``domain x codomain`` element pairs."""

    domain: AlgebraSignature
    codomain: AlgebraSignature
    pairs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.pairs, dtype=bool)
        if arr.shape != (self.domain.size, self.codomain.size):
            raise ValueError(
                f"relation shape {arr.shape} does not match ({self.domain.size}, {self.codomain.size})"
            )
        arr.flags.writeable = False
        object.__setattr__(self, "pairs", arr)

    def __call__(self, a: Element | int, b: Element | int) -> bool:
        return bool(self.pairs[as_bits(a), as_bits(b)])

    def __eq__(self, other):
        if not isinstance(other, CompatibilityRelation):
            return NotImplemented
        return (self.domain == other.domain and self.codomain == other.codomain
                and np.array_equal(self.pairs, other.pairs))

    __hash__ = None

    @classmethod
    def from_element_pairs(cls, domain, codomain, element_pairs: Iterable[tuple[int, int]]):
        arr = np.zeros((domain.size, codomain.size), dtype=bool)
        for a, b in element_pairs:
            arr[int(a), int(b)] = True
        return cls(domain, codomain, arr)

    def element_pairs(self) -> list[tuple[int, int]]:
        return [(int(a), int(b)) for a, b in np.argwhere(self.pairs)]


def relation_from_atom_pairs(domain: AlgebraSignature, codomain: AlgebraSignature,
                             atom_pairs: Iterable[tuple[int, int]]) -> CompatibilityRelation:
    """``A CR B`` iff some pair ``(i, j)`` has atom ``i`` in ``A`` and atom ``j`` in ``B``.

    Atom indices are 0-based. Every atom on both sides must occur in a pair,
    otherwise ``T`` fails to relate to that atom's singleton (conditions 2 and 4).
    """
    m, n = domain.atom_count, codomain.atom_count
    reach = [0] * m
    for i, j in atom_pairs:
        i, j = int(i), int(j)
        if not (0 <= i < m and 0 <= j < n):
            raise RelationError(f"atom pair ({i}, {j}) out of range for {m} x {n} atoms")
        reach[i] |= 1 << j
    for i in range(m):
        if not reach[i]:
            raise RelationError(
                f"domain atom {domain.atoms[i]!r} has no partner: condition 4 "
                f"(A CR T for A != F) fails for A = {{{domain.atoms[i]}}}"
            )
    covered = 0
    for r in reach:
        covered |= r
    for j in range(n):
        if not covered >> j & 1:
            raise RelationError(
                f"codomain atom {codomain.atoms[j]!r} has no partner: condition 2 "
                f"(T CR B for B != F) fails for B = {{{codomain.atoms[j]}}}"
            )
    # reach of an element is the union of its atoms' reaches
    reach_el = np.zeros(1, dtype=np.int64)
    for i in range(m):
        reach_el = np.concatenate([reach_el, reach_el | reach[i]])
    pairs = (reach_el[:, None] & np.arange(codomain.size)[None, :]) != 0
    return CompatibilityRelation(domain, codomain, pairs)


def _witness(rel, **roles) -> tuple[tuple[str, Element], ...]:
    return tuple(
        (role, Element(int(bits), rel.domain if role.startswith("A") else rel.codomain))
        for role, bits in roles.items()
    )


def validate_relation(rel: CompatibilityRelation,
                      mode: RelationMode | str = RelationMode.GENERATED) -> list[Violation]:
    """All failed instances of the eight compatibility conditions.

    Conditions 1 and 3 leave the corner pair ``(F, F)`` unconstrained: read
    literally they force ``F CR F``, which together with condition 6 (or 8)
    would force ``F CR T`` (or ``T CR F``). In ``generated`` mode conditions 6
    and 8 are checked only left-to-right, which is what relations generated
    from atom pairs satisfy. ``strict`` mode checks them both ways.
    """
    mode = RelationMode(mode)
    R = rel.pairs
    na, nb = rel.domain.size, rel.codomain.size
    top_a, top_b = na - 1, nb - 1
    out: list[Violation] = []

    for b in range(1, nb):
        if R[0, b]:
            out.append(Violation("condition 1", _witness(rel, A=0, B=b)))
        if not R[top_a, b]:
            out.append(Violation("condition 2", _witness(rel, A=top_a, B=b)))
    for a in range(1, na):
        if R[a, 0]:
            out.append(Violation("condition 3", _witness(rel, A=a, B=0)))
        if not R[a, top_b]:
            out.append(Violation("condition 4", _witness(rel, A=a, B=top_b)))

    bi = np.arange(nb)
    ai = np.arange(na)
    join_b = bi[:, None] | bi[None, :]
    meet_b = bi[:, None] & bi[None, :]
    join_a = ai[:, None] | ai[None, :]
    meet_a = ai[:, None] & ai[None, :]

    # axes: (A, B1, B2)
    lhs5 = R[:, join_b]
    rhs5 = R[:, :, None] | R[:, None, :]
    for a, b1, b2 in np.argwhere(lhs5 != rhs5):
        if b1 <= b2:
            out.append(Violation("condition 5", _witness(rel, A=a, B1=b1, B2=b2)))

    lhs6 = R[:, meet_b]
    rhs6 = R[:, :, None] & R[:, None, :]
    bad6 = lhs6 & ~rhs6 if mode is RelationMode.GENERATED else lhs6 != rhs6
    for a, b1, b2 in np.argwhere(bad6):
        if b1 <= b2:
            out.append(Violation("condition 6", _witness(rel, A=a, B1=b1, B2=b2)))

    # axes: (A1, A2, B)
    lhs7 = R[join_a, :]
    rhs7 = R[:, None, :] | R[None, :, :]
    for a1, a2, b in np.argwhere(lhs7 != rhs7):
        if a1 <= a2:
            out.append(Violation("condition 7", _witness(rel, A1=a1, A2=a2, B=b)))

    lhs8 = R[meet_a, :]
    rhs8 = R[:, None, :] & R[None, :, :]
    bad8 = lhs8 & ~rhs8 if mode is RelationMode.GENERATED else lhs8 != rhs8
    for a1, a2, b in np.argwhere(bad8):
        if a1 <= a2:
            out.append(Violation("condition 8", _witness(rel, A1=a1, A2=a2, B=b)))
    return out


def argument_from_relation(rel: CompatibilityRelation,
                           mode: RelationMode | str = RelationMode.GENERATED,
                           *, tol: float = DEFAULT_TOL,
                           max_table_bits: int = MAX_TABLE_BITS) -> Argument:
    """``FP_CR(A, B) = 1`` if ``A CR B`` and not ``A CR B^C``, or if ``A = F``; else 0."""
    check_table_bits(rel.domain.atom_count, rel.codomain.atom_count, max_table_bits)
    violations = validate_relation(rel, mode)
    if violations:
        raise RelationError(
            f"relation fails {len(violations)} condition instance(s) in {RelationMode(mode).value} "
            f"mode; first: {violations[0].describe()}",
            violations,
        )
    R = rel.pairs
    table = (R & ~R[:, ::-1]).astype(np.float64)
    table[0, :] = 1.0
    return Argument(rel.domain, rel.codomain, table, tol=tol, max_table_bits=max_table_bits)


def identity_argument(algebra: AlgebraSignature, *, max_table_bits: int = MAX_TABLE_BITS) -> Argument:
    """``FP(A, B) = 1`` iff ``A => B``."""
    check_table_bits(algebra.atom_count, algebra.atom_count, max_table_bits)
    idx = np.arange(algebra.size)
    table = ((idx[:, None] & ~idx[None, :]) == 0).astype(np.float64)
    return Argument(algebra, algebra, table, max_table_bits=max_table_bits)


def diagonal_atom_pairs(algebra: AlgebraSignature) -> list[tuple[int, int]]:
    return [(i, i) for i in range(algebra.atom_count)]

