"""Arguments between two finite Boolean algebras and their Moebius kernels.

An argument is a dense table ``FP[A, B]`` in ``[0, 1]`` indexed by domain and
codomain bitmasks, subject to five axioms:

    i.   FP(F, B) = 1
    ii.  FP(A, T) = 1
    iii. FP(T, F) = 0
    iv.  A1 <= A2  implies  FP(A1, B) >= FP(A2, B)
    v.   B1 <= B2  implies  FP(A, B1) <= FP(A, B2)

The backward kernel is the Moebius transform of each row over subsets of the
codomain, the forward kernel the Moebius transform of each column over
supersets of the domain. Nonnegative forward kernels make an *uncertain
implication* argument, nonnegative backward kernels an *uncertain inference*
argument; with neither the argument is *superficial*.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    MAX_TABLE_BITS,
    AlgebraSignature,
    Element,
    as_bits,
    check_table_bits,
    moebius_over_subsets,
    moebius_over_supersets,
    zeta_over_subsets,
    zeta_over_supersets,
)
from .errors import AxiomViolationError

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Violation:
    """One failed instance of an axiom or relation condition.

    ``witness`` pairs role names ("A", "B1", ...) with the elements that
    exhibit the failure; ``values`` holds the table entries involved.
    """

    rule: str
    witness: tuple[tuple[str, Element], ...] = ()
    values: tuple[float, ...] = ()

    def describe(self) -> str:
        parts = ", ".join(f"{role}={el.algebra.label(el.bits)}" for role, el in self.witness)
        vals = ", ".join(f"{v:.17g}" for v in self.values)
        return f"{self.rule}: {parts}" + (f" (values {vals})" if vals else "")


def _check_shape(table: np.ndarray, domain: AlgebraSignature, codomain: AlgebraSignature) -> None:
    expected = (domain.size, codomain.size)
    if table.shape != expected:
        raise ValueError(f"table shape {table.shape} does not match the algebras, expected {expected}")


def validate_axioms(table, domain: AlgebraSignature, codomain: AlgebraSignature,
                    tol: float = DEFAULT_TOL) -> list[Violation]:
    """Every violated axiom instance of ``table``; an empty list means valid.

    Monotonicity is checked over covering pairs only (elements differing in
    one atom), which implies the general condition by transitivity.
    """
    table = np.asarray(table, dtype=np.float64)
    _check_shape(table, domain, codomain)
    top_a, top_b = domain.full_mask, codomain.full_mask
    out: list[Violation] = []

    def w(**roles):
        return tuple(
            (role, Element(int(bits), domain if role.startswith("A") else codomain))
            for role, bits in roles.items()
        )

    bad = ~((table >= -tol) & (table <= 1 + tol))
    for a, b in np.argwhere(bad):
        out.append(Violation("range", w(A=a, B=b), (float(table[a, b]),)))

    for b in np.flatnonzero(np.abs(table[0] - 1.0) > tol):
        out.append(Violation("i", w(A=0, B=b), (float(table[0, b]),)))
    for a in np.flatnonzero(np.abs(table[:, top_b] - 1.0) > tol):
        out.append(Violation("ii", w(A=a, B=top_b), (float(table[a, top_b]),)))
    if not abs(table[top_a, 0]) <= tol:
        out.append(Violation("iii", w(A=top_a, B=0), (float(table[top_a, 0]),)))

    rows = np.arange(domain.size)
    for i in range(domain.atom_count):
        lo = rows[rows >> i & 1 == 0]
        hi = lo | (1 << i)
        # FP must not increase when A grows
        for k, b in np.argwhere(table[lo] < table[hi] - tol):
            a1, a2 = lo[k], hi[k]
            out.append(Violation("iv", w(A1=a1, A2=a2, B=b),
                                 (float(table[a1, b]), float(table[a2, b]))))
    cols = np.arange(codomain.size)
    for j in range(codomain.atom_count):
        lo = cols[cols >> j & 1 == 0]
        hi = lo | (1 << j)
        for a, k in np.argwhere(table[:, lo] > table[:, hi] + tol):
            b1, b2 = lo[k], hi[k]
            out.append(Violation("v", w(A=a, B1=b1, B2=b2),
                                 (float(table[a, b1]), float(table[a, b2]))))
    return out


class Argument:
    """A checked argument ``FP`` from ``domain`` to ``codomain``.

    Construction validates the five axioms at ``tol`` and raises
    :class:`AxiomViolationError` on failure. The table is stored read-only.
    """

    __slots__ = ("domain", "codomain", "table")

    def __init__(self, domain: AlgebraSignature, codomain: AlgebraSignature, table, *,
                 tol: float = DEFAULT_TOL, max_table_bits: int = MAX_TABLE_BITS):
        check_table_bits(domain.atom_count, codomain.atom_count, max_table_bits)
        arr = np.array(table, dtype=np.float64)
        violations = validate_axioms(arr, domain, codomain, tol)
        if violations:
            raise AxiomViolationError(
                f"table violates {len(violations)} axiom instance(s); first: {violations[0].describe()}",
                violations,
            )
        arr.flags.writeable = False
        self.domain = domain
        self.codomain = codomain
        self.table = arr

    @classmethod
    def _trusted(cls, domain, codomain, table) -> "Argument":
        # for tables whose axioms follow from an already-checked source
        self = object.__new__(cls)
        arr = np.array(table, dtype=np.float64)
        arr.flags.writeable = False
        self.domain, self.codomain, self.table = domain, codomain, arr
        return self

    def __call__(self, a: Element | int, b: Element | int) -> float:
        return float(self.table[as_bits(a), as_bits(b)])

    def __eq__(self, other):
        if not isinstance(other, Argument):
            return NotImplemented
        return (self.domain == other.domain and self.codomain == other.codomain
                and np.array_equal(self.table, other.table))

    __hash__ = None

    def __repr__(self):
        return (f"Argument({self.domain.atom_count} atoms -> {self.codomain.atom_count} atoms, "
                f"{self.table.shape[0]}x{self.table.shape[1]} table)")


class Direction(enum.Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True, eq=False)
class TransformKernel:
    """A forward or backward kernel over ``domain x codomain``.

    Backward kernels carry one mass function per domain element (rows sum to
    1); forward kernels one per codomain element (columns sum to 1). Entries
    are stored raw and may be slightly negative from rounding.
    """

    direction: Direction
    domain: AlgebraSignature
    codomain: AlgebraSignature
    table: np.ndarray

    def __post_init__(self):
        arr = np.array(self.table, dtype=np.float64)
        _check_shape(arr, self.domain, self.codomain)
        arr.flags.writeable = False
        object.__setattr__(self, "table", arr)
        object.__setattr__(self, "direction", Direction(self.direction))

    def __call__(self, a: Element | int, b: Element | int) -> float:
        return float(self.table[as_bits(a), as_bits(b)])

    def sums(self) -> np.ndarray:
        """Row sums of a backward kernel, column sums of a forward kernel."""
        return self.table.sum(axis=1 if self.direction is Direction.BACKWARD else 0)

    def sums_ok(self, tol: float = DEFAULT_TOL) -> bool:
        return bool(np.all(np.abs(self.sums() - 1.0) <= tol))

    def min(self) -> float:
        return float(self.table.min())

    def is_nonnegative(self, tol: float = DEFAULT_TOL) -> bool:
        return self.min() >= -tol

    def __eq__(self, other):
        if not isinstance(other, TransformKernel):
            return NotImplemented
        return (self.direction is other.direction and self.domain == other.domain
                and self.codomain == other.codomain and np.array_equal(self.table, other.table))

    __hash__ = None


def backward_transform(arg: Argument) -> TransformKernel:
    """``<-FP(A, B) = sum over B' <= B of (-1)^(n(B)-n(B')) FP(A, B')``."""
    return TransformKernel(Direction.BACKWARD, arg.domain, arg.codomain,
                           moebius_over_subsets(arg.table, axis=1))


def forward_transform(arg: Argument) -> TransformKernel:
    """``->FP(A, B) = sum over A' >= A of (-1)^(n(A')-n(A)) FP(A', B)``."""
    return TransformKernel(Direction.FORWARD, arg.domain, arg.codomain,
                           moebius_over_supersets(arg.table, axis=0))


def transform(arg: Argument, direction: Direction | str) -> TransformKernel:
    direction = Direction(direction)
    return forward_transform(arg) if direction is Direction.FORWARD else backward_transform(arg)


class Probativity(enum.Enum):
    PROBATIVE = "probative"
    NOT_PROBATIVE = "not probative"

    @property
    def algebra_relation(self) -> str:
        """How the pair of algebras stands with respect to the argument."""
        return "entangled" if self is Probativity.PROBATIVE else "tangential"


def probativity(arg: Argument, tol: float = DEFAULT_TOL) -> Probativity:
    """PROBATIVE iff some pair with both elements non-extreme has force above ``tol``."""
    inner = arg.table[1:-1, 1:-1]
    if inner.size and np.any(inner > tol):
        return Probativity.PROBATIVE
    return Probativity.NOT_PROBATIVE


@dataclass(frozen=True)
class Classification:
    implication: bool
    inference: bool
    discrete: bool
    probative: bool
    min_forward: float
    min_backward: float

    @property
    def superficial(self) -> bool:
        return not self.implication and not self.inference

    def as_dict(self) -> dict:
        return {
            "implication": self.implication,
            "inference": self.inference,
            "superficial": self.superficial,
            "discrete": self.discrete,
            "probative": self.probative,
            "min_forward": self.min_forward,
            "min_backward": self.min_backward,
        }


def is_discrete(table, tol: float = DEFAULT_TOL) -> bool:
    table = np.asarray(table)
    return bool(np.all((np.abs(table) <= tol) | (np.abs(table - 1.0) <= tol)))


def classify(arg: Argument, tol: float = DEFAULT_TOL) -> Classification:
    fwd = forward_transform(arg).min()
    bwd = backward_transform(arg).min()
    return Classification(
        implication=fwd >= -tol,
        inference=bwd >= -tol,
        discrete=is_discrete(arg.table, tol),
        probative=probativity(arg, tol) is Probativity.PROBATIVE,
        min_forward=fwd,
        min_backward=bwd,
    )


def contrapositive(arg: Argument) -> Argument:
    """``C(FP)(B, A) = FP(A^C, B^C)``, an argument from the codomain back to the domain."""
    # complementing a bitmask index reverses the axis
    # the axioms map onto each other (i <-> ii, iv <-> v), so validity carries over
    return Argument._trusted(arg.codomain, arg.domain, arg.table[::-1, ::-1].T)


@dataclass(frozen=True, eq=False)
class Reconstruction:
    """A table rebuilt from a kernel, with any axiom violations it carries."""

    domain: AlgebraSignature
    codomain: AlgebraSignature
    table: np.ndarray
    violations: list[Violation] = field(default_factory=list)
    tol: float = DEFAULT_TOL

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def argument(self) -> Argument | None:
        """The checked argument, or None when axioms fail."""
        if self.violations:
            return None
        return Argument._trusted(self.domain, self.codomain, self.table)

    def violated_axioms(self) -> set[str]:
        return {v.rule for v in self.violations}


def reconstruct(kernel: TransformKernel, tol: float = DEFAULT_TOL) -> Reconstruction:
    """Invert a kernel back to an ``FP`` table by the matching zeta transform."""
    if kernel.direction is Direction.BACKWARD:
        table = zeta_over_subsets(kernel.table, axis=1)
    else:
        table = zeta_over_supersets(kernel.table, axis=0)
    return Reconstruction(kernel.domain, kernel.codomain, table,
                          validate_axioms(table, kernel.domain, kernel.codomain, tol), tol)


def reconstruct_from_backward(kernel: TransformKernel, tol: float = DEFAULT_TOL) -> Reconstruction:
    if kernel.direction is not Direction.BACKWARD:
        raise ValueError("expected a backward kernel")
    return reconstruct(kernel, tol)
