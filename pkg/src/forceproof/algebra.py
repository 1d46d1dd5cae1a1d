"""Finite Boolean algebras as powersets of named atoms.

Elements are atom bitsets: element index ``k`` contains atom ``i`` iff bit
``i`` of ``k`` is set. Index 0 is the least element F and ``2**m - 1`` the
greatest element T.

The module also provides the four fast transforms over the subset lattice
(zeta and Moebius, in the subset and superset directions). Each runs in
``O(m * 2**m)`` per vector by sweeping one bit at a time, and can be applied
along any axis of a dense array.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import IncompatibleAlgebraError, TableSizeError

MAX_ATOMS = 16
MAX_TABLE_BITS = 20


@dataclass(frozen=True)
class AlgebraSignature:
    """The powerset algebra generated by an ordered tuple of atom names."""

    atoms: tuple[str, ...]

    def __post_init__(self):
        atoms = tuple(self.atoms)
        object.__setattr__(self, "atoms", atoms)
        if not atoms:
            raise ValueError("an algebra needs at least one atom (F = T otherwise)")
        if len(atoms) > MAX_ATOMS:
            raise TableSizeError(f"{len(atoms)} atoms exceeds the limit of {MAX_ATOMS}")
        for name in atoms:
            if not isinstance(name, str) or not name:
                raise ValueError(f"atom names must be non-empty strings, got {name!r}")
        if len(set(atoms)) != len(atoms):
            raise ValueError(f"duplicate atom names in {atoms}")

    @classmethod
    def of(cls, *atoms: str) -> "AlgebraSignature":
        return cls(tuple(atoms))

    @classmethod
    def numbered(cls, prefix: str, count: int) -> "AlgebraSignature":
        """Atoms ``prefix1 .. prefix<count>``."""
        return cls(tuple(f"{prefix}{i + 1}" for i in range(count)))

    @property
    def atom_count(self) -> int:
        return len(self.atoms)

    @property
    def size(self) -> int:
        return 1 << len(self.atoms)

    @property
    def full_mask(self) -> int:
        return self.size - 1

    @property
    def bottom(self) -> "Element":
        return Element(0, self)

    @property
    def top(self) -> "Element":
        return Element(self.full_mask, self)

    def element(self, names: Iterable[str] = ()) -> "Element":
        """The element containing exactly the named atoms."""
        bits = 0
        for name in names:
            try:
                bits |= 1 << self.atoms.index(name)
            except ValueError:
                raise ValueError(f"unknown atom {name!r} in algebra {self.atoms}") from None
        return Element(bits, self)

    def atom(self, i: int) -> "Element":
        return Element(1 << i, self)

    def from_bits(self, bits: int) -> "Element":
        return Element(int(bits), self)

    def elements(self) -> Iterator["Element"]:
        for k in range(self.size):
            yield Element(k, self)

    def names(self, bits: int) -> list[str]:
        """Atom names present in ``bits``, in atom order."""
        return [a for i, a in enumerate(self.atoms) if bits >> i & 1]

    def label(self, bits: int) -> str:
        if bits == 0:
            return "F"
        if bits == self.full_mask:
            return "T"
        return "{" + ",".join(self.names(bits)) + "}"


@dataclass(frozen=True)
class Element:
    """An element of a powerset algebra, stored as its atom bitset."""

    bits: int
    algebra: AlgebraSignature

    def __post_init__(self):
        if not 0 <= self.bits < self.algebra.size:
            raise ValueError(f"bitmask {self.bits} out of range for {self.algebra.atom_count} atoms")

    def __invert__(self) -> "Element":
        return complement(self)

    def __and__(self, other: "Element") -> "Element":
        return meet(self, other)

    def __or__(self, other: "Element") -> "Element":
        return join(self, other)

    def __le__(self, other: "Element") -> bool:
        return implies(self, other)

    def __int__(self) -> int:
        return self.bits

    def __index__(self) -> int:
        return self.bits

    def __repr__(self) -> str:
        return f"Element({self.algebra.label(self.bits)})"


def _same_algebra(a: Element, b: Element) -> None:
    if a.algebra != b.algebra:
        raise IncompatibleAlgebraError(
            f"operands belong to different algebras: {a.algebra.atoms} vs {b.algebra.atoms}"
        )


def complement(a: Element) -> Element:
    return Element(a.algebra.full_mask ^ a.bits, a.algebra)


def implies(a1: Element, a2: Element) -> bool:
    """``a1 => a2``, i.e. ``a1^C v a2 = T``, i.e. subset inclusion."""
    _same_algebra(a1, a2)
    return a1.bits & ~a2.bits == 0


def meet(a1: Element, a2: Element) -> Element:
    _same_algebra(a1, a2)
    return Element(a1.bits & a2.bits, a1.algebra)


def join(a1: Element, a2: Element) -> Element:
    _same_algebra(a1, a2)
    return Element(a1.bits | a2.bits, a1.algebra)


def card(a: Element) -> int:
    """Number of atoms in ``a`` (its distance from F)."""
    return a.bits.bit_count()


def popcounts(m: int) -> np.ndarray:
    """Cardinality of every element index ``0 .. 2**m - 1``."""
    counts = np.zeros(1, dtype=np.int64)
    for _ in range(m):
        counts = np.concatenate([counts, counts + 1])
    return counts


def membership(m: int) -> np.ndarray:
    """Boolean ``(2**m, m)`` matrix; entry ``[k, i]`` is bit ``i`` of ``k``."""
    k = np.arange(1 << m)[:, None]
    return (k >> np.arange(m)[None, :]) & 1 == 1


def check_table_bits(m: int, n: int, max_table_bits: int = MAX_TABLE_BITS) -> None:
    if m + n > max_table_bits:
        raise TableSizeError(
            f"a {m}x{n}-atom table has 2^{m + n} entries, above the 2^{max_table_bits} bound"
        )


def as_bits(x: Element | int) -> int:
    return x.bits if isinstance(x, Element) else int(x)


# -- subset-lattice transforms ------------------------------------------------


def _lattice_order(size: int) -> int:
    m = size.bit_length() - 1
    if size < 1 or size != 1 << m:
        raise ValueError(f"length {size} is not a power of two")
    return m


def _sweep(values: Sequence[float] | np.ndarray, axis: int, upward: bool, sign: float) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    if arr.ndim == 0:
        raise ValueError("expected an array, got a scalar")
    m = _lattice_order(arr.shape[axis])
    work = np.ascontiguousarray(np.moveaxis(arr, axis, -1))
    lead = work.shape[:-1]
    for i in range(m):
        view = work.reshape(lead + (-1, 2, 1 << i))
        # upward: the bit-set half receives from the bit-clear half (subset sums)
        if upward:
            view[..., 1, :] += sign * view[..., 0, :]
        else:
            view[..., 0, :] += sign * view[..., 1, :]
    return np.moveaxis(work, -1, axis)


def zeta_over_subsets(values, axis: int = -1) -> np.ndarray:
    """``f(S) = sum over S' subset of S of g(S')``."""
    return _sweep(values, axis, upward=True, sign=1.0)


def moebius_over_subsets(values, axis: int = -1) -> np.ndarray:
    """``f(S) = sum over S' subset of S of (-1)^(|S|-|S'|) g(S')``; inverts :func:`zeta_over_subsets`."""
    return _sweep(values, axis, upward=True, sign=-1.0)


def zeta_over_supersets(values, axis: int = -1) -> np.ndarray:
    """``f(S) = sum over S' superset of S of g(S')``."""
    return _sweep(values, axis, upward=False, sign=1.0)


def moebius_over_supersets(values, axis: int = -1) -> np.ndarray:
    """``f(S) = sum over S' superset of S of (-1)^(|S'|-|S|) g(S')``; inverts :func:`zeta_over_supersets`."""
    return _sweep(values, axis, upward=False, sign=-1.0)
