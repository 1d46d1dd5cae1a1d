"""Mass functions, their propagation along arguments, and kernel composition.

Inference arguments push mass forward through their backward kernel,
``m_B(B) = sum_A m_A(A) <-FP(A, B)``; implication arguments pull mass back
through their forward kernel, ``m_A(A) = sum_B m_B(B) ->FP(A, B)``. Both
conserve total mass. Composition of morphisms is the matrix product of
kernels.

Superficial arguments are refused rather than coerced: they have neither
kernel nonnegative and cannot be chained.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraSignature, Element, as_bits, zeta_over_subsets
from .argument import (
    DEFAULT_TOL,
    Argument,
    Direction,
    Reconstruction,
    TransformKernel,
    backward_transform,
    classify,
    forward_transform,
    reconstruct,
)
from .errors import ClassificationError, IncompatibleAlgebraError

NORMALIZED_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class MassFunction:
    """Nonnegative weights on the elements of an algebra, summing to 1.

    Unnormalized masses (positive weight on F) are allowed; see :attr:`normalized`.
    """

    algebra: AlgebraSignature
    mass: np.ndarray
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        arr = np.array(self.mass, dtype=np.float64)
        if arr.shape != (self.algebra.size,):
            raise ValueError(f"expected {self.algebra.size} masses, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("masses must be finite")
        if np.any(arr < -self.tol) or np.any(arr > 1 + self.tol):
            raise ValueError("masses must lie in [0, 1]")
        if abs(arr.sum() - 1.0) > self.tol:
            raise ValueError(f"masses sum to {arr.sum()!r}, not 1")
        arr.flags.writeable = False
        object.__setattr__(self, "mass", arr)

    @classmethod
    def delta(cls, algebra: AlgebraSignature, at: Element | int) -> "MassFunction":
        m = np.zeros(algebra.size)
        m[as_bits(at)] = 1.0
        return cls(algebra, m)

    def __call__(self, a: Element | int) -> float:
        return float(self.mass[as_bits(a)])

    @property
    def normalized(self) -> bool:
        """True when F carries (numerically) no mass."""
        return bool(self.mass[0] <= NORMALIZED_TOL)

    def total(self) -> float:
        return float(self.mass.sum())

    def __eq__(self, other):
        if not isinstance(other, MassFunction):
            return NotImplemented
        return self.algebra == other.algebra and np.array_equal(self.mass, other.mass)

    __hash__ = None


def belief_from_mass(m: MassFunction) -> np.ndarray:
    """``Bel(B) = sum of m over the subsets of B``."""
    return zeta_over_subsets(m.mass)


def _require(arg: Argument, need: str, tol: float) -> None:
    c = classify(arg, tol)
    if c.superficial:
        raise ClassificationError(
            "argument is superficial (neither uncertain implication nor uncertain inference; "
            f"min forward {c.min_forward:.3g}, min backward {c.min_backward:.3g}) "
            "and cannot be used in a chain of reasoning"
        )
    if need == "inference" and not c.inference:
        raise ClassificationError(
            f"argument is not an uncertain inference argument (min backward entry {c.min_backward:.3g})"
        )
    if need == "implication" and not c.implication:
        raise ClassificationError(
            f"argument is not an uncertain implication argument (min forward entry {c.min_forward:.3g})"
        )


def _kernel(morphism: Argument | TransformKernel, direction: Direction, tol: float) -> TransformKernel:
    need = "inference" if direction is Direction.BACKWARD else "implication"
    if isinstance(morphism, Argument):
        _require(morphism, need, tol)
        return backward_transform(morphism) if direction is Direction.BACKWARD else forward_transform(morphism)
    if morphism.direction is not direction:
        raise ValueError(f"expected a {direction.value} kernel, got {morphism.direction.value}")
    if not morphism.is_nonnegative(tol):
        raise ClassificationError(
            f"kernel has negative entries (min {morphism.min():.3g}); it is not an uncertain {need} kernel"
        )
    return morphism


def propagate_forward(m: MassFunction, morphism: Argument | TransformKernel,
                      tol: float = DEFAULT_TOL) -> MassFunction:
    """Push mass on the domain to the codomain via the backward kernel."""
    k = _kernel(morphism, Direction.BACKWARD, tol)
    if m.algebra != k.domain:
        raise IncompatibleAlgebraError(f"mass lives on {m.algebra.atoms}, argument starts at {k.domain.atoms}")
    return MassFunction(k.codomain, m.mass @ k.table, tol)


def propagate_backward(m: MassFunction, morphism: Argument | TransformKernel,
                       tol: float = DEFAULT_TOL) -> MassFunction:
    """Pull mass on the codomain back to the domain via the forward kernel."""
    k = _kernel(morphism, Direction.FORWARD, tol)
    if m.algebra != k.codomain:
        raise IncompatibleAlgebraError(f"mass lives on {m.algebra.atoms}, argument ends at {k.codomain.atoms}")
    return MassFunction(k.domain, k.table @ m.mass, tol)


@dataclass(frozen=True, eq=False)
class Composition:
    """A composed kernel and the ``FP`` table it reconstructs to."""

    kernel: TransformKernel
    reconstruction: Reconstruction


def _compose(first, second, direction: Direction, tol: float) -> Composition:
    k1 = _kernel(first, direction, tol)
    k2 = _kernel(second, direction, tol)
    if k1.codomain != k2.domain:
        raise IncompatibleAlgebraError(
            f"middle algebras differ: {k1.codomain.atoms} vs {k2.domain.atoms}"
        )
    kernel = TransformKernel(direction, k1.domain, k2.codomain, k1.table @ k2.table)
    return Composition(kernel, reconstruct(kernel, tol))


def compose_backward(arg_ab: Argument | TransformKernel, arg_bc: Argument | TransformKernel,
                     tol: float = DEFAULT_TOL) -> Composition:
    """Compose two inference morphisms ``A -> B -> C``; the kernel is row-stochastic."""
    return _compose(arg_ab, arg_bc, Direction.BACKWARD, tol)


def compose_forward(arg_ab: Argument | TransformKernel, arg_bc: Argument | TransformKernel,
                    tol: float = DEFAULT_TOL) -> Composition:
    """Compose two implication morphisms ``A -> B -> C``; the kernel is column-stochastic."""
    return _compose(arg_ab, arg_bc, Direction.FORWARD, tol)


def identity_kernel(algebra: AlgebraSignature, direction: Direction | str) -> TransformKernel:
    return TransformKernel(Direction(direction), algebra, algebra, np.eye(algebra.size))
