"""
Force of proof and its two kernels
==================================

A force-of-proof table over two small algebras, its backward and forward
Moebius kernels, and the classification that follows from their signs.
"""

import numpy as np

from forceproof import (
    AlgebraSignature,
    ProbabilityMeasure,
    backward_transform,
    classify,
    forward_transform,
    prototypical,
)

np.set_printoptions(precision=3, suppress=True)

# two atoms; index bit i set means atom i is in the element
xy = AlgebraSignature.of("x", "y")
print([xy.label(k) for k in range(xy.size)])

# the prototypical argument of a measure: FP(A1, A2) = p(A1^C v A2)
arg = prototypical(ProbabilityMeasure(xy, [0.25, 0.75]))
print(arg.table)

# backward kernel: rows sum to one
bwd = backward_transform(arg)
print(bwd.table, bwd.sums())

# forward kernel: columns sum to one
fwd = forward_transform(arg)
print(fwd.table, fwd.sums())

# both kernels are nonnegative, so this argument is usable either way
print(classify(arg).as_dict())
