"""
Arguments from a row-stochastic matrix
======================================

Each premise atom distributes its support over the conclusion atoms. The
induced argument multiplies those supports across the atoms of a premise.
"""

import numpy as np

from forceproof import (
    AlgebraSignature,
    RowStochasticMatrix,
    backward_transform,
    classify,
    forward_transform,
    product_argument,
    product_forward_closed_form,
)

np.set_printoptions(precision=3, suppress=True)

a = AlgebraSignature.numbered("a", 2)
b = AlgebraSignature.numbered("b", 2)
P = RowStochasticMatrix([[0.3, 0.7], [0.6, 0.4]])
arg = product_argument(P, a, b)

# FP(T, {b1}) = 0.3 * 0.6
print(arg(a.top, b.element(["b1"])))

# the forward kernel has a closed form; compare it with the transform
fwd = forward_transform(arg).table
closed = np.array([[product_forward_closed_form(P, i, j) for j in range(b.size)] for i in range(a.size)])
print(np.max(np.abs(fwd - closed)))

# every nonempty premise sends no mass to F
print(backward_transform(arg).table[:, 0])
print(classify(arg).as_dict())
