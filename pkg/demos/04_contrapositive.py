"""
Contrapositives swap the kernels
================================

Reversing an argument and complementing both sides turns a forward kernel
into a backward one, so implication and inference trade places.
"""

import numpy as np

from forceproof import backward_transform, classify, contrapositive, forward_transform
from forceproof.sampling import random_implication_argument

rng = np.random.default_rng(0)
arg = random_implication_argument(rng, 2, 3)
flip = contrapositive(arg)

print(classify(arg).as_dict())
print(classify(flip).as_dict())

# the forward kernel of the contrapositive is the backward kernel, reindexed
lhs = forward_transform(flip).table
rhs = backward_transform(arg).table[::-1, ::-1].T
print(np.max(np.abs(lhs - rhs)))

# applying it twice gives back the original table
print(contrapositive(flip) == arg)
