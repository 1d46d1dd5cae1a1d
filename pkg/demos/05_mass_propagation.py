"""
Propagating belief along a chain
================================

Backward kernels push mass functions from premises to conclusions, and
they compose by matrix product.
"""

import numpy as np

from forceproof import (
    AlgebraSignature,
    MassFunction,
    RowStochasticMatrix,
    belief_from_mass,
    compose_backward,
    product_argument,
    propagate_forward,
)
from forceproof.cli import demo_report

np.set_printoptions(precision=4, suppress=True)

causes = AlgebraSignature.of("lazy", "dead")
outcomes = AlgebraSignature.of("no_letter", "letter_sent")
reports = AlgebraSignature.of("worried", "calm")

first = product_argument(RowStochasticMatrix([[0.7, 0.3], [0.95, 0.05]]), causes, outcomes)
second = product_argument(RowStochasticMatrix([[0.8, 0.2], [0.1, 0.9]]), outcomes, reports)

# 0.6 on lazy, 0.1 on dead, 0.3 left undecided on T
m = MassFunction(causes, [0.0, 0.6, 0.1, 0.3])
step = propagate_forward(m, first)
print(step.mass, belief_from_mass(step))

# one step through the composite matches two steps
comp = compose_backward(first, second)
two_steps = propagate_forward(step, second)
one_step = propagate_forward(m, comp.kernel)
print(two_steps.mass, one_step.mass)
print(comp.reconstruction.valid)

# the CLI demo tells the same story in prose
print("\n".join(demo_report()["narrative"]))
