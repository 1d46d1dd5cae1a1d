"""
Compatibility relations
=======================

A relation between atoms generates a relation between elements, and that
relation induces a discrete implication argument.
"""

from forceproof import (
    AlgebraSignature,
    argument_from_relation,
    classify,
    forward_transform,
    relation_from_atom_pairs,
    validate_relation,
)

a = AlgebraSignature.numbered("a", 2)
b = AlgebraSignature.numbered("b", 2)

# a1 with b1 and a2 with b2, indices are 0-based
rel = relation_from_atom_pairs(a, b, [(0, 0), (1, 1)])
print(rel.pairs.astype(int))

# the generated relation meets the conditions in generated mode
print(validate_relation(rel, "generated"))

# read strictly, both meet conditions fail: {a1} and {a2} each relate to T, their meet F does not
for v in validate_relation(rel, "strict"):
    print(v.describe())

arg = argument_from_relation(rel)
print(arg.table)
print(forward_transform(arg).table)
print(classify(arg).as_dict())
