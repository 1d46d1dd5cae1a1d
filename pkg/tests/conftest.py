import numpy as np
import pytest

from forceproof import (
    AlgebraSignature,
    Argument,
    ProbabilityMeasure,
    RowStochasticMatrix,
    argument_from_relation,
    product_argument,
    prototypical,
    relation_from_atom_pairs,
)

# only 1-atom x 1-atom table allowed by axioms i-iii; rows F, T and columns F, T
FORCED = [[1.0, 1.0], [0.0, 1.0]]

# superficial: both kernels reach -0.5 (found by random search over dyadic tables)
SUPERFICIAL = [
    [1.0, 1.0, 1.0, 1.0],
    [0.75, 0.75, 0.75, 1.0],
    [0.75, 0.75, 0.75, 1.0],
    [0.0, 0.75, 0.75, 1.0],
]

_ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def one():
    return AlgebraSignature.of("p")


@pytest.fixture
def xy():
    return AlgebraSignature.of("x", "y")


@pytest.fixture
def forced(one):
    return Argument(one, one, FORCED)


@pytest.fixture
def e1(xy):
    return prototypical(ProbabilityMeasure(xy, [0.25, 0.75]))


@pytest.fixture
def e3_matrix():
    return RowStochasticMatrix([[0.3, 0.7], [0.6, 0.4]])


@pytest.fixture
def e3(e3_matrix):
    return product_argument(e3_matrix, AlgebraSignature.numbered("a", 2), AlgebraSignature.numbered("b", 2))


@pytest.fixture
def e4_relation():
    return relation_from_atom_pairs(AlgebraSignature.numbered("a", 2), AlgebraSignature.numbered("b", 2),
                                    [(0, 0), (1, 1)])


@pytest.fixture
def e4(e4_relation):
    return argument_from_relation(e4_relation)


@pytest.fixture
def e5():
    return product_argument(RowStochasticMatrix([[0.3, 0.7]]), AlgebraSignature.of("a"),
                            AlgebraSignature.numbered("b", 2))


@pytest.fixture
def superficial():
    return Argument(AlgebraSignature.numbered("a", 2), AlgebraSignature.numbered("b", 2), SUPERFICIAL)


@pytest.fixture
def rng():
    return np.random.default_rng(20241016)
