"""Brute-force reference implementations used as ground truth in tests.

Nothing here calls the fast transforms: every quantity is a literal sum over
enumerated bitmasks in plain Python. Exponentially slow by design.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb

from .algebra import as_bits


def _n(x: int) -> int:
    return bin(x).count("1")


def _subsets(s: int):
    """All bitmasks contained in ``s``, by scanning the full range."""
    for t in range(s + 1):
        if t & ~s == 0:
            yield t


def _supersets(s: int, size: int):
    for t in range(size):
        if s & ~t == 0:
            yield t


def _rows(table) -> list[list[float]]:
    return [[float(x) for x in row] for row in getattr(table, "table", table)]


def naive_moebius_over_subsets(values) -> list[float]:
    v = [float(x) for x in values]
    return [sum((-1) ** (_n(s) - _n(t)) * v[t] for t in _subsets(s)) for s in range(len(v))]


def naive_zeta_over_subsets(values) -> list[float]:
    v = [float(x) for x in values]
    return [sum(v[t] for t in _subsets(s)) for s in range(len(v))]


def naive_moebius_over_supersets(values) -> list[float]:
    v = [float(x) for x in values]
    return [sum((-1) ** (_n(t) - _n(s)) * v[t] for t in _supersets(s, len(v))) for s in range(len(v))]


def naive_zeta_over_supersets(values) -> list[float]:
    v = [float(x) for x in values]
    return [sum(v[t] for t in _supersets(s, len(v))) for s in range(len(v))]


def naive_backward(arg, a, b) -> float:
    """Alternating sum of ``FP(A, B')`` over every ``B' <= B``."""
    t = _rows(arg)
    a, b = as_bits(a), as_bits(b)
    return sum((-1) ** (_n(b) - _n(bb)) * t[a][bb] for bb in _subsets(b))


def naive_forward(arg, a, b) -> float:
    """Alternating sum of ``FP(A', B)`` over every ``A' >= A``."""
    t = _rows(arg)
    a, b = as_bits(a), as_bits(b)
    return sum((-1) ** (_n(aa) - _n(a)) * t[aa][b] for aa in _supersets(a, len(t)))


def naive_kernel(arg, direction: str) -> list[list[float]]:
    t = _rows(arg)
    fn = naive_forward if str(getattr(direction, "value", direction)) == "forward" else naive_backward
    return [[fn(t, a, b) for b in range(len(t[0]))] for a in range(len(t))]


def naive_compose(arg_ab, arg_bc, a, c, direction: str = "backward") -> float:
    """One entry of the composed kernel, as a sum over the middle algebra."""
    t1, t2 = _rows(arg_ab), _rows(arg_bc)
    a, c = as_bits(a), as_bits(c)
    fn = naive_forward if str(getattr(direction, "value", direction)) == "forward" else naive_backward
    return sum(fn(t1, a, b) * fn(t2, b, c) for b in range(len(t1[0])))


def naive_validate_axioms(table, tol: float = 1e-9) -> set[str]:
    """Names of the violated axioms, checking monotonicity over all comparable pairs."""
    t = _rows(table)
    na, nb = len(t), len(t[0])
    bad = set()
    for a in range(na):
        for b in range(nb):
            if not -tol <= t[a][b] <= 1 + tol:
                bad.add("range")
    if any(abs(t[0][b] - 1) > tol for b in range(nb)):
        bad.add("i")
    if any(abs(t[a][nb - 1] - 1) > tol for a in range(na)):
        bad.add("ii")
    if abs(t[na - 1][0]) > tol:
        bad.add("iii")
    for a1 in range(na):
        for a2 in _supersets(a1, na):
            if any(t[a1][b] < t[a2][b] - tol for b in range(nb)):
                bad.add("iv")
    for b1 in range(nb):
        for b2 in _supersets(b1, nb):
            if any(t[a][b1] > t[a][b2] + tol for a in range(na)):
                bad.add("v")
    return bad


def naive_classify(arg, tol: float = 1e-9) -> dict:
    t = _rows(arg)
    fwd = min(min(r) for r in naive_kernel(t, "forward"))
    bwd = min(min(r) for r in naive_kernel(t, "backward"))
    return {"implication": fwd >= -tol, "inference": bwd >= -tol,
            "superficial": fwd < -tol and bwd < -tol,
            "min_forward": fwd, "min_backward": bwd}


def naive_contrapositive(table) -> list[list[float]]:
    """``C[B][A] = FP(A^C, B^C)`` by explicit complementing."""
    t = _rows(table)
    na, nb = len(t), len(t[0])
    return [[t[(na - 1) ^ a][(nb - 1) ^ b] for a in range(na)] for b in range(nb)]


@dataclass
class IdentityReport:
    binomial_sums: dict[int, int] = field(default_factory=dict)
    min_moebius: float = 0.0
    trials: int = 0
    tol: float = 1e-12

    @property
    def passed(self) -> bool:
        return all(s == 0 for s in self.binomial_sums.values()) and self.min_moebius >= -self.tol


def combinatorial_checks(n_max: int = 12, trials: int = 100, max_atoms: int = 5,
                         seed: int | None = 0, tol: float = 1e-12) -> IdentityReport:
    """Alternating binomial sums vanish, and subset-Moebius of an additive probability is nonnegative."""
    if n_max > 12:
        raise ValueError("n_max must be at most 12")
    report = IdentityReport(tol=tol)
    for n in range(1, n_max + 1):
        report.binomial_sums[n] = sum(comb(n, k) * (-1) ** (n - k) for k in range(n + 1))
    rng = random.Random(seed)
    lowest = float("inf")
    for _ in range(trials):
        m = rng.randint(1, max_atoms)
        w = [rng.random() for _ in range(m)]
        probs = [x / sum(w) for x in w]
        p = [sum(probs[i] for i in range(m) if s >> i & 1) for s in range(1 << m)]
        lowest = min(lowest, min(naive_moebius_over_subsets(p)))
    report.trials = trials
    report.min_moebius = lowest if trials else 0.0
    return report


# name used by the operation catalogue
lemma2_checks = combinatorial_checks
