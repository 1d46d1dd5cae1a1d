"""Command-line front end.

Exit codes: 0 success, 1 domain violation (axioms, classification, algebra
mismatch), 2 malformed input.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from . import io, oracle
from .algebra import MAX_TABLE_BITS, AlgebraSignature, check_table_bits
from .argument import (
    DEFAULT_TOL,
    Argument,
    Direction,
    TransformKernel,
    classify,
    probativity,
    transform,
    validate_axioms,
)
from .constructors import (
    RelationMode,
    RowStochasticMatrix,
    argument_from_relation,
    identity_argument,
    product_argument,
    prototypical,
)
from .errors import AxiomViolationError, ForceProofError, FormatError
from .mass import MassFunction, compose_backward, compose_forward, propagate_backward, propagate_forward

ORACLE_TOL = 1e-12


@dataclass(frozen=True)
class RunConfig:
    tolerance: float = DEFAULT_TOL
    max_table_bits: int = MAX_TABLE_BITS
    output_format: str = "json"
    oracle_check: bool = False
    relation_mode: RelationMode = RelationMode.GENERATED

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if not 0 < self.max_table_bits <= 26:
            raise ValueError("max-table-bits must lie in 1..26")


class DomainFailure(Exception):
    """Carries a report to print before exiting with status 1."""

    def __init__(self, message: str, report: dict | None = None):
        super().__init__(message)
        self.report = report


# -- rendering ----------------------------------------------------------------


def _grid(domain: AlgebraSignature, codomain: AlgebraSignature, table) -> str:
    rows = [[""] + [codomain.label(b) for b in range(codomain.size)]]
    for a in range(domain.size):
        rows.append([domain.label(a)] + [f"{x:.6g}" for x in table[a]])
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in rows)


def _render_text(obj, indent: str = "") -> str:
    if isinstance(obj, dict) and {"domain", "codomain", "table"} <= obj.keys():
        d = io.signature_from_json(obj["domain"])
        c = io.signature_from_json(obj["codomain"])
        head = [f"{indent}{k}: {v}" for k, v in obj.items() if k not in ("domain", "codomain", "table")
                and not isinstance(v, (dict, list))]
        grid = _grid(d, c, np.asarray(obj["table"]))
        return "\n".join(head + [indent + line for line in grid.splitlines()])
    if isinstance(obj, dict) and {"algebra", "mass"} <= obj.keys():
        sig = io.signature_from_json(obj["algebra"])
        return "\n".join(f"{indent}{sig.label(k)}: {x:.6g}" for k, x in enumerate(obj["mass"]))
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{indent}{k}:")
                lines.append(_render_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        if all(isinstance(v, (int, float, str, bool)) for v in obj):
            return indent + ", ".join(str(v) for v in obj)
        lines = []
        for v in obj:
            if isinstance(v, dict) and "text" in v:
                lines.append(f"{indent}- {v['text']}")
            else:
                lines.append(_render_text(v, indent + "  "))
        return "\n".join(lines)
    return f"{indent}{obj}"


def _emit(obj, cfg: RunConfig) -> None:
    print(io.dumps(obj) if cfg.output_format == "json" else _render_text(obj))


# -- loading ------------------------------------------------------------------


def _load_argument(path: str, cfg: RunConfig) -> Argument:
    payload = io.load_json(path)
    domain, codomain, table = io.table_from_json(payload)
    check_table_bits(domain.atom_count, codomain.atom_count, cfg.max_table_bits)
    violations = validate_axioms(table, domain, codomain, cfg.tolerance)
    if violations:
        raise DomainFailure(
            f"{path}: not a valid argument ({len(violations)} axiom violation(s))",
            {"valid": False, "violations": [io.violation_to_json(v) for v in violations]},
        )
    return Argument(domain, codomain, table, tol=cfg.tolerance, max_table_bits=cfg.max_table_bits)


def _oracle_report(arg: Argument, kernels: dict[str, TransformKernel]) -> dict:
    worst = 0.0
    for name, k in kernels.items():
        naive = np.array(oracle.naive_kernel(arg, name))
        worst = max(worst, float(np.max(np.abs(naive - k.table))))
    return {"max_divergence": worst, "tolerance": ORACLE_TOL, "pass": worst <= ORACLE_TOL}


# -- commands -----------------------------------------------------------------


def cmd_validate(ns, cfg: RunConfig) -> int:
    domain, codomain, table = io.table_from_json(io.load_json(ns.file))
    check_table_bits(domain.atom_count, codomain.atom_count, cfg.max_table_bits)
    violations = validate_axioms(table, domain, codomain, cfg.tolerance)
    _emit({"valid": not violations, "violations": [io.violation_to_json(v) for v in violations]}, cfg)
    return 0 if not violations else 1


def cmd_classify(ns, cfg: RunConfig) -> int:
    arg = _load_argument(ns.file, cfg)
    report = classify(arg, cfg.tolerance).as_dict()
    prob = probativity(arg, cfg.tolerance)
    report["algebras"] = prob.algebra_relation
    status = 0
    if cfg.oracle_check:
        kernels = {d.value: transform(arg, d) for d in Direction}
        report["oracle"] = _oracle_report(arg, kernels)
        status = 0 if report["oracle"]["pass"] else 1
    _emit(report, cfg)
    return status


def cmd_transform(ns, cfg: RunConfig) -> int:
    arg = _load_argument(ns.file, cfg)
    kernel = transform(arg, ns.direction)
    out = io.kernel_to_json(kernel)
    out["diagnostics"] = {
        "sums_axis": "rows" if kernel.direction is Direction.BACKWARD else "columns",
        "sums": kernel.sums().tolist(),
        "sums_ok": kernel.sums_ok(cfg.tolerance),
        "min": kernel.min(),
        "nonnegative": kernel.is_nonnegative(cfg.tolerance),
    }
    status = 0
    if cfg.oracle_check:
        out["diagnostics"]["oracle"] = _oracle_report(arg, {kernel.direction.value: kernel})
        status = 0 if out["diagnostics"]["oracle"]["pass"] else 1
    _emit(out, cfg)
    return status


def cmd_make(ns, cfg: RunConfig) -> int:
    bits = cfg.max_table_bits
    if ns.prototypical:
        arg = prototypical(io.measure_from_json(io.load_json(ns.prototypical)), max_table_bits=bits)
    elif ns.product:
        P, domain, codomain = io.matrix_from_json(io.load_json(ns.product))
        arg = product_argument(P, domain, codomain, max_table_bits=bits)
    elif ns.relation:
        rel, mode = io.relation_from_json(io.load_json(ns.relation))
        arg = argument_from_relation(rel, mode or cfg.relation_mode, tol=cfg.tolerance, max_table_bits=bits)
    else:
        payload = io.load_json(ns.identity)
        sig = io.signature_from_json(payload.get("algebra", payload) if isinstance(payload, dict) else payload)
        arg = identity_argument(sig, max_table_bits=bits)
    _emit(io.argument_to_json(arg), cfg)
    return 0


def _functoriality(first: Argument, second: Argument, composed: TransformKernel, cfg: RunConfig) -> dict:
    """Compare propagation through the composite with step-by-step propagation on point masses."""
    worst = 0.0
    if composed.direction is Direction.BACKWARD:
        for a in range(first.domain.size):
            m = MassFunction.delta(first.domain, a)
            seq = propagate_forward(propagate_forward(m, first, cfg.tolerance), second, cfg.tolerance)
            one = propagate_forward(m, composed, cfg.tolerance)
            worst = max(worst, float(np.max(np.abs(seq.mass - one.mass))))
    else:
        for c in range(second.codomain.size):
            m = MassFunction.delta(second.codomain, c)
            seq = propagate_backward(propagate_backward(m, second, cfg.tolerance), first, cfg.tolerance)
            one = propagate_backward(m, composed, cfg.tolerance)
            worst = max(worst, float(np.max(np.abs(seq.mass - one.mass))))
    return {"functoriality": "pass" if worst <= cfg.tolerance else "fail", "max_deviation": worst}


def cmd_compose(ns, cfg: RunConfig) -> int:
    first = _load_argument(ns.first, cfg)
    second = _load_argument(ns.second, cfg)
    direction = Direction(ns.direction)
    compose = compose_backward if direction is Direction.BACKWARD else compose_forward
    result = compose(first, second, cfg.tolerance)
    diagnostics = _functoriality(first, second, result.kernel, cfg)
    diagnostics["sums_ok"] = result.kernel.sums_ok(cfg.tolerance)
    if cfg.oracle_check:
        naive = np.array([[oracle.naive_compose(first, second, a, c, direction.value)
                           for c in range(second.codomain.size)] for a in range(first.domain.size)])
        worst = float(np.max(np.abs(naive - result.kernel.table)))
        diagnostics["oracle"] = {"max_divergence": worst, "tolerance": ORACLE_TOL, "pass": worst <= ORACLE_TOL}
    out = {
        "kernel": io.kernel_to_json(result.kernel),
        "reconstruction": io.reconstruction_to_json(result.reconstruction),
        "diagnostics": diagnostics,
    }
    _emit(out, cfg)
    ok = diagnostics["functoriality"] == "pass" and diagnostics.get("oracle", {"pass": True})["pass"]
    return 0 if ok else 1


def cmd_propagate(ns, cfg: RunConfig) -> int:
    m = io.mass_from_json(io.load_json(ns.mass), cfg.tolerance)
    arg = _load_argument(ns.argument, cfg)
    if Direction(ns.direction) is Direction.FORWARD:
        out = propagate_forward(m, arg, cfg.tolerance)
    else:
        out = propagate_backward(m, arg, cfg.tolerance)
    payload = io.mass_to_json(out)
    payload["normalized"] = out.normalized
    _emit(payload, cfg)
    return 0


DEMO_DOMAIN = AlgebraSignature.of("lazy", "dead")
DEMO_CODOMAIN = AlgebraSignature.of("no_letter", "letter_sent")
# rows: how strongly each explanation, alone, accounts for each outcome
DEMO_MATRIX = RowStochasticMatrix([[0.7, 0.3], [0.95, 0.05]])
DEMO_MASS = [0.0, 0.6, 0.1, 0.3]


def demo_report() -> dict:
    arg = product_argument(DEMO_MATRIX, DEMO_DOMAIN, DEMO_CODOMAIN)
    lazy, dead = DEMO_DOMAIN.element(["lazy"]), DEMO_DOMAIN.element(["dead"])
    no_letter = DEMO_CODOMAIN.element(["no_letter"])
    cls = classify(arg)
    premise = MassFunction(DEMO_DOMAIN, DEMO_MASS)
    pushed = propagate_forward(premise, arg)
    narrative = [
        "A letter from a brother failed to arrive. Two explanations compete: he is lazy, or he is dead.",
        f"Force of proof from 'lazy' to 'no letter': {arg(lazy, no_letter):.4g} (below 1; other explanations remain).",
        f"Force of proof from 'dead' to 'no letter': {arg(dead, no_letter):.4g} (also below 1).",
        "Within a single algebra, material implication would give 'lazy => no letter' probability 1.",
        f"The argument is an uncertain implication argument: {cls.implication}; "
        f"an uncertain inference argument: {cls.inference}.",
        "Belief in the explanations (0.6 lazy, 0.1 dead, 0.3 undecided) is pushed to the outcomes:",
    ] + [f"  m({DEMO_CODOMAIN.label(k)}) = {x:.4g}" for k, x in enumerate(pushed.mass)]
    out = io.mass_to_json(pushed)
    out.update({
        "normalized": pushed.normalized,
        "narrative": narrative,
        "argument": io.argument_to_json(arg),
        "backward_kernel": io.kernel_to_json(transform(arg, Direction.BACKWARD)),
        "forward_kernel": io.kernel_to_json(transform(arg, Direction.FORWARD)),
        "classification": cls.as_dict(),
        "premise_mass": io.mass_to_json(premise),
    })
    return out


def cmd_demo(ns, cfg: RunConfig) -> int:
    report = demo_report()
    if cfg.output_format == "json":
        print(io.dumps(report))
        return 0
    print("\n".join(report["narrative"]))
    print("\nForce of proof table:")
    print(_render_text(report["argument"], "  "))
    print("\nBackward kernel:")
    print(_render_text(report["backward_kernel"], "  "))
    print("\nForward kernel:")
    print(_render_text(report["forward_kernel"], "  "))
    return 0


# -- entry point --------------------------------------------------------------


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--tolerance", type=float, default=d(DEFAULT_TOL),
                        help="numeric tolerance for axioms and classification (default 1e-9)")
    parser.add_argument("--oracle", action="store_true", default=d(False),
                        help="cross-check fast transforms against brute-force sums")
    parser.add_argument("--format", choices=["json", "table"], default=d("json"), dest="format")
    parser.add_argument("--relation-mode", choices=[m.value for m in RelationMode],
                        default=d(RelationMode.GENERATED.value))
    parser.add_argument("--max-table-bits", type=int, default=d(MAX_TABLE_BITS),
                        help="largest allowed m+n for dense tables (default 20)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="forceproof", description=__doc__.splitlines()[0])
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the argument axioms")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", parents=[common], help="implication / inference / superficial report")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("transform", parents=[common], help="forward or backward kernel")
    p.add_argument("file")
    p.add_argument("--direction", choices=["forward", "backward"], default="backward")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("make", parents=[common], help="build an argument from a constructor input")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--prototypical", metavar="MEASURE_FILE")
    g.add_argument("--product", metavar="MATRIX_FILE")
    g.add_argument("--relation", metavar="RELATION_FILE")
    g.add_argument("--identity", metavar="ALGEBRA_FILE")
    p.set_defaults(func=cmd_make)

    p = sub.add_parser("compose", parents=[common], help="compose two arguments' kernels")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--direction", choices=["forward", "backward"], default="backward")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("propagate", parents=[common], help="push or pull a mass function")
    p.add_argument("mass")
    p.add_argument("argument")
    p.add_argument("--direction", choices=["forward", "backward"], default="forward")
    p.set_defaults(func=cmd_propagate)

    p = sub.add_parser("demo", parents=[common], help="narrated worked example")
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = RunConfig(ns.tolerance, ns.max_table_bits, ns.format, ns.oracle, RelationMode(ns.relation_mode))
    except ValueError as exc:
        parser.error(str(exc))
    try:
        return ns.func(ns, cfg)
    except FormatError as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return 2
    except DomainFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.report is not None:
            _emit(exc.report, cfg)
        return 1
    except AxiomViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit({"valid": False, "violations": [io.violation_to_json(v) for v in exc.violations]}, cfg)
        return 1
    except (ForceProofError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
