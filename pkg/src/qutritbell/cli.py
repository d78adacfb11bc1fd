"""Command-line interface.

Commands
--------
generators dump      exact generator matrices plus structure constants
states list          the labeled entangled states of one group
states basis-change  convert a 9-amplitude JSON file between bases
density report       reduced density matrices, purity and entropy
correlate verify     run the full exact verification battery (exit 1 on failure)
sample               Monte Carlo estimate of a correlation expectation
errata               documented published-value discrepancies with oracle values

Exit codes: 0 success, 1 verification failure, 2 usage error.
The sampling seed defaults to $QUTRIT_SEED (or 42).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from .correlations import (
    canonical_operator,
    classify_bounds,
    generator_decomposition,
    solve_projector_coefficients,
)
from .density import density_of, entropy, purity, reduce
from .errata import build_errata
from .errors import QutritBellError
from .exactnum import ExactScalar
from .generators import Group, generator_set, structure_constants
from .linalg import eig_hermitian
from .states import AmplitudeSet, QUTRIT_LABELS, normalize_label, states_of
from .sampler import estimate, estimate_sharded, plan_from_operator
from .verify import all_passed, run_checks

DEFAULT_SEED = 42


def _group(value: str) -> Group:
    return Group(value)


def _fmt_exact(x, mode: str) -> str:
    if mode == "float":
        value = x.to_float() if isinstance(x, ExactScalar) else complex(x)
        if isinstance(value, complex) and value.imag == 0:
            value = value.real
        return f"{value:.12g}" if isinstance(value, float) else str(value)
    return str(x)


def _render_table(headers: Sequence[str], rows: Sequence[Sequence[str]], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(rows)
        return buf.getvalue()
    widths = [
        max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(str(h))
        for i, h in enumerate(headers)
    ]
    lines = [
        "| " + " | ".join(str(h).ljust(w) for h, w in zip(headers, widths)) + " |",
        "|" + "|".join("-" * (w + 2) for w in widths) + "|",
    ]
    for row in rows:
        lines.append(
            "| " + " | ".join(str(v).ljust(w) for v, w in zip(row, widths)) + " |"
        )
    return "\n".join(lines) + "\n"


def _matrix_lines(matrix, mode: str) -> list[str]:
    return [
        "[" + ", ".join(_fmt_exact(x, mode) for x in row) + "]"
        for row in matrix.entries
    ]


# -- command payloads --------------------------------------------------------


def _cmd_generators_dump(args) -> tuple[str, int]:
    sc = structure_constants()
    nonzero_f = []
    nonzero_d = []
    for l in range(1, 9):
        for m in range(1, 9):
            for n in range(1, 9):
                f = sc.f_tensor(l, m, n)
                d = sc.d_tensor(l, m, n)
                if f:
                    nonzero_f.append((l, m, n, f))
                if d:
                    nonzero_d.append((l, m, n, d))
    if args.format == "json":
        payload = {
            "groups": {
                group.value: {
                    "elements": [g.to_json() for g in generator_set(group).elements],
                    "hs_norms": [x.to_json() for x in generator_set(group).hs_norms],
                }
                for group in (Group.SU2, Group.SU3)
            },
            "structure_constants": {
                "f_nonzero": [
                    {"lmn": [l, m, n], "value": v.to_json(), "float": v.to_float()}
                    for l, m, n, v in nonzero_f
                ],
                "d_nonzero": [
                    {"lmn": [l, m, n], "value": v.to_json(), "float": v.to_float()}
                    for l, m, n, v in nonzero_d
                ],
            },
        }
        return json.dumps(payload, indent=2), 0
    rows = [
        ("f", l, m, n, _fmt_exact(v, args.mode), f"{v.to_float():+.10f}")
        for l, m, n, v in nonzero_f
    ] + [
        ("d", l, m, n, _fmt_exact(v, args.mode), f"{v.to_float():+.10f}")
        for l, m, n, v in nonzero_d
    ]
    table = _render_table(
        ("tensor", "l", "m", "n", "value", "value_float"), rows, args.format
    )
    if args.format == "csv":
        return table, 0
    parts = []
    for group in (Group.SU2, Group.SU3):
        gs = generator_set(group)
        parts.append(f"## {group.value} generators\n")
        for i, g in enumerate(gs.elements):
            norm = gs.hs_norms[i]
            parts.append(f"g{i} (HS norm {norm}):")
            parts.extend("  " + line for line in _matrix_lines(g, args.mode))
        parts.append("")
    parts.append("## nonzero structure constants\n")
    parts.append(table)
    return "\n".join(parts), 0


def _cmd_states_list(args) -> tuple[str, int]:
    states = states_of(args.group)
    if args.format == "json":
        payload = [
            {
                "label": s.label,
                "group": s.group.value,
                "generator_index": s.generator_index,
                "swap_symmetry": s.swap_symmetry.value,
                "amplitudes": [a.to_json() for a in s.vector.amplitudes],
                "amplitudes_float": [
                    [a.to_complex().real, a.to_complex().imag]
                    for a in s.vector.amplitudes
                ],
            }
            for s in states
        ]
        return json.dumps(payload, indent=2), 0
    rows = []
    for s in states:
        exact = ", ".join(str(a) for a in s.vector.amplitudes)
        floats = ", ".join(f"{a.to_complex().real:+.6f}" for a in s.vector.amplitudes)
        rows.append(
            (
                s.label,
                s.generator_index,
                s.swap_symmetry.value,
                exact if args.mode == "exact" else floats,
            )
        )
    return (
        _render_table(("label", "generator", "swap", "amplitudes"), rows, args.format),
        0,
    )


def _cmd_states_basis_change(args) -> tuple[str, int]:
    from .states import AmplitudeBasis, from_su3_basis, to_su3_basis

    with open(args.input, "r", encoding="utf-8") as fh:
        amplitude_set = AmplitudeSet.from_json(json.load(fh))
    if amplitude_set.basis is AmplitudeBasis.COMPUTATIONAL:
        converted = to_su3_basis(amplitude_set)
        labels = QUTRIT_LABELS
    else:
        converted = from_su3_basis(amplitude_set)
        labels = tuple(f"c{i}{j}" for i in range(3) for j in range(3))
    if args.format == "json":
        return json.dumps(converted.to_json(), indent=2), 0
    rows = [
        (labels[k], _fmt_exact(v, args.mode), f"{v.to_complex().real:+.10f}")
        for k, v in enumerate(converted.values)
        if v
    ]
    return (
        _render_table(("coefficient", "value", "value_float"), rows, args.format),
        0,
    )


def _cmd_density_report(args) -> tuple[str, int]:
    states = states_of(args.group)
    d = args.group.site_dim
    records = []
    for s in states:
        rho = density_of(s.vector, (d, d))
        reduced = reduce(rho, "A")
        records.append(
            {
                "label": s.label,
                "reduced": reduced.matrix,
                "purity": purity(reduced),
                "entropy": entropy(reduced),
            }
        )
    if args.format == "json":
        payload = [
            {
                "label": r["label"],
                "reduced_matrix": r["reduced"].to_json(),
                "purity": r["purity"].to_json(),
                "purity_float": r["purity"].to_float(),
                "entropy_bits": r["entropy"],
            }
            for r in records
        ]
        return json.dumps(payload, indent=2), 0
    rows = [
        (
            r["label"],
            "; ".join(_matrix_lines(r["reduced"], args.mode)),
            _fmt_exact(r["purity"], args.mode),
            f"{r['entropy']:.6f}",
        )
        for r in records
    ]
    return (
        _render_table(
            ("state", "reduced density (A)", "purity", "entropy_bits"),
            rows,
            args.format,
        ),
        0,
    )


def _cmd_correlate_verify(args) -> tuple[str, int]:
    checks = run_checks(args.group)
    op = canonical_operator(args.group)
    basis = list(states_of(args.group))
    report = classify_bounds(op, basis)
    decomposition = solve_projector_coefficients(op, basis)
    coeffs = generator_decomposition(op)
    eigenvalues, _ = eig_hermitian(op.matrix.to_float())
    errata = build_errata() if args.group is Group.SU3 else ()
    ok = all_passed(checks)

    if args.format == "json":
        payload = {
            "group": args.group.value,
            "passed": ok,
            "checks": [c.to_json() for c in checks],
            "operator": op.matrix.to_json(),
            "eigenvalues_float": list(eigenvalues),
            "projector_coefficients": {
                k: v.to_json() for k, v in decomposition.coefficients.items()
            },
            "generator_coefficients_nonzero": [
                {"l": l, "m": m, "value": v.to_json(), "float": v.to_complex().real}
                for l, row in enumerate(coeffs)
                for m, v in enumerate(row)
                if v
            ],
            "bounds": [
                {
                    "label": e.label,
                    "expectation": e.expectation.to_json(),
                    "expectation_float": e.expectation.to_float(),
                    "bound_class": e.bound_class.value,
                    "saturated": e.saturated,
                }
                for e in report.entries
            ],
            "errata": [e.to_json() for e in errata],
        }
        return json.dumps(payload, indent=2), 0 if ok else 1

    check_rows = [
        (c.name, "pass" if c.passed else "FAIL", c.detail) for c in checks
    ]
    bound_rows = [
        (
            e.label,
            _fmt_exact(e.expectation, args.mode),
            f"{e.expectation.to_float():+.10f}",
            e.bound_class.value,
            "yes" if e.saturated else "no",
        )
        for e in report.entries
    ]
    coeff_rows = [
        (f"g{l} (x) g{m}", _fmt_exact(v.real_part(), args.mode))
        for l, row in enumerate(coeffs)
        for m, v in enumerate(row)
        if v
    ]
    if args.format == "csv":
        return _render_table(("check", "status", "detail"), check_rows, "csv"), (
            0 if ok else 1
        )
    parts = [f"# correlation verification ({args.group.value})\n"]
    parts.append("## checks\n")
    parts.append(_render_table(("check", "status", "detail"), check_rows, "markdown"))
    parts.append("## state expectations and bound tiers\n")
    parts.append(
        _render_table(
            ("state", "<C> exact", "<C> float", "tier", "saturated"),
            bound_rows,
            "markdown",
        )
    )
    parts.append("## projector weights\n")
    parts.append(
        _render_table(
            ("state", "weight"),
            [
                (k, _fmt_exact(v, args.mode))
                for k, v in decomposition.coefficients.items()
            ],
            "markdown",
        )
    )
    parts.append("## nonzero generator tensor coefficients\n")
    parts.append(_render_table(("term", "coefficient"), coeff_rows, "markdown"))
    parts.append("## float eigenvalues (descending)\n")
    parts.append(", ".join(f"{v:+.10f}" for v in eigenvalues) + "\n")
    if errata:
        parts.append("## errata\n")
        parts.append(
            _render_table(
                ("key", "published", "oracle"),
                [(e.key, e.published, e.oracle) for e in errata],
                "markdown",
            )
        )
    parts.append("RESULT: " + ("all checks passed" if ok else "VERIFICATION FAILED"))
    return "\n".join(parts) + "\n", 0 if ok else 1


def _cmd_sample(args) -> tuple[str, int]:
    label = normalize_label(args.state, args.group)
    state = next(s for s in states_of(args.group) if s.label == label)
    plan = plan_from_operator(canonical_operator(args.group))
    if args.shards > 1:
        result = estimate_sharded(plan, state.vector, args.shots, args.seed, args.shards)
    else:
        result = estimate(plan, state.vector, args.shots, args.seed)
    if args.format == "json":
        return json.dumps(result.to_json(), indent=2), 0
    rows = [
        ("estimate", f"{result.estimate:+.6f}"),
        ("stderr", f"{result.stderr:.6f}"),
        ("shots_per_term", str(result.shots_per_term)),
        ("seed", str(result.seed)),
    ]
    return _render_table(("field", "value"), rows, args.format), 0


def _cmd_errata(args) -> tuple[str, int]:
    errata = build_errata()
    if args.format == "json":
        return json.dumps([e.to_json() for e in errata], indent=2), 0
    if args.format == "csv":
        rows = [(e.key, e.summary, e.published, e.oracle) for e in errata]
        return _render_table(("key", "summary", "published", "oracle"), rows, "csv"), 0
    parts = ["# documented discrepancies (oracle values are exact)\n"]
    for e in errata:
        parts.append(f"## {e.key}\n")
        parts.append(e.summary + "\n")
        parts.append(f"- published: {e.published}")
        parts.append(f"- oracle:    {e.oracle}")
        for line in e.details:
            parts.append(f"  - {line}")
        parts.append("")
    return "\n".join(parts), 0


# -- argument parsing --------------------------------------------------------


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "csv", "markdown"), default="markdown"
    )
    common.add_argument("--mode", choices=("exact", "float"), default="exact")
    common.add_argument("--out", default=None, help="write output to this path")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qutritbell",
        description="Exact entangled-state spectra, correlation operators and bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()

    generators = sub.add_parser("generators", help="generator-set commands")
    gsub = generators.add_subparsers(dest="subcommand", required=True)
    gsub.add_parser("dump", parents=[common]).set_defaults(func=_cmd_generators_dump)

    states = sub.add_parser("states", help="state-family commands")
    ssub = states.add_subparsers(dest="subcommand", required=True)
    s_list = ssub.add_parser("list", parents=[common])
    s_list.add_argument("--group", type=_group, choices=list(Group), default=Group.SU3)
    s_list.set_defaults(func=_cmd_states_list)
    s_bc = ssub.add_parser("basis-change", parents=[common])
    s_bc.add_argument("--input", required=True, help="amplitude-set JSON file")
    s_bc.set_defaults(func=_cmd_states_basis_change)

    density = sub.add_parser("density", help="density-matrix commands")
    dsub = density.add_subparsers(dest="subcommand", required=True)
    d_rep = dsub.add_parser("report", parents=[common])
    d_rep.add_argument("--group", type=_group, choices=list(Group), default=Group.SU3)
    d_rep.set_defaults(func=_cmd_density_report)

    correlate = sub.add_parser("correlate", help="correlation-operator commands")
    csub = correlate.add_subparsers(dest="subcommand", required=True)
    c_ver = csub.add_parser("verify", parents=[common])
    c_ver.add_argument("--group", type=_group, choices=list(Group), default=Group.SU3)
    c_ver.set_defaults(func=_cmd_correlate_verify)

    sample = sub.add_parser("sample", parents=[common], help="Monte Carlo estimation")
    sample.add_argument("--group", type=_group, choices=list(Group), default=Group.SU3)
    sample.add_argument("--state", required=True)
    sample.add_argument("--shots", type=int, required=True)
    sample.add_argument("--seed", type=int, default=None)
    sample.add_argument("--shards", type=int, default=1)
    sample.set_defaults(func=_cmd_sample)

    errata = sub.add_parser("errata", parents=[common], help="published-value errata")
    errata.set_defaults(func=_cmd_errata)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if getattr(args, "func", None) is _cmd_errata and args.mode == "float":
        parser.error("--mode float is not allowed for errata (exactness required)")
    if getattr(args, "func", None) is _cmd_sample:
        if args.shots < 1:
            parser.error("--shots must be >= 1")
        if args.shards < 1:
            parser.error("--shards must be >= 1")
        if args.seed is None:
            env_seed = os.environ.get("QUTRIT_SEED")
            try:
                args.seed = int(env_seed) if env_seed is not None else DEFAULT_SEED
            except ValueError:
                parser.error(f"QUTRIT_SEED={env_seed!r} is not an integer")

    try:
        output, code = args.func(args)
    except (QutritBellError, AssertionError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output if output.endswith("\n") else output + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
