"""Command line access to the checkers, generators, search, and campaigns.

Exit codes: 0 when the asked-for property holds (condition satisfied, cycle
found, campaign clean), 1 for a definite negative, 2 when a budget ran out
before a definite answer, 64 for unusable input of any kind.
"""

from __future__ import annotations

import argparse
import json
import sys

from .conditions import (
    ConditionReport,
    chvatal_graph,
    conjecture_r_uniform,
    posa_graph,
    posa_nonuniform,
    posa_r_uniform,
)
from .constructions import designated_violation_tag, generate, predicted_degree_sequence
from .core import BergePath, DegreeSequence, DomainError, PreconditionError
from .formats import (
    ParseError,
    load_bhg,
    read_certificate,
    save_bhg,
    verify_certificate,
    write_bhg,
    write_certificate,
)
from .harness import (
    CampaignConfig,
    SampleProfile,
    conjecture_search,
    sharpness_campaign,
    verify_theorem_campaign,
)
from .solver import (
    SearchBudget,
    find_hamiltonian_berge_cycle,
    guaranteed_reachable_ends,
    rotation_closure,
)

USAGE_ERROR = 64


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; the contract here is 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="bergeham",
        description=(
            "Degree conditions, extremal constructions, and exact search "
            "for Hamiltonian Berge cycles in hypergraphs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "check",
        help="evaluate a degree condition on a sequence or a hypergraph file",
        description=(
            "INPUT is 'seq:d1,d2,...' for an inline ascending degree "
            "sequence, a .bhg hypergraph file, or a whitespace-separated "
            "list of integers in a file."
        ),
    )
    p.add_argument("input")
    p.add_argument(
        "--theorem",
        required=True,
        choices=["posa", "chvatal", "r-uniform", "non-uniform", "conjecture"],
    )
    p.add_argument("--r", type=int, help="edge size for the uniform checkers")
    p.add_argument(
        "--force",
        action="store_true",
        help="run the non-uniform checker below its proven range (n <= 40)",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser(
        "generate", help="emit an extremal construction as a .bhg file"
    )
    p.add_argument("--family", required=True, choices=["H1", "H2", "H3", "h1", "h2", "h3"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, help="class size for H1 and H2")
    p.add_argument("--out", help="write the .bhg here instead of stdout")
    p.add_argument(
        "--predict",
        action="store_true",
        help="print the designed degree sequence and violation tag instead",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser(
        "solve", help="decide Hamiltonicity of a .bhg instance exactly"
    )
    p.add_argument("file")
    p.add_argument("--budget-nodes", type=int, default=SearchBudget().max_nodes)
    p.add_argument("--time-limit", type=float, help="seconds before giving up")
    p.add_argument("--certificate", help="write a verifiable certificate here")
    p.add_argument(
        "--threads",
        type=int,
        default=1,
        help="reserved; the exact search runs on one thread",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser(
        "rotate",
        help="explore path rotations and report reachable start vertices",
        description=(
            "--path alternates vertices and edge ids: v1,e1,v2,e2,...,vt "
            "describing a Hamiltonian Berge path of the instance."
        ),
    )
    p.add_argument("file")
    p.add_argument("--path", required=True)
    p.add_argument("--budget-nodes", type=int, default=2000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_rotate)

    p = sub.add_parser("campaign", help="run a randomized campaign")
    p.add_argument("kind", choices=["verify", "sharpness", "conjecture"])
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument(
        "--non-uniform",
        action="store_true",
        help="sample over all edge sizes (verify campaigns)",
    )
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget-nodes", type=int, default=200_000)
    p.add_argument("--edge-probability", type=float, default=0.5)
    p.add_argument("--starved", type=int, default=0)
    p.add_argument("--starved-probability", type=float, default=0.05)
    p.add_argument("--family", choices=["H1", "H2", "H3", "h1", "h2", "h3"])
    p.add_argument("--n-max", type=int, default=12, help="sharpness grid bound")
    p.add_argument("--force", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--report", help="write the full deterministic report here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_campaign)

    p = sub.add_parser(
        "verify-cert", help="check a certificate, optionally against its instance"
    )
    p.add_argument("certificate")
    p.add_argument("--hypergraph", help=".bhg file the certificate refers to")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_cert)

    return parser


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _sequence_from_input(raw: str) -> tuple[DegreeSequence, str]:
    """Resolve the check command's INPUT argument; returns (sequence, source)."""
    if raw.startswith("seq:"):
        body = raw[len("seq:"):].replace(",", " ")
        try:
            values = tuple(int(tok) for tok in body.split())
        except ValueError:
            raise DomainError(f"inline sequence has a non-integer entry: {raw!r}")
        if not values:
            raise DomainError("inline sequence is empty")
        return DegreeSequence(values), "inline"
    if raw.endswith(".bhg"):
        return load_bhg(raw).degree_sequence(), "hypergraph"
    try:
        values = tuple(int(tok) for tok in _read_text(raw).split())
    except ValueError:
        raise DomainError(
            f"{raw}: expected whitespace-separated integers "
            "(use a .bhg suffix for hypergraph files)"
        )
    if not values:
        raise DomainError(f"{raw}: no degree entries found")
    return DegreeSequence(values), "file"


def _run_checker(args, seq: DegreeSequence) -> ConditionReport:
    if args.theorem in ("r-uniform", "conjecture") and args.r is None:
        raise DomainError(f"--theorem {args.theorem} needs --r")
    if args.theorem == "posa":
        return posa_graph(seq)
    if args.theorem == "chvatal":
        return chvatal_graph(seq)
    if args.theorem == "r-uniform":
        return posa_r_uniform(seq, args.r)
    if args.theorem == "conjecture":
        return conjecture_r_uniform(seq, args.r)
    return posa_nonuniform(seq, force=args.force)


def _violation_lines(report: ConditionReport) -> list[str]:
    out = []
    for v in report.violations:
        line = (
            f"violation: tag {v.tag} at index {v.index}: "
            f"degree {v.actual} does not beat {v.bound}"
        )
        if v.detail:
            line += f" ({v.detail})"
        out.append(line)
    return out


def _cmd_check(args) -> int:
    seq, source = _sequence_from_input(args.input)
    report = _run_checker(args, seq)
    if args.json:
        payload = {
            "theorem": args.theorem,
            "input": source,
            "n": report.n,
            "r": report.r,
            "forced": report.forced,
            "satisfied": report.satisfied,
            "violations": [
                {
                    "tag": v.tag,
                    "index": v.index,
                    "bound": v.bound,
                    "actual": v.actual,
                    "detail": v.detail,
                }
                for v in report.violations
            ],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"theorem: {args.theorem}")
        print(f"n: {report.n}")
        if report.r is not None:
            print(f"r: {report.r}")
        if report.forced:
            print("forced: yes (below the proven range)")
        print(f"satisfied: {'yes' if report.satisfied else 'no'}")
        for line in _violation_lines(report):
            print(line)
    return 0 if report.satisfied else 1


def _cmd_generate(args) -> int:
    hg, spec = generate(args.family, args.n, args.r, args.k)
    predicted = predicted_degree_sequence(spec)
    tag = designated_violation_tag(args.family)
    label = (
        f"{spec.family}(n={spec.n}, r={spec.r}"
        + (f", k={spec.k}" if spec.k is not None else "")
        + ")"
    )
    if args.out:
        save_bhg(hg, args.out, comment=label)
    if args.json:
        payload = {
            "family": spec.family,
            "n": spec.n,
            "r": spec.r,
            "k": spec.k,
            "edges": hg.num_edges,
            "predicted_degrees": list(predicted.values),
            "designated_tag": tag,
            "out": args.out,
        }
        print(json.dumps(payload, sort_keys=True))
    elif args.predict:
        print(f"construction: {label}")
        print(f"edges: {hg.num_edges}")
        print("predicted degrees: " + " ".join(str(d) for d in predicted.values))
        print(f"designated violation: tag {tag}")
    elif not args.out:
        sys.stdout.write(write_bhg(hg, comment=label))
    return 0


def _budget_from(args) -> SearchBudget:
    return SearchBudget(
        max_nodes=args.budget_nodes,
        time_limit=getattr(args, "time_limit", None),
    )


def _cmd_solve(args) -> int:
    hg = load_bhg(args.file)
    result = find_hamiltonian_berge_cycle(hg, _budget_from(args))
    if args.certificate and result.cycle is not None:
        with open(args.certificate, "w", encoding="utf-8") as fh:
            fh.write(write_certificate(hg, result.cycle))
    if args.json:
        payload = {
            "status": result.status,
            "nodes": result.nodes,
            "vertices": list(result.cycle.vertices) if result.cycle else None,
            "edge_ids": list(result.cycle.edge_ids) if result.cycle else None,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"status: {result.status}")
        print(f"nodes: {result.nodes}")
        if result.cycle is not None:
            print("vertices: " + " ".join(str(v) for v in result.cycle.vertices))
            print("edge ids: " + " ".join(str(e) for e in result.cycle.edge_ids))
        if args.certificate and result.cycle is not None:
            print(f"certificate written to {args.certificate}")
    return {"cycle": 0, "none": 1, "unknown": 2}[result.status]


def _parse_walk(raw: str) -> BergePath:
    try:
        values = [int(tok) for tok in raw.replace(",", " ").split()]
    except ValueError:
        raise DomainError(f"--path must be integers, got {raw!r}")
    if len(values) < 1 or len(values) % 2 == 0:
        raise DomainError(
            "--path alternates vertices and edge ids and ends on a vertex"
        )
    return BergePath(tuple(values[0::2]), tuple(values[1::2]))


def _cmd_rotate(args) -> int:
    hg = load_bhg(args.file)
    path = _parse_walk(args.path)
    state = rotation_closure(hg, path, SearchBudget(max_nodes=args.budget_nodes))
    guaranteed = guaranteed_reachable_ends(hg, path)
    contained = guaranteed <= state.reachable_ends
    if args.json:
        payload = {
            "fixed_end": state.fixed_end,
            "start": path.vertices[0],
            "prefix_bound": state.prefix_bound,
            "reachable_ends": sorted(state.reachable_ends),
            "guaranteed_ends": sorted(guaranteed),
            "lower_bound_contained": contained,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"start: {path.vertices[0]}")
        print(f"fixed end: {state.fixed_end}")
        print(f"prefix bound: {state.prefix_bound}")
        print("reachable ends: " + " ".join(str(v) for v in sorted(state.reachable_ends)))
        print("guaranteed ends: " + " ".join(str(v) for v in sorted(guaranteed)))
        print(f"lower bound contained: {'yes' if contained else 'no'}")
    return 0 if contained else 1


def _cmd_campaign(args) -> int:
    budget = SearchBudget(max_nodes=args.budget_nodes)
    if args.kind == "sharpness":
        if not args.family:
            raise DomainError("campaign sharpness needs --family")
        report = sharpness_campaign(
            args.family,
            grid=None,
            budget=budget,
            n_max=args.n_max,
        )
    else:
        if args.n is None:
            raise DomainError(f"campaign {args.kind} needs --n")
        if args.kind == "conjecture" and args.r is None:
            raise DomainError("campaign conjecture needs --r")
        if args.kind == "verify" and args.r is None and not args.non_uniform:
            raise DomainError("campaign verify needs --r or --non-uniform")
        profile = SampleProfile(
            edge_probability=args.edge_probability,
            starved=args.starved,
            starved_probability=args.starved_probability,
        )
        cfg = CampaignConfig(
            n=args.n,
            r=args.r,
            samples=args.samples,
            seed=args.seed,
            profile=profile,
            budget=budget,
            force=args.force,
            threads=args.threads,
        )
        if args.kind == "verify":
            report = verify_theorem_campaign(cfg)
        else:
            report = conjecture_search(cfg)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report.render())
    counts = report.counts()
    if args.json:
        payload = {
            "kind": report.kind,
            "counts": counts,
            "trials": len(report.records),
            "counterexamples": len(report.counterexamples),
            "report": args.report,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"kind: {report.kind}")
        for name, value in report.params:
            print(f"{name}: {value}")
        print(
            "counts: "
            + " ".join(f"{name}={counts[name]}" for name in ("pass", "fail", "unknown", "skip"))
        )
        if args.report:
            print(f"report written to {args.report}")
        for i, _ in enumerate(report.counterexamples):
            print(f"counterexample {i} recorded in the report")
    if counts["fail"] > 0:
        return 1
    if counts["unknown"] > 0:
        return 2
    return 0


def _cmd_verify_cert(args) -> int:
    cert = read_certificate(_read_text(args.certificate))
    hg = load_bhg(args.hypergraph) if args.hypergraph else None
    verdict = verify_certificate(cert, hg)
    if args.json:
        payload = {
            "kind": cert.kind,
            "valid": bool(verdict),
            "reason": verdict.reason,
            "against_instance": hg is not None,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"type: {cert.kind}")
        print(f"valid: {'yes' if bool(verdict) else 'no'}")
        if not verdict:
            print(f"reason: {verdict.reason}")
    return 0 if verdict else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (DomainError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
