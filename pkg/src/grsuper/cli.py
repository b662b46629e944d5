"""Command-line front end.

::

    grsuper --command decompose --builtin EX3
    grsuper --command validate --input alg.json --format structured

Exit status: 0 success, 1 bad invocation or unreadable input, 2 hypotheses
not met, 3 the algebra fails validation, 4 an internal verification failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import io
from .algebra import GradedSuperalgebra, support, validate
from .connections import connection_classes, oracle_connected, oracle_partition, support_graph
from .corpus import builtin, builtin_names
from .decomposition import teo2_decompose, teo4_pipeline
from .errors import GrSuperError, HypothesesNotMet, ParseError, VerificationFailure
from .ideals import hypothesis_report, is_graded_ideal

__all__ = ["RunConfig", "run", "main", "COMMANDS", "EXIT"]

COMMANDS = ("validate", "support", "connections", "ideals", "decompose", "report")
EXIT = {"ok": 0, "usage": 1, "hypotheses": 2, "invalid": 3, "verification": 4}


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str | None = None
    builtin: str | None = None
    format: str = "text"
    oracle_depth: int | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if (self.input_path is None) == (self.builtin is None):
            raise ValueError("give exactly one of an input path or a builtin name")
        if self.format not in ("text", "structured"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.oracle_depth is not None and self.oracle_depth < 1:
            raise ValueError("oracle depth must be at least 1")


class _Failure(Exception):
    """Carries a status and a payload out of a section."""

    def __init__(self, status, payload):
        self.status = status
        self.payload = payload


def _degrees(gs):
    return [list(g.coords) for g in gs]


def _hypothesis_payload(exc: HypothesesNotMet) -> dict:
    return {"error": "hypotheses_not_met", "failed": exc.failed,
            "witnesses": exc.witnesses, "message": str(exc)}


# -- sections ----------------------------------------------------------------
# Each returns a JSON-ready dict or raises.


def _validate_section(alg: GradedSuperalgebra) -> dict:
    rep = validate(alg)
    out = {
        "valid": rep.ok,
        "dim": alg.dim,
        "violations": [
            {"kind": v.kind, "witness": list(v.names(alg)), "detail": v.detail} for v in rep.violations
        ],
    }
    if not rep.ok:
        raise _Failure(EXIT["invalid"], out)
    return out


def _support_section(alg: GradedSuperalgebra) -> dict:
    sup = support(alg)
    return {
        "sigma": _degrees(sup.sigma),
        "sigma_even": _degrees(sup.sigma0),
        "sigma_odd": _degrees(sup.sigma1),
        "symmetric": sup.symmetric,
        "components": [
            {"degree": list(g.coords), "parity": p, "dim": len(idx)}
            for (g, p), idx in alg.components().items()
        ],
    }


def _connections_section(alg: GradedSuperalgebra, depth: int | None) -> dict:
    sg = support_graph(alg)
    complete = len(sg) + 1
    depth = complete if depth is None else depth
    classes = connection_classes(sg)
    blocks = oracle_partition(sg, depth)
    agree = sorted(tuple(c.members) for c in classes) == sorted(blocks)
    chains = []
    for c in classes:
        for h in c.members:
            chain = oracle_connected(sg, c.representative, h, depth)
            chains.append({
                "from": list(c.representative.coords),
                "to": list(h.coords),
                "chain": None if chain is None else _degrees(chain),
            })
    out = {
        "classes": [c.to_list() for c in classes],
        "oracle_partition": [_degrees(b) for b in blocks],
        "oracle_depth": depth,
        "oracle_complete": depth >= complete,
        "agree": agree,
        "chains": chains,
    }
    if not agree and depth >= complete:
        raise _Failure(EXIT["verification"], {
            "error": "verification_failure",
            "message": "connection classes differ from the oracle partition at complete depth",
            **out,
        })
    return out


def _ideals_section(alg: GradedSuperalgebra) -> dict:
    dec = teo2_decompose(alg)
    ideals = []
    for I in dec.ideals:
        chk = is_graded_ideal(alg, I.total)
        if not chk.ok:
            raise VerificationFailure(f"class ideal of {I.cls.to_list()} is not a graded ideal: {chk.witness}")
        ideals.append({
            "class": I.cls.to_list(),
            "dim": I.dim,
            "identity_part_dim": I.one_part.dim,
            "subspace": I.total.to_dict(alg),
        })
    return {
        "u_complement": dec.u_complement.to_dict(alg),
        "bracket_span": dec.bracket_span.to_dict(alg),
        "ideals": ideals,
        "hypothesis": hypothesis_report(alg).to_dict(),
    }


def _decompose_section(alg: GradedSuperalgebra) -> dict:
    return teo4_pipeline(alg).to_dict()


# -- rendering ---------------------------------------------------------------


def _text_validate(d):
    if d["valid"]:
        return [f"valid (dim {d['dim']})"]
    lines = [f"INVALID: {len(d['violations'])} violation(s)"]
    for v in d["violations"]:
        lines.append(f"  {v['kind']} ({', '.join(v['witness'])}): {v['detail']}")
    return lines


def _text_support(d):
    return [
        f"support: {d['sigma']}",
        f"  even: {d['sigma_even']}",
        f"  odd:  {d['sigma_odd']}",
        f"  symmetric: {d['symmetric']}",
    ]


def _text_connections(d):
    lines = [f"connection classes: {len(d['classes'])}"]
    for c in d["classes"]:
        lines.append(f"  {c}")
    state = "agrees" if d["agree"] else "DISAGREES"
    lines.append(f"oracle (depth {d['oracle_depth']}) {state}: {d['oracle_partition']}")
    return lines


def _text_ideals(d):
    lines = [f"U complement: dim {d['u_complement']['dim']}"]
    for I in d["ideals"]:
        lines.append(f"  class {I['class']}: ideal dim {I['dim']} (identity part {I['identity_part_dim']})")
    return lines


def _text_decompose(d):
    lines = [f"structure of {d['algebra'] or 'algebra'} (dim {d['dim']})",
             f"gr-simple components K: {len(d['simple_components'])}"]
    for c in d["simple_components"]:
        lines.append(f"  [{c['kind']}] dim {c['dim']}: {', '.join(c['basis'])}")
    lines.append(f"small components Q: {len(d['small_components'])}")
    for c in d["small_components"]:
        lines.append(f"  [{c['kind']} n={c['n']}] dim {c['dim']}: {', '.join(c['basis'])}")
    lines.append(f"direct sum checked: {d['direct_sum_checked']}")
    return lines


def _text_error(d):
    lines = [f"{d.get('error', 'error')}: {d.get('message', '')}"]
    for flag, ws in sorted(d.get("witnesses", {}).items()):
        for w in ws:
            lines.append(f"  {flag}: {w}")
    return lines


_TEXT = {
    "validate": _text_validate,
    "support": _text_support,
    "connections": _text_connections,
    "ideals": _text_ideals,
    "decompose": _text_decompose,
}


def _render_text(command, payload):
    if payload.get("valid") is False:
        return _text_validate(payload)
    if "error" in payload:
        return _text_error(payload)
    return _TEXT[command](payload)


# -- driver ------------------------------------------------------------------


def _section(alg, command, depth):
    """``(status, payload)`` for one analysis command on a parsed algebra."""
    try:
        if command != "validate":
            _validate_section(alg)
        if command == "validate":
            return EXIT["ok"], _validate_section(alg)
        if command == "support":
            return EXIT["ok"], _support_section(alg)
        if command == "connections":
            return EXIT["ok"], _connections_section(alg, depth)
        if command == "ideals":
            return EXIT["ok"], _ideals_section(alg)
        return EXIT["ok"], _decompose_section(alg)
    except _Failure as f:
        return f.status, f.payload
    except HypothesesNotMet as exc:
        return EXIT["hypotheses"], _hypothesis_payload(exc)
    except VerificationFailure as exc:
        return EXIT["verification"], {"error": "verification_failure", "message": str(exc)}


def _load(config: RunConfig) -> GradedSuperalgebra:
    if config.builtin is not None:
        return builtin(config.builtin)
    return io.load(config.input_path)


def run(config: RunConfig) -> tuple[int, str]:
    """Execute one command; returns the exit status and the rendered output."""
    try:
        alg = _load(config)
    except KeyError as exc:
        return EXIT["usage"], f"error: {exc.args[0]}"
    except OSError as exc:
        return EXIT["usage"], f"error: cannot read {config.input_path}: {exc.strerror or exc}"
    except ParseError as exc:
        return EXIT["usage"], f"error: parse failure: {exc}"

    if config.command == "report":
        sections = {}
        statuses = []
        for cmd in COMMANDS[:-1]:
            status, payload = _section(alg, cmd, config.oracle_depth)
            sections[cmd] = payload
            statuses.append(status)
            if cmd == "validate" and status != EXIT["ok"]:
                break
        # validation failure dominates; otherwise the most severe status wins
        status = EXIT["invalid"] if EXIT["invalid"] in statuses else max(statuses)
        if config.format == "structured":
            out = json.dumps({"algebra": alg.name, "status": status, "sections": sections},
                             indent=2, sort_keys=True)
        else:
            lines = [f"report for {alg.name or 'algebra'}"]
            for cmd, payload in sections.items():
                lines.append(f"== {cmd}")
                lines.extend(_render_text(cmd, payload))
            lines.append(f"exit status: {status}")
            out = "\n".join(lines)
        return status, out

    status, payload = _section(alg, config.command, config.oracle_depth)
    if config.format == "structured":
        return status, json.dumps(payload, indent=2, sort_keys=True)
    return status, "\n".join(_render_text(config.command, payload))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT["usage"], f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="grsuper", description="Analyse group-graded Lie superalgebras.")
    p.add_argument("--command", required=True, choices=COMMANDS)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="PATH", help="algebra document (JSON)")
    src.add_argument("--builtin", metavar="NAME", help="one of: " + ", ".join(builtin_names()))
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--oracle-depth", type=int, metavar="N",
                   help="chain length bound for the connection oracle (default |Sigma| + 1)")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(args.command, args.input, args.builtin, args.format, args.oracle_depth)
    except ValueError as exc:
        print(f"grsuper: error: {exc}", file=sys.stderr)
        return EXIT["usage"]
    try:
        status, out = run(config)
    except GrSuperError as exc:
        print(f"grsuper: error: {exc}", file=sys.stderr)
        return EXIT["verification"]
    stream = sys.stderr if status == EXIT["usage"] else sys.stdout
    print(out, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
