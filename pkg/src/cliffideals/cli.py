"""Command-line front end.

Verbs: signature-info, eval, ideal classify, primes, radical, chains,
nilpotency, support.  Every verb takes -s/--signature plus --json for a
machine-readable report with the stable top-level keys {command,
signature, result, elapsed_ms}.  Domain errors surface as diagnostics on
stderr with a nonzero exit code, never as tracebacks.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .ideals import (
    ascending_chain,
    descending_chain,
    ideal_classify,
    ideal_closure,
    ideal_nilpotency_index,
    nil_radical,
    null_support_of_ideal,
    prime_ideals,
)
from .multivector import Multivector
from .parsing import parse_expression, parse_signature
from .structure import AlgebraKind, SelfCheckError, classify_pq


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-s",
        "--signature",
        required=True,
        help="algebra signature: 'p,q,z' or a role string over +, -, 0",
    )
    common.add_argument(
        "--json", action="store_true", help="emit a machine-readable report"
    )
    common.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed reserved for randomized reporting",
    )

    parser = argparse.ArgumentParser(
        prog="cliffideals",
        description=(
            "Exact ideal-structure computations in real Clifford algebras "
            "with null generators."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser(
        "signature-info",
        parents=[common],
        help="classify the algebra and print its split idempotents",
    )

    p_eval = sub.add_parser(
        "eval", parents=[common], help="evaluate a multivector expression"
    )
    p_eval.add_argument("expression")

    p_ideal = sub.add_parser("ideal", help="two-sided ideal analyses")
    ideal_sub = p_ideal.add_subparsers(dest="subcommand", required=True)
    p_classify = ideal_sub.add_parser(
        "classify",
        parents=[common],
        help="classify the ideal generated by expressions",
    )
    p_classify.add_argument(
        "--gens", required=True, help="semicolon-separated generator expressions"
    )

    sub.add_parser("primes", parents=[common], help="list the prime ideals")
    sub.add_parser("radical", parents=[common], help="compute the nil radical")

    p_chains = sub.add_parser(
        "chains", parents=[common], help="build strict ideal chains"
    )
    p_chains.add_argument("--k", type=int, required=True, help="chain length")
    direction = p_chains.add_mutually_exclusive_group()
    direction.add_argument("--ascending", action="store_true")
    direction.add_argument("--descending", action="store_true")

    p_nilp = sub.add_parser(
        "nilpotency",
        parents=[common],
        help="nilpotency index of the ideal generated by expressions",
    )
    p_nilp.add_argument("--gens", required=True)

    p_support = sub.add_parser(
        "support",
        parents=[common],
        help="null-generator support of a radical ideal",
    )
    p_support.add_argument("--gens", required=True)

    return parser


def _parse_gens(sig, text: str) -> tuple[list[str], list[Multivector]]:
    sources = [part.strip() for part in text.split(";") if part.strip()]
    return sources, [parse_expression(sig, part) for part in sources]


def _ideal_payload(ideal) -> dict:
    return {"dim": ideal.dim, "basis": ideal.basis_strings()}


def _run_signature_info(sig, args, relabel) -> dict:
    algebra_class = classify_pq(sig)
    radical = nil_radical(sig)
    result = {
        "p": sig.p,
        "q": sig.q,
        "z": sig.z,
        "dim": sig.dim,
        "roles": "+" * sig.p + "-" * sig.q + "0" * sig.z,
        "class": algebra_class.kind.value,
        "radical_dim": radical.dim,
        "relabeling": list(relabel),
        "idempotents": None,
    }
    if algebra_class.kind is AlgebraKind.SPLIT:
        e1, e2 = algebra_class.idempotents
        result["idempotents"] = [str(e1), str(e2)]
    return result


def _run_eval(sig, args, relabel) -> dict:
    value = parse_expression(sig, args.expression)
    return {"expression": args.expression, "value": str(value)}


def _run_classify(sig, args, relabel) -> dict:
    sources, gens = _parse_gens(sig, args.gens)
    ideal = ideal_closure(sig, gens)
    report = ideal_classify(ideal)
    return {
        "generators": sources,
        "verdict": report.verdict.value,
        "dim": report.dims[0],
        "radical_intersection_dim": report.dims[1],
        "basis": ideal.basis_strings(),
    }


def _run_primes(sig, args, relabel) -> dict:
    primes = prime_ideals(sig)
    return {"count": len(primes), "ideals": [_ideal_payload(p) for p in primes]}


def _run_radical(sig, args, relabel) -> dict:
    return _ideal_payload(nil_radical(sig))


def _run_chains(sig, args, relabel) -> dict:
    ascending = bool(args.ascending)
    chain = (ascending_chain if ascending else descending_chain)(sig, args.k)
    return {
        "direction": "ascending" if ascending else "descending",
        "length": args.k,
        "dims": [ideal.dim for ideal in chain],
        "ideals": [_ideal_payload(ideal) for ideal in chain],
    }


def _run_nilpotency(sig, args, relabel) -> dict:
    sources, gens = _parse_gens(sig, args.gens)
    ideal = ideal_closure(sig, gens)
    return {
        "generators": sources,
        "ideal_dim": ideal.dim,
        "ideal_nilpotency_index": ideal_nilpotency_index(ideal),
        "element_indices": [g.nilpotency_index() for g in gens],
    }


def _run_support(sig, args, relabel) -> dict:
    sources, gens = _parse_gens(sig, args.gens)
    ideal = ideal_closure(sig, gens)
    canonical, minimal = null_support_of_ideal(ideal)
    return {
        "generators": sources,
        "ideal_dim": ideal.dim,
        "canonical": sorted(canonical),
        "minimal": sorted(minimal),
    }


_HANDLERS = {
    "signature-info": _run_signature_info,
    "eval": _run_eval,
    "ideal classify": _run_classify,
    "primes": _run_primes,
    "radical": _run_radical,
    "chains": _run_chains,
    "nilpotency": _run_nilpotency,
    "support": _run_support,
}


def run(args: argparse.Namespace) -> dict:
    """Dispatch parsed arguments to the library and build the report."""
    command = args.command
    if getattr(args, "subcommand", None):
        command = f"{command} {args.subcommand}"
    sig, relabel = parse_signature(args.signature)
    start = time.perf_counter()
    result = _HANDLERS[command](sig, args, relabel)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return {
        "command": command,
        "signature": str(sig),
        "result": result,
        "elapsed_ms": round(elapsed_ms, 3),
    }


def _render_value(value, indent: int) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for key, inner in value.items():
            if isinstance(inner, (dict, list)) and inner and not _is_flat(inner):
                lines.append(f"{pad}{key}:")
                lines.extend(_render_value(inner, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_flat(inner)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_value(item, indent + 1))
            else:
                lines.append(f"{pad}- {_flat(item)}")
    else:
        lines.append(f"{pad}{_flat(value)}")
    return lines


def _is_flat(value) -> bool:
    if isinstance(value, list):
        return all(not isinstance(v, (dict, list)) for v in value)
    return False


def _flat(value) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(str(v) for v in value) + "]"
    if value is None:
        return "none"
    return str(value)


def render_text(report: dict) -> str:
    lines = [
        f"command: {report['command']}",
        f"signature: {report['signature']}",
    ]
    lines.extend(_render_value(report["result"], 0))
    lines.append(f"elapsed: {report['elapsed_ms']} ms")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = run(args)
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SelfCheckError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(render_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
