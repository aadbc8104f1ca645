"""
knot-parity command line

One subcommand per library operation. Text output by default, JSON with
--json. Exit codes: 0 success, 1 parse error, 2 precondition violation,
3 theorem-violation witness, failing suite or repair warning.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, NoReturn, Optional, Sequence, Tuple

from pydantic import ValidationError

from .atoms import atom_surface, atom_to_dict, canonical_atom, enumerate_atoms, orientability
from .codes import CodeKind, LinkCode, canonical_form, detect_kind, parse_code, serialize_code
from .config import get_settings
from .corpus import parse_seed_range
from .cycles import generating_family, span_dimension, walk_to_text
from .errors import KnotParityError, ParseError, PreconditionError, TheoremViolationWitness
from .graph import (
    cycle_space_dimension,
    graph_components,
    intersection_graph,
    mixed_crossings,
    self_crossings,
    to_framed_graph,
    unicursal_components,
)
from .projection import filtration, map_f, repair_sequence, verify_sequence
from .registry import default_registry
from .search import bfs_equivalence, random_walk, round_trip_walk
from .sequence import DiagramSequence
from .verify import SUITES, batch_verify


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_PRECONDITION = 2
EXIT_WITNESS = 3

# payload for --json, text for plain output, exit code
Outcome = Tuple[Any, str, int]


def _code(args: argparse.Namespace) -> LinkCode:
    return parse_code(args.code)


def _flag(value: bool) -> str:
    return "true" if value else "false"


# === Graph core ===

def cmd_parse(args: argparse.Namespace) -> Outcome:
    code = _code(args)
    payload = {
        "kind": code.kind.value,
        "code": serialize_code(code),
        "circles": len(code.circles),
        "crossings": code.crossings,
    }
    text = (
        f"{payload['code']}\n"
        f"kind: {code.kind.value}, circles: {len(code.circles)}, crossings: {code.crossings}"
    )
    return payload, text, EXIT_OK


def cmd_canon(args: argparse.Namespace) -> Outcome:
    canonical = serialize_code(canonical_form(_code(args)))
    return {"canonical": canonical}, canonical, EXIT_OK


def cmd_components(args: argparse.Namespace) -> Outcome:
    graph = to_framed_graph(_code(args))
    partition = unicursal_components(graph)
    payload = {
        "components": partition.count,
        "free_loops": partition.free_loops,
        "self_crossings": self_crossings(graph, partition),
        "mixed_crossings": mixed_crossings(graph, partition),
        "graph_components": graph_components(graph),
        "cycle_space_dimension": cycle_space_dimension(graph),
        "span_dimension": span_dimension(graph),
        "family": [walk.origin for walk in generating_family(graph, partition)],
    }
    text = "\n".join(f"{key}: {value}" for key, value in payload.items())
    return payload, text, EXIT_OK


def cmd_igraph(args: argparse.Namespace) -> Outcome:
    igraph = intersection_graph(to_framed_graph(_code(args)))
    edges = [
        {"components": [i, j], "crossings": data["crossings"]}
        for i, j, data in sorted(igraph.edges(data=True))
    ]
    payload = {"nodes": sorted(igraph.nodes), "edges": edges}
    lines = [f"nodes: {payload['nodes']}"]
    lines.extend(f"{e['components'][0]} - {e['components'][1]}: {e['crossings']}" for e in edges)
    return payload, "\n".join(lines), EXIT_OK


# === Parity and projection ===

def cmd_parity(args: argparse.Namespace) -> Outcome:
    rule = default_registry().get_rule(args.rule)
    assignment = rule.assign(_code(args))
    return assignment.to_dict(), assignment.to_text(), EXIT_OK


def cmd_fmap(args: argparse.Namespace) -> Outcome:
    code = _code(args)
    rule = default_registry().get_rule(args.rule)
    image = serialize_code(map_f(code, rule.assign(code)))
    return {"image": image}, image, EXIT_OK


def cmd_filtration(args: argparse.Namespace) -> Outcome:
    result = filtration(_code(args), default_registry().get_rule(args.rule))
    payload = result.to_dict()
    return payload, f"level: {payload['level']}\ncore: {payload['core']}", EXIT_OK


# === Atoms ===

def cmd_atoms(args: argparse.Namespace) -> Outcome:
    code = _code(args)
    signed = code.kind == CodeKind.VIRTUAL
    if args.canonical or (signed and not args.enumerate):
        atoms = [canonical_atom(code)]
    else:
        atoms = enumerate_atoms(to_framed_graph(code))
    entries = [atom_to_dict(atom, atom_surface(atom)) for atom in atoms]
    lines = []
    for entry in entries:
        shape = f"genus {entry['genus']}" if entry["orientable"] else f"crosscaps {entry['crosscaps']}"
        lines.append(
            f"{entry['black_choice'] or '-'}: chi {entry['chi']}, "
            f"orientable {_flag(entry['orientable'])}, {shape}"
        )
    return {"atoms": entries}, "\n".join(lines), EXIT_OK


def cmd_orientable(args: argparse.Namespace) -> Outcome:
    graph = to_framed_graph(_code(args))
    result = orientability(graph)
    witness = walk_to_text(graph, result.witness) if result.witness is not None else None
    payload = {"orientable": result.orientable, "witness": witness}
    text = f"orientable: {_flag(result.orientable)}"
    if witness:
        text += f"\nwitness: {witness}"
    return payload, text, EXIT_OK


# === Moves and sequences ===

def cmd_search(args: argparse.Namespace) -> Outcome:
    kind = detect_kind(f"{args.code}\n{args.target}")
    a = parse_code(args.code, kind)
    try:
        b = parse_code(args.target, kind)
    except ParseError as e:
        raise ParseError(f"target: {e.message}", None)
    found = bfs_equivalence(a, b, args.max_crossings, args.max_depth, args.strict_r2)
    if found is None:
        return {"found": False, "sequence": None}, "NONE-WITHIN-BOUNDS", EXIT_OK
    text = found.to_text()
    return {"found": True, "moves": len(found), "sequence": text.splitlines()}, text, EXIT_OK


def cmd_walk(args: argparse.Namespace) -> Outcome:
    code = _code(args)
    walker = round_trip_walk if args.round_trip else random_walk
    walk = walker(code, args.length, args.seed, args.max_crossings, args.strict_r2)
    text = walk.to_text()
    return {"moves": len(walk), "sequence": text.splitlines()}, text, EXIT_OK


def _read_sequence(path: str) -> DiagramSequence:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return DiagramSequence.from_text(text)


def cmd_repair(args: argparse.Namespace) -> Outcome:
    seq = _read_sequence(args.file)
    if args.check:
        check = verify_sequence(seq, args.strict_r2)
        ok = check.replayable
        lines = [f"replayable: {_flag(ok)}", f"all_orientable: {_flag(check.all_orientable)}"]
        lines.extend(f"step {f['index']}: {f['reason']}" for f in check.failures)
        return check.to_dict(), "\n".join(lines), EXIT_OK if ok else EXIT_WITNESS

    report = repair_sequence(seq, default_registry().get_rule(args.rule), args.strict_r2)
    payload = report.to_dict()
    lines = [f"status: {report.status}", f"iterations: {report.iterations}",
             f"all_orientable: {_flag(report.all_orientable)}"]
    lines.extend(f"warning: {w}" for w in report.warnings)
    lines.extend(f"error: {e['code']} {e['message']}" for e in report.errors)
    if report.output is not None:
        lines.append(report.output.to_text())
    code = EXIT_OK if report.status == "ok" else EXIT_WITNESS
    return payload, "\n".join(lines), code


# === Verification ===

def cmd_verify(args: argparse.Namespace) -> Outcome:
    parameters: Dict[str, Any] = {
        "rule": args.rule,
        "max_chords": args.max_chords,
        "max_crossings": args.max_crossings,
        "length": args.length,
        "strict_r2": args.strict_r2,
    }
    if args.seeds is not None:
        parameters["seeds"] = parse_seed_range(args.seeds)
    report = batch_verify(args.suite, **parameters)
    lines = [report.summary()]
    for failure in report.to_dict()["failures"]:
        lines.append(f"  {failure['description']}")
        if failure.get("rerun"):
            lines.append(f"    rerun: {failure['rerun']}")
    lines.extend(f"note: {note}" for note in report.notes)
    return report.to_dict(), "\n".join(lines), EXIT_OK if report.passed else EXIT_WITNESS


# === Parser ===

class CommandParser(argparse.ArgumentParser):
    """Argument parser that reports malformed invocations as parse errors"""

    def error(self, message: str) -> NoReturn:
        raise ParseError(f"{self.prog}: {message}")


def _build_parser() -> argparse.ArgumentParser:

    settings = get_settings()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--strict-r2", action="store_true", default=None,
        help="only accept the p q ... q p pattern for unsigned R2",
    )
    with_rule = argparse.ArgumentParser(add_help=False)
    with_rule.add_argument(
        "--rule", "--parity", dest="rule", default="gaussian",
        help="parity rule: " + ", ".join(r.name for r in default_registry().list_rules()),
    )

    parser = CommandParser(
        prog="knot-parity",
        description="Parity, projection and atom orientability for free and virtual links.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable, help_text: str, *parents) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, parents=[common, *parents])
        p.set_defaults(handler=handler)
        return p

    for name, handler, help_text in (
        ("parse", cmd_parse, "parse and normalise a Gauss code"),
        ("canon", cmd_canon, "canonical form up to symmetry"),
        ("components", cmd_components, "unicursal components and cycle space"),
        ("igraph", cmd_igraph, "intersection graph of the components"),
        ("orientable", cmd_orientable, "source-sink orientability of the frame"),
    ):
        command(name, handler, help_text).add_argument("code")

    for name, handler, help_text in (
        ("parity", cmd_parity, "crossing parity under a rule"),
        ("fmap", cmd_fmap, "delete the odd crossings"),
        ("filtration", cmd_filtration, "filtration level and core"),
    ):
        command(name, handler, help_text, with_rule).add_argument("code")

    atoms = command("atoms", cmd_atoms, "atoms over the frame")
    atoms.add_argument("code")
    atoms.add_argument("--enumerate", action="store_true", help="all 2^n black choices")
    atoms.add_argument("--canonical", action="store_true", help="the atom of a signed code")

    search = command("search", cmd_search, "breadth-first move search between two codes")
    search.add_argument("code")
    search.add_argument("target")
    search.add_argument("--max-crossings", type=int, default=settings.max_crossings)
    search.add_argument("--max-depth", type=int, default=6)

    walk = command("walk", cmd_walk, "seeded random walk, printed as a sequence file")
    walk.add_argument("code")
    walk.add_argument("--length", type=int, default=5)
    walk.add_argument("--seed", type=int, default=0)
    walk.add_argument("--max-crossings", type=int, default=settings.max_crossings)
    walk.add_argument("--round-trip", action="store_true", help="append the walk undone")

    repair = command("repair", cmd_repair, "repair a sequence file ('-' for stdin)", with_rule)
    repair.add_argument("file")
    repair.add_argument("--check", action="store_true", help="only replay and report")

    verify = command("verify", cmd_verify, "run a verification suite", with_rule)
    verify.add_argument("suite", choices=sorted(SUITES))
    verify.add_argument("--max-chords", type=int)
    verify.add_argument("--max-crossings", type=int)
    verify.add_argument("--length", type=int)
    verify.add_argument("--seeds", help="seed range such as 1..50")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> Tuple[str, int]:
    """
    Execute one invocation.

    Returns:
        Rendered output and exit code
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    args: Optional[argparse.Namespace] = None
    as_json = "--json" in argv
    try:
        args = _build_parser().parse_args(argv)
        as_json = args.json
        payload, text, code = args.handler(args)
    except ParseError as e:
        return _render_error(e, getattr(args, "code", None), as_json), EXIT_PARSE
    except TheoremViolationWitness as e:
        return _render_error(e, None, as_json), EXIT_WITNESS
    except KnotParityError as e:
        return _render_error(e, None, as_json), EXIT_PRECONDITION
    except ValidationError as e:
        logger.debug(f"Model validation failed: {e}")
        error = PreconditionError(str(e.errors()[0]["msg"]), errors=e.error_count())
        return _render_error(error, None, as_json), EXIT_PRECONDITION
    except OSError as e:
        return f"error: {e}", EXIT_PRECONDITION
    if as_json:
        return json.dumps(payload, indent=2), code
    return text, code



def _render_error(error: KnotParityError, source: Optional[str], as_json: bool) -> str:
    if as_json:
        return json.dumps({"error": error.to_dict()}, indent=2)
    lines: List[str] = [f"error [{error.code}]: {error.message}"]
    position = getattr(error, "position", None)
    if source is not None and position is not None:
        lines.append(f"  {source}")
        lines.append("  " + " " * position + "^")
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(
        level=get_settings().log_level,
        stream=sys.stderr,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    )
    output, code = run(argv)
    stream = sys.stdout if code in (EXIT_OK, EXIT_WITNESS) else sys.stderr
    print(output, file=stream)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
