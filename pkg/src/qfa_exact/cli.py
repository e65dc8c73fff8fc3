"""Command-line front end.

Subcommands: synth (emit a machine), run (acceptance probability of a
word), dfa (emit the minimal classical solver), certify (exhaustive
minimality search), table (quantum-vs-classical state counts as CSV).

Exit codes: 0 success, 2 bad usage or parameters, 3 internal synthesis
failure, 4 a minimality counterexample was found (this would refute the
size formulas - investigate loudly), 5 enumeration budget exceeded.
"""

import argparse
import json
import os
import sys

from . import synth
from .dfa import (
    DEFAULT_ENUMERATION_BUDGET,
    EnumerationBudgetError,
    build_binary_min_dfa,
    build_unary_min_dfa,
    certify_minimality_binary,
    certify_minimality_unary,
    smallest_modulus,
    smallest_nondivisor,
)
from .moqfa import Moqfa
from .promise import (
    DEFAULT_I_MAX,
    DEFAULT_J_MAX,
    BinaryPromiseSpec,
    UnaryPromiseSpec,
    spec_from_dict,
)
from .verify import separation_table, write_separation_csv

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SYNTH_FAILURE = 3
EXIT_COUNTEREXAMPLE = 4
EXIT_BUDGET = 5


def _add_family_arguments(parser, include_residues=True):
    parser.add_argument("--family", required=True, choices=["A", "B", "BN"],
                        help="A: unary mod-N residues; B: fixed b-surplus; BN: surplus mod N")
    parser.add_argument("--N", type=int, help="modulus (families A and BN)")
    parser.add_argument("--l", type=int, help="offset/surplus parameter")
    if include_residues:
        parser.add_argument("--r1", type=int, help="accepted residue (family A, with --r2)")
        parser.add_argument("--r2", type=int, help="rejected residue (family A, with --r1)")


def _spec_from_args(args):
    """Validate the flag combination for the requested family."""
    r1 = getattr(args, "r1", None)
    r2 = getattr(args, "r2", None)
    if args.family == "A":
        if args.N is None:
            raise ValueError("family A needs --N")
        if (r1 is None) != (r2 is None):
            raise ValueError("--r1 and --r2 must be given together")
        if r1 is not None:
            if args.l is not None:
                raise ValueError("give either --l or --r1/--r2, not both")
            return UnaryPromiseSpec(args.N, r1, r2)
        if args.l is None:
            raise ValueError("family A needs --l or --r1/--r2")
        return UnaryPromiseSpec(args.N, 0, args.l)
    if r1 is not None or r2 is not None:
        raise ValueError("--r1/--r2 only apply to family A")
    if args.family == "B":
        if args.l is None:
            raise ValueError("family B needs --l")
        if args.N is not None:
            raise ValueError("family B takes no --N")
        return BinaryPromiseSpec(args.l)
    if args.N is None or args.l is None:
        raise ValueError("family BN needs --N and --l")
    return BinaryPromiseSpec(args.l, args.N)


def _emit(text, output):
    """Write to the output file if given (summary goes to stdout), else to
    stdout (summary to stderr)."""
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
            if not text.endswith("\n"):
                handle.write("\n")
        return sys.stdout
    print(text)
    return sys.stderr


def cmd_synth(args):
    spec = _spec_from_args(args)
    if isinstance(spec, UnaryPromiseSpec):
        machine = synth.build_unary_general(spec.N, spec.r_yes, spec.r_no)
        selection = synth.select_angle(spec.N, spec.gap)
        summary = (
            f"{machine.dim}-state machine, theta = 2*pi*{selection.q}/{selection.D}, "
            f"p = {selection.p:.6f}, case = {selection.case_tag}"
        )
    elif spec.N is None:
        machine = synth.build_binary_l(spec.l)
        summary = f"{machine.dim}-state machine, theta = 2*pi*1/{4 * spec.l}, p = 0.000000, case = quarter_turn"
    else:
        machine = synth.build_binary_Nl(spec.N, spec.l)
        selection = synth.select_angle(spec.N, spec.l)
        summary = (
            f"{machine.dim}-state machine, theta = 2*pi*{selection.q}/{selection.D}, "
            f"p = {selection.p:.6f}, case = {selection.case_tag}"
        )
    stream = _emit(machine.to_json(), args.output)
    print(summary, file=stream)
    return EXIT_OK


def cmd_run(args):
    with open(args.machine, encoding="utf-8") as handle:
        machine = Moqfa.from_json(handle.read())
    if (args.word is None) == (args.length is None):
        raise ValueError("give exactly one of WORD or --length")
    word = args.length if args.length is not None else args.word
    prob = machine.accept_probability(word)
    print(f"{prob:.15e}")
    return EXIT_OK


def cmd_dfa(args):
    spec = _spec_from_args(args)
    if isinstance(spec, UnaryPromiseSpec):
        d = smallest_modulus(spec.N, spec.gap)
        dfa = build_unary_min_dfa(spec.N, spec.gap)
        source = "smallest_modulus"
    elif spec.N is None:
        d = smallest_nondivisor(spec.l)
        dfa = build_binary_min_dfa(d)
        source = "smallest_nondivisor"
    else:
        d = smallest_modulus(spec.N, spec.l)
        dfa = build_binary_min_dfa(d)
        source = "smallest_modulus"
    stream = _emit(dfa.to_json(), args.output)
    print(f"d={d} ({source})", file=stream)
    return EXIT_OK


def cmd_certify(args):
    spec = _spec_from_args(args)
    if isinstance(spec, UnaryPromiseSpec):
        certificate = certify_minimality_unary(
            spec.N, spec.gap, i_max=args.i_max, budget=args.budget
        )
    else:
        certificate = certify_minimality_binary(
            spec, args.i_max, args.j_max, budget=args.budget
        )
    if args.format == "json":
        payload = certificate.to_dict()
        payload["budget"] = args.budget
        payload["seed"] = args.seed
        text = json.dumps(payload, indent=2, sort_keys=True)
        _emit(text, args.output)
    else:
        verdict = "Certified" if certificate.certified else "COUNTEREXAMPLE FOUND"
        print(
            f"{verdict}: claimed_d={certificate.claimed_d}, "
            f"machines_checked={certificate.machines_checked}"
        )
    if not certificate.certified:
        print(
            "counterexample DFA contradicts the minimality formula:\n"
            + certificate.counterexample.to_json(),
            file=sys.stderr,
        )
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_table(args):
    with open(args.specs, encoding="utf-8") as handle:
        raw = json.load(handle)
    if not isinstance(raw, list):
        raise ValueError("spec file must hold a JSON array of spec objects")
    specs = [spec_from_dict(item) for item in raw]
    threads = int(os.environ.get("QFA_EXACT_THREADS", "1"))
    if threads < 1:
        raise ValueError("QFA_EXACT_THREADS must be a positive integer")
    rows = separation_table(
        specs,
        i_max=args.i_max,
        j_max=args.j_max,
        certify_budget=args.budget,
        threads=threads,
    )
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as handle:
            write_separation_csv(rows, handle)
        print(f"{len(rows)} rows written to {args.output}", file=sys.stdout)
    else:
        write_separation_csv(rows, sys.stdout)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qfa-exact",
        description="Exact quantum finite automata vs minimal DFAs for modular promise problems",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    defaults = argparse.ArgumentDefaultsHelpFormatter

    p_synth = sub.add_parser("synth", help="synthesize a machine and emit its JSON",
                             formatter_class=defaults)
    _add_family_arguments(p_synth)
    p_synth.add_argument("-o", "--output", help="machine JSON path (default stdout)")
    p_synth.set_defaults(handler=cmd_synth)

    p_run = sub.add_parser("run", help="acceptance probability of a word",
                           formatter_class=defaults)
    p_run.add_argument("--machine", required=True, help="machine JSON file")
    p_run.add_argument("word", nargs="?", help="input word, e.g. aabb")
    p_run.add_argument("--length", type=int, help="unary word given as its length")
    p_run.set_defaults(handler=cmd_run)

    p_dfa = sub.add_parser("dfa", help="build the minimal classical solver",
                           formatter_class=defaults)
    _add_family_arguments(p_dfa)
    p_dfa.add_argument("-o", "--output", help="DFA JSON path (default stdout)")
    p_dfa.set_defaults(handler=cmd_dfa)

    p_certify = sub.add_parser("certify", help="exhaustively check the minimality formula",
                               formatter_class=defaults)
    _add_family_arguments(p_certify)
    p_certify.add_argument("--i-max", type=int, default=DEFAULT_I_MAX,
                           help="witness generator bound")
    p_certify.add_argument("--j-max", type=int, default=DEFAULT_J_MAX,
                           help="witness modular-repeat bound (family BN)")
    p_certify.add_argument("--budget", type=int, default=DEFAULT_ENUMERATION_BUDGET,
                           help="max candidate machines to enumerate")
    p_certify.add_argument("--format", choices=["text", "json"], default="text")
    p_certify.add_argument("--seed", type=int, help="echoed into JSON output")
    p_certify.add_argument("-o", "--output", help="certificate path (JSON format only)")
    p_certify.set_defaults(handler=cmd_certify)

    p_table = sub.add_parser("table", help="emit the separation table as CSV",
                             formatter_class=defaults)
    p_table.add_argument("--specs", required=True,
                         help="JSON file: array of spec objects, e.g. "
                              '[{"family": "A", "N": 7, "r_yes": 0, "r_no": 3}]')
    p_table.add_argument("--i-max", type=int, default=DEFAULT_I_MAX)
    p_table.add_argument("--j-max", type=int, default=DEFAULT_J_MAX)
    p_table.add_argument("--budget", type=int, default=DEFAULT_ENUMERATION_BUDGET,
                         help="certification budget; 0 disables certification")
    p_table.add_argument("-o", "--output", help="CSV path (default stdout)")
    p_table.set_defaults(handler=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except EnumerationBudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        print(f"synthesis failure: {exc}", file=sys.stderr)
        return EXIT_SYNTH_FAILURE


if __name__ == "__main__":
    sys.exit(main())
