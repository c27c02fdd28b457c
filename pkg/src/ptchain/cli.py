"""Command-line front end.

Exit status: 0 on success, 1 when a verification suite reports violations,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import parse_rational
from .analysis import CHAINS, build_system, edges_json, partition_function, simulate, stationary_exact, to_dot
from .involution import invol_perm, invol_tableau
from .moves import pt_transitions
from .pasep import PasepParams
from .permutations import format_permutation, parse_permutation, phi, phi_inverse
from .tableaux import PermutationTableau, enumerate_tableaux, f_lambda, parse_state, shape_from_state
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


def _rational(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _params(args) -> PasepParams:
    params = PasepParams(args.q, args.alpha, args.beta, args.n)
    if not params.in_box():
        raise UsageError(
            f"parameters must satisfy 0 <= q <= 1 and 0 < alpha, beta <= 1 (got q={params.q}, "
            f"alpha={params.alpha}, beta={params.beta})"
        )
    return params


def _read_tableau(path: str) -> PermutationTableau:
    try:
        return PermutationTableau.from_json(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"{path} is not a permutation tableau: {exc}") from None


def _cmd_enumerate(args) -> tuple[str, int]:
    tableaux = enumerate_tableaux(args.n + 1)
    if args.format == "json":
        return json.dumps([json.loads(t.to_json()) for t in tableaux], indent=2) + "\n", 0
    return "".join(f"{t.to_json()}\n" for t in tableaux), 0


def _cmd_zn(args) -> tuple[str, int]:
    return f"{partition_function(args.n)}\n", 0


def _cmd_flambda(args) -> tuple[str, int]:
    try:
        tau = parse_state(args.state)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return f"{f_lambda(shape_from_state(tau))}\n", 0


def _render_distribution(dist, fmt: str) -> str:
    if fmt == "json":
        return dist.to_json() + "\n"
    if fmt == "csv":
        return dist.to_csv()
    return "".join(f"{s} {p}\n" for s, p in zip(dist.labels, dist.probs))


def _cmd_stationary(args) -> tuple[str, int]:
    dist = stationary_exact(build_system(args.chain, args.n), _params(args))
    return _render_distribution(dist, args.format), 0


def _cmd_simulate(args) -> tuple[str, int]:
    dist = simulate(build_system(args.chain, args.n), _params(args), args.seed, args.steps)
    return _render_distribution(dist, args.format), 0


def _cmd_diagram(args) -> tuple[str, int]:
    sys_ = build_system(args.chain, args.n)
    if args.format == "json":
        return edges_json(sys_) + "\n", 0
    return to_dot(sys_), 0


def _cmd_phi(args) -> tuple[str, int]:
    return format_permutation(phi(_read_tableau(args.tableau))) + "\n", 0


def _cmd_moves(args) -> tuple[str, int]:
    moves = pt_transitions(_read_tableau(args.tableau))
    return json.dumps([m.to_dict() for m in moves], indent=2) + "\n", 0


def _cmd_invol(args) -> tuple[str, int]:
    if args.perm is not None:
        try:
            p = parse_permutation(args.perm)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return format_permutation(invol_perm(p)) + "\n", 0
    return invol_tableau(_read_tableau(args.tableau)).to_json() + "\n", 0


def _cmd_phi_inverse(args) -> tuple[str, int]:
    try:
        p = parse_permutation(args.perm)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return phi_inverse(p).to_json() + "\n", 0


def _cmd_verify(args) -> tuple[str, int]:
    report = run_suite(args.suite, args.n_max)
    return report.to_json() + "\n", 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ptchain", description=__doc__.splitlines()[0])
    parser.add_argument("--output", "-o", help="write to this file instead of stdout")
    # accepted after the subcommand too; SUPPRESS keeps a global value from being reset
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", default=argparse.SUPPRESS, help="write to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[common])

    def with_n(p, help_text="number of PASEP sites N"):
        p.add_argument("--n", type=_positive, required=True, help=help_text)
        return p

    def with_params(p):
        p.add_argument("--chain", choices=CHAINS, default="pasep")
        p.add_argument("--q", type=_rational, default=parse_rational("1"))
        p.add_argument("--alpha", type=_rational, default=parse_rational("1"))
        p.add_argument("--beta", type=_rational, default=parse_rational("1"))
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        return p

    p = with_n(command("enumerate", "list the tableaux of half-perimeter N+1"))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_enumerate)

    with_n(command("zn", "partition function Z_N")).set_defaults(func=_cmd_zn)

    p = command("flambda", "generating function of the shape of a PASEP state")
    p.add_argument("--state", required=True, help="word over 0/1 or ./*")
    p.set_defaults(func=_cmd_flambda)

    with_params(with_n(command("stationary", "exact stationary distribution"))).set_defaults(
        func=_cmd_stationary
    )

    p = with_params(with_n(command("simulate", "Monte Carlo occupation frequencies")))
    p.add_argument("--steps", type=_positive, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_simulate)

    p = with_n(command("diagram", "state diagram as DOT or JSON edges"))
    p.add_argument("--chain", choices=CHAINS, default="pt")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=_cmd_diagram)

    p = command("phi", "permutation of a tableau JSON file")
    p.add_argument("--tableau", required=True)
    p.set_defaults(func=_cmd_phi)

    p = command("phi-inverse", "tableau of a permutation")
    p.add_argument("--perm", required=True)
    p.set_defaults(func=_cmd_phi_inverse)

    p = command("moves", "PT chain moves out of a tableau JSON file")
    p.add_argument("--tableau", required=True)
    p.set_defaults(func=_cmd_moves)

    p = command("invol", "involution of a permutation or tableau")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--perm")
    group.add_argument("--tableau")
    p.set_defaults(func=_cmd_invol)

    p = command("verify", "run an exhaustive verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--n-max", type=_positive, default=4, help="largest N (objects of size N+1)")
    p.set_defaults(func=_cmd_verify)
    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run_cli())
