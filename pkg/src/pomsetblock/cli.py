"""Command-line frontend: space-file driven computations, TSV output.

Exit codes: 0 the computation succeeded / the property holds, 1 the
property fails (a certificate is printed), 2 invalid input.
"""

from __future__ import annotations

import argparse
import sys

from . import chain as chain_ops
from .balls import (
    full_count_structure,
    i_ball,
    i_ball_size,
    i_sphere_size,
    nonlinearity_witness,
    profile_census,
    r_ball,
    r_ball_size,
    r_sphere_size,
    support_census,
)
from .block_space import DEFAULT_CAP
from .codes import (
    construct_perfect_full,
    construct_perfect_partial,
    dual_code,
    verify_perfect,
)
from .errors import DivisibilityFails, ParseError, PomsetBlockError
from .fileio import (
    format_code,
    load_code,
    load_space,
    parse_ideal,
    parse_vector,
)
from .weight_dist import (
    block_shell_size,
    block_shell_size_enumerated,
    chain_shell_size,
    weight_distribution,
    weight_distribution_enumerated,
    weight_shell_size,
)


def _err(msg: str) -> None:
    print(f"pomsetblock: {msg}", file=sys.stderr)


def _cmd_weight(args) -> int:
    space = load_space(args.space)
    v = parse_vector(space, args.vector)
    print(v.weight())
    return 0


def _cmd_ideals(args) -> int:
    space = load_space(args.space)
    for ideal in space.pomset.ideals_of_cardinality(args.card):
        print(ideal.counts.literal())
    return 0


def _cmd_ballsize(args) -> int:
    space = load_space(args.space)
    if (args.ideal is None) == (args.radius is None):
        _err("give exactly one of --ideal or --radius")
        return 2
    if args.center is not None and not args.enumerate:
        _err("--center only makes sense with --enumerate; "
             "the closed forms are center independent")
        return 2
    if args.enumerate:
        if args.center is not None:
            # enumeration at an explicit center, as a cross-check path
            center = parse_vector(space, args.center)
            if args.ideal is not None:
                size = len(i_ball(center, parse_ideal(space, args.ideal), args.cap))
            else:
                size = len(r_ball(center, args.radius, args.cap))
        else:
            census = support_census(space, args.cap)
            if args.ideal is not None:
                want = parse_ideal(space, args.ideal).counts.counts
                size = sum(c for key, c in census.items()
                           if all(a <= b for a, b in zip(key, want)))
            else:
                size = sum(c for key, c in census.items()
                           if sum(key) <= args.radius)
    else:
        if args.ideal is not None:
            size = i_ball_size(space, parse_ideal(space, args.ideal))
        else:
            size = r_ball_size(space, args.radius)
    print(size)
    return 0


def _cmd_wdist(args) -> int:
    space = load_space(args.space)
    if args.oracle:
        shells = weight_distribution_enumerated(space, args.cap).shells
    else:
        shells = weight_distribution(space).shells
    for r, a in enumerate(shells):
        print(f"{r}\t{a}")
    print(f"# total {space.size()}")
    return 0


def _cmd_perfect(args) -> int:
    space = load_space(args.space)
    if args.action == "construct":
        ideal = parse_ideal(space, args.ideal)
        try:
            if ideal.is_full_count():
                code = construct_perfect_full(space, ideal, args.cap)
            else:
                code = construct_perfect_partial(space, ideal, args.cap)
        except DivisibilityFails as exc:
            print(f"divisibility-fails\tindex={exc.index}\tcount={exc.count}")
            return 1
        sys.stdout.write(format_code(code))
        return 0
    # verify
    code = load_code(space, args.code)
    if (args.ideal is None) == (args.radius is None):
        _err("give exactly one of --ideal or --radius")
        return 2
    if args.ideal is not None:
        cert = verify_perfect(code, ideal=parse_ideal(space, args.ideal),
                              cap=args.cap)
    else:
        cert = verify_perfect(code, radius=args.radius, cap=args.cap)
    print(f"disjoint\t{str(cert.disjoint).lower()}")
    print(f"covering\t{str(cert.covering).lower()}")
    if cert.overlap is not None:
        v, c1, c2 = cert.overlap
        print(f"overlap\t{v.literal()}\t{c1.literal()}\t{c2.literal()}")
    if cert.uncovered is not None:
        print(f"uncovered\t{cert.uncovered.literal()}")
    return 0 if cert.is_perfect else 1


def _cmd_mds(args) -> int:
    space = load_space(args.space)
    code = load_code(space, args.code)
    report = chain_ops.singleton_report(code)
    print(f"min-distance\t{report.d if report.d is not None else '-'}")
    print(f"prefix-blocks\t{report.r}")
    print(f"prefix-length\t{report.prefix_len}")
    print(f"bound\t{report.rhs}")
    print(f"mds\t{str(report.is_mds).lower()}")
    return 0 if report.is_mds else 1


def _cmd_dual(args) -> int:
    space = load_space(args.space)
    code = load_code(space, args.code)
    sys.stdout.write(format_code(dual_code(code, args.cap)))
    return 0


def _cmd_packrad(args) -> int:
    space = load_space(args.space)
    code = load_code(space, args.code)
    brute = chain_ops.packing_radius(code, args.cap)
    print(f"bruteforce\t{brute}")
    if space.pomset.is_chain():
        formula = chain_ops.packing_radius_chain(code)
        print(f"formula\t{formula}")
        if formula != brute:
            return 1
    return 0


def _cmd_duality4(args) -> int:
    space = load_space(args.space)
    code = load_code(space, args.code)
    report = chain_ops.duality_equivalence(code, args.cap)
    print(f"mds\t{str(report.mds_primal).lower()}")
    print(f"perfect\t{str(report.perfect_primal).lower()}")
    print(f"dual-perfect\t{str(report.perfect_dual).lower()}")
    print(f"dual-mds\t{str(report.mds_dual).lower()}")
    print(f"equivalent\t{str(report.all_equal).lower()}")
    return 0 if report.all_equal else 1


def _cmd_selftest(args) -> int:
    space = load_space(args.space)
    cap = args.cap
    rows: list[tuple[str, str, object, object, bool]] = []

    pc = profile_census(space, cap)
    census: dict[tuple[int, ...], int] = {}
    for profile, mult in pc.items():
        key = space.pomset.generated_counts(profile)
        census[key] = census.get(key, 0) + mult
    ideals = space.pomset.ideals()
    top = space.n * space.max_lee

    # per-ideal sphere sizes, closed form vs census
    ok = True
    f_sum = o_sum = 0
    for ideal in ideals:
        f = i_sphere_size(space, ideal)
        o = census.get(ideal.counts.counts, 0)
        f_sum += f
        o_sum += o
        ok = ok and f == o
    rows.append(("sphere-size-ideal", f"{len(ideals)} ideals", f_sum, o_sum, ok))

    # per-radius sphere and ball sizes
    by_card: dict[int, int] = {}
    for key, mult in census.items():
        by_card[sum(key)] = by_card.get(sum(key), 0) + mult
    running = 0
    for r in range(top + 1):
        f = r_sphere_size(space, r)
        o = by_card.get(r, 0)
        rows.append(("sphere-size", f"r={r}", f, o, f == o))
        running += o
        fb = r_ball_size(space, r)
        rows.append(("ball-size", f"r={r}", fb, running, fb == running))

    # block shells per distinct block length
    for k in sorted(set(space.pi)):
        shells_f = [block_shell_size(space.m, k, r)
                    for r in range(space.max_lee + 1)]
        shells_o = [block_shell_size_enumerated(space.m, k, r)
                    for r in range(space.max_lee + 1)]
        rows.append((
            "block-shells", f"k={k}",
            sum(shells_f), sum(shells_o),
            shells_f == shells_o and sum(shells_f) == space.m**k,
        ))

    # weight shells, closed form vs census
    for r in range(top + 1):
        f = weight_shell_size(space, r)
        o = by_card.get(r, 0)
        rows.append(("weight-shells", f"r={r}", f, o, f == o))

    # full-count ball structure
    for ideal in ideals:
        if not ideal.is_full_count():
            continue
        report = full_count_structure(space, ideal, cap)
        rows.append((
            "full-count-ball", ideal.counts.literal(),
            report.expected_ball_size, report.ball_size, report.ok,
        ))

    # partial-count ball sizes and non-closure witnesses
    ok = True
    f_sum = o_sum = 0
    witnesses = 0
    partial_ideals = [i for i in ideals if not i.is_full_count()]
    for ideal in partial_ideals:
        f = i_ball_size(space, ideal)
        want = ideal.counts.counts
        o = sum(mult for profile, mult in pc.items()
                if all(a <= b for a, b in zip(profile, want)))
        f_sum += f
        o_sum += o
        ok = ok and f == o
        nonlinearity_witness(space, ideal)
        witnesses += 1
    if partial_ideals:
        rows.append(("partial-ball-size", f"{len(partial_ideals)} ideals",
                     f_sum, o_sum, ok))
        rows.append(("partial-ball-nonlinear", f"{witnesses} witnesses",
                     witnesses, len(partial_ideals),
                     witnesses == len(partial_ideals)))

    # chain closed forms
    if space.pomset.is_chain():
        for r in range(top + 1):
            f = chain_shell_size(space, r)
            o = by_card.get(r, 0)
            rows.append(("chain-shells", f"r={r}", f, o, f == o))

    all_ok = True
    for check, instance, formula, oracle, good in rows:
        verdict = "ok" if good else "FAIL"
        print(f"{check}\t{instance}\t{formula}\t{oracle}\t{verdict}")
        all_ok = all_ok and good
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pomsetblock",
        description="Block codes under the pomset metric on Z_m^N.",
        epilog=(
            "Space file: 'm M', 'blocks k1 ... kn', optional 'order i<j ...' "
            "(1-based; no order line means an antichain). Vector literal: N "
            "residues. Ideal literal: count/index tokens such as '3/1 1/3' "
            "('-' for empty). Code file: 'explicit' plus one vector per "
            "line, or 'linear' plus generator rows."
        ),
    )
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="enumeration guard, in vectors (default 10^7)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weight", help="block-metric weight of a vector")
    p.add_argument("space")
    p.add_argument("vector", help="vector literal, quoted")
    p.set_defaults(handler=_cmd_weight)

    p = sub.add_parser("ideals", help="list ideals of a given cardinality")
    p.add_argument("space")
    p.add_argument("--card", type=int, required=True)
    p.set_defaults(handler=_cmd_ideals)

    p = sub.add_parser("ballsize", help="cardinality of a ball")
    p.add_argument("space")
    p.add_argument("--ideal", help="ideal literal")
    p.add_argument("--radius", type=int)
    p.add_argument("--enumerate", action="store_true",
                   help="count by scanning rather than the closed form")
    p.add_argument("--center", help="vector literal (with --enumerate)")
    p.set_defaults(handler=_cmd_ballsize)

    p = sub.add_parser("wdist", help="weight distribution as TSV")
    p.add_argument("space")
    p.add_argument("--oracle", action="store_true",
                   help="full-space scan instead of the closed form")
    p.set_defaults(handler=_cmd_wdist)

    p = sub.add_parser("perfect", help="construct or verify perfect codes")
    p.add_argument("action", choices=("construct", "verify"))
    p.add_argument("space")
    p.add_argument("code", nargs="?", help="code file (verify only)")
    p.add_argument("--ideal", help="ideal literal")
    p.add_argument("--radius", type=int)
    p.set_defaults(handler=_cmd_perfect)

    p = sub.add_parser("mds", help="chain Singleton bound report")
    p.add_argument("action", choices=("check",))
    p.add_argument("space")
    p.add_argument("code")
    p.set_defaults(handler=_cmd_mds)

    p = sub.add_parser("dual", help="dual code by exhaustive scan")
    p.add_argument("space")
    p.add_argument("code")
    p.set_defaults(handler=_cmd_dual)

    p = sub.add_parser("packrad", help="packing radius (brute force; plus "
                                       "the closed form on chains)")
    p.add_argument("space")
    p.add_argument("code")
    p.set_defaults(handler=_cmd_packrad)

    p = sub.add_parser("duality4", help="four-way MDS/perfect duality report")
    p.add_argument("space")
    p.add_argument("code")
    p.set_defaults(handler=_cmd_duality4)

    p = sub.add_parser("selftest", help="closed forms vs enumeration on one space")
    p.add_argument("space")
    p.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "perfect":
        if args.action == "verify" and args.code is None:
            _err("perfect verify needs a code file")
            return 2
        if args.action == "construct" and args.ideal is None:
            _err("perfect construct needs --ideal")
            return 2
    try:
        return args.handler(args)
    except ParseError as exc:
        _err(str(exc))
        return 2
    except OSError as exc:
        _err(str(exc))
        return 2
    except PomsetBlockError as exc:
        _err(str(exc))
        return 2
    except ValueError as exc:
        _err(str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
