"""Command-line frontend.

Exit codes: 0 ok, 1 usage, 2 I/O failure, 3 capability limit, 4 invariant
violation. Subcommands: scan, table, delta3, frequencies, cubes, charsum,
constants.
"""

from __future__ import annotations

import argparse
import sys

from . import constants as consts
from . import reference
from .characters import build_characters
from .charsums import (hoelder_bound_report, legendre_character,
                       poly_char_sum, primroot_indicator, pv_burgess_bound_report,
                       split_char_sum)
from .cubes import (EXHAUSTIVE_P_CAP, NONRESIDUE, PRIMROOT, cube_census,
                    max_avoiding_dimension)
from .errors import CapabilityError, InvariantViolation
from .hamming import VARIANTS, covering_radius_bfs
from .numtheory import PrimeContext, is_primitive_root, sieve_primes
from .scan import CountTable, ScanConfig, format_scan_output, read_scan_output, \
    scan_frequencies, scan_range


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_scan_flags(sub, compute_default="w,W,delta"):
    sub.add_argument("--range", nargs=2, type=int, metavar=("LO", "HI"), required=True)
    sub.add_argument("--tasks", type=int, default=1)
    sub.add_argument("--variant", choices=sorted(VARIANTS), default="canonical")
    sub.add_argument("--compute", default=compute_default,
                     help="comma-joined subset of w,W,delta")
    sub.add_argument("--checkpoint", metavar="PATH")
    sub.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hamroots")
    subs = parser.add_subparsers(dest="command", required=True)

    scan = subs.add_parser("scan", help="per-prime statistics over a range", parents=[])
    _add_scan_flags(scan)
    scan.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    scan.add_argument("--output", metavar="PATH")
    scan.set_defaults(func=cmd_scan)

    table = subs.add_parser("table", help="census table with reference diffs")
    table.add_argument("--limit", type=int, required=True)
    table.add_argument("--tasks", type=int, default=1)
    table.add_argument("--variant", choices=sorted(VARIANTS), default="canonical")
    table.add_argument("--compute", default="w,W,delta")
    table.add_argument("--checkpoint", metavar="PATH")
    table.add_argument("--scan-file", metavar="PATH",
                       help="reuse a previous scan instead of recomputing")
    table.add_argument("--paper-diff", action="store_true",
                       help="itemize per-prime differences between radius variants")
    table.set_defaults(func=cmd_table)

    d3 = subs.add_parser("delta3", help="primes of covering radius 3")
    d3.add_argument("--limit", type=int, default=reference.RADIUS3_SEARCH_LIMIT)
    d3.add_argument("--tasks", type=int, default=1)
    d3.add_argument("--variant", choices=sorted(VARIANTS), default="canonical")
    d3.add_argument("--checkpoint", metavar="PATH")
    d3.add_argument("--paper-diff", action="store_true",
                    help="compare witness classes against the reference list")
    d3.set_defaults(func=cmd_delta3)

    freq = subs.add_parser("frequencies", help="observed w=1 / W=1 densities")
    freq.add_argument("--limit", type=int, required=True)
    freq.add_argument("--tasks", type=int, default=1)
    freq.add_argument("--checkpoint", metavar="PATH")
    freq.add_argument("--paper-diff", action="store_true")
    freq.set_defaults(func=cmd_frequencies)

    cubes = subs.add_parser("cubes", help="cube avoidance/containment census")
    cubes.add_argument("--range", nargs=2, type=int, metavar=("LO", "HI"), required=True)
    cubes.add_argument("--mode", choices=("exhaustive", "heuristic"), default="exhaustive")
    cubes.add_argument("--max-exhaustive-p", type=int, default=EXHAUSTIVE_P_CAP)
    cubes.add_argument("--seed", type=int, default=None)
    cubes.set_defaults(func=cmd_cubes)

    charsum = subs.add_parser("charsum", help="character-sum checks and reports")
    kinds = charsum.add_subparsers(dest="kind", required=True)
    ind = kinds.add_parser("indicator", help="indicator identity over all residues")
    ind.add_argument("--p", type=int, required=True)
    ind.set_defaults(func=cmd_charsum_indicator)
    pv = kinds.add_parser("pv", help="interval-sum report over all non-principal characters")
    pv.add_argument("--p", type=int, required=True)
    pv.add_argument("--nu", type=int, default=1)
    pv.set_defaults(func=cmd_charsum_pv)
    weil = kinds.add_parser("weil", help="polynomial character-sum report")
    weil.add_argument("--p", type=int, required=True)
    weil.add_argument("--coeffs", required=True, help="comma-joined, lowest degree first")
    weil.add_argument("--start", type=int, default=0)
    weil.add_argument("--length", type=int, default=None)
    weil.set_defaults(func=cmd_charsum_weil)
    hoe = kinds.add_parser("hoelder", help="split-sum report")
    for flag in ("--p", "--n", "--k", "--l", "--m"):
        hoe.add_argument(flag, type=int, required=True)
    hoe.add_argument("--nu", type=int, default=1)
    hoe.set_defaults(func=cmd_charsum_hoelder)
    dbl = kinds.add_parser("double", help="exact split character sum")
    for flag in ("--p", "--n", "--k", "--l", "--m"):
        dbl.add_argument(flag, type=int, required=True)
    dbl.add_argument("--j", type=int, default=None, help="character exponent (default: quadratic)")
    dbl.set_defaults(func=cmd_charsum_double)

    cst = subs.add_parser("constants", help="named constants with reference digits")
    cst.add_argument("--prime-limit", type=int, default=1_000_000)
    cst.set_defaults(func=cmd_constants)

    return parser


def _compute_tuple(flag_value: str) -> tuple[str, ...]:
    return tuple(part for part in flag_value.split(",") if part)


def cmd_scan(args) -> int:
    config = ScanConfig(lo=args.range[0], hi=args.range[1], tasks=args.tasks,
                        variant=args.variant, compute=_compute_tuple(args.compute),
                        fmt=args.format, checkpoint=args.checkpoint, seed=args.seed)
    text = format_scan_output(config, scan_range(config))
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _census_profiles(args, limit: int):
    if getattr(args, "scan_file", None):
        _, profiles = read_scan_output(args.scan_file)
        if not profiles or max(p.p for p in profiles) < limit:
            raise ValueError("scan file does not cover the requested limit")
        return [p for p in profiles if p.p <= limit]
    config = ScanConfig(lo=2, hi=limit, tasks=args.tasks,
                        variant=getattr(args, "variant", "canonical"),
                        compute=_compute_tuple(getattr(args, "compute", "w,W,delta")),
                        checkpoint=getattr(args, "checkpoint", None))
    return scan_range(config)


def cmd_table(args) -> int:
    profiles = _census_profiles(args, args.limit)
    exponents = [j for j in sorted(reference.COUNT_TABLE) if 10**j <= args.limit]
    if not exponents:
        raise ValueError("limit below the smallest tabulated threshold 10^3")
    table = CountTable.from_profiles(profiles, [10**j for j in exponents])
    computed = {s for s in ("w", "W", "delta")
                if any(getattr(pr, s) is not None for pr in profiles)}
    header = f"{'j':>2} {'pi':>6}"
    for i in (1, 2, 3):
        for stat in ("w", "W", "delta"):
            header += f" {stat + '=' + str(i):>7}"
    print(header)
    violation = False
    for j in exponents:
        row = table.rows[10**j]
        ref = reference.COUNT_TABLE[j]
        line = f"{j:>2} {row['pi']:>6}"
        diff = f"{'diff':>2} {ref['pi'] - row['pi']:>+6}"
        for i in (1, 2, 3):
            for stat in ("w", "W", "delta"):
                have = row[stat][i - 1] if stat in computed else None
                line += f" {have if have is not None else '-':>7}"
                d = "" if have is None else format(ref[stat][i - 1] - have, "+d")
                diff += f" {d:>7}"
        print(line)
        print(diff + "   (reference minus computed)")
        for stat in ("w", "delta"):
            if stat in computed and not table.sum_identity_ok(10**j, stat):
                print(f"!! {stat} counts at 10^{j} do not sum to pi-1")
                violation = True
        if "W" in computed and not table.sum_identity_ok(10**j, "W"):
            print(f"!! W counts at 10^{j} do not sum to pi")
            violation = True
    if args.paper_diff and "delta" in computed:
        _itemize_variant_differences(profiles)
    return 4 if violation else 0


def _itemize_variant_differences(profiles) -> None:
    """List primes whose canonical radius differs from the domain0 one (the
    convention the reference delta columns follow)."""
    from .hamming import DOMAIN0, covering_radius_dilation
    from .numtheory import factorize
    print("# canonical vs domain0 radius differences:")
    for prof in profiles:
        if prof.delta is None or prof.p == 2:
            continue
        ctx = PrimeContext(prof.p, factorize(prof.p - 1))
        alt, alt_wits = covering_radius_dilation(ctx, DOMAIN0)
        if alt != prof.delta:
            print(f"  p={prof.p}: canonical={prof.delta} (classes "
                  f"{';'.join(map(str, prof.witnesses))}) domain0={alt} "
                  f"(classes {';'.join(map(str, alt_wits))})")


def cmd_delta3(args) -> int:
    if args.limit > reference.RADIUS3_SEARCH_LIMIT:
        raise CapabilityError(
            f"radius-3 census capped at {reference.RADIUS3_SEARCH_LIMIT}")
    config = ScanConfig(lo=3, hi=args.limit, tasks=args.tasks, variant=args.variant,
                        compute=("delta",), checkpoint=args.checkpoint)
    profiles = scan_range(config)
    found = {pr.p: pr for pr in profiles if pr.delta is not None and pr.delta >= 3}
    deep = [pr.p for pr in profiles if pr.delta is not None and pr.delta >= 4]
    print(f"# primes <= {args.limit} with covering radius 3 ({args.variant} variant)")
    for p, pr in sorted(found.items()):
        if pr.delta != 3:
            continue
        line = f"{p}: classes {';'.join(map(str, pr.witnesses))}"
        if args.paper_diff:
            ref = reference.RADIUS3_CLASSES.get(p)
            if ref is None:
                line += "  [not in reference list]"
            else:
                ours = set(pr.witnesses)
                marks = [f"{c}{'+' if c in ours else '-'}" for c in ref]
                extra = sorted(ours - set(ref))
                line += f"  reference: {';'.join(marks)}"
                if extra:
                    line += f" extra: {';'.join(map(str, extra))}"
        print(line)
    if args.paper_diff:
        missing = [p for p in reference.RADIUS3_CLASSES
                   if p <= args.limit and (p not in found or found[p].delta != 3)]
        if missing:
            print(f"# reference primes not at radius 3 under {args.variant}: "
                  f"{', '.join(map(str, missing))}")
    if deep:
        print(f"!! HEADLINE DISCREPANCY: radius >= 4 at {', '.join(map(str, deep))}")
    return 0


def cmd_frequencies(args) -> int:
    config = ScanConfig(lo=2, hi=args.limit, tasks=args.tasks,
                        compute=("w", "W"), checkpoint=args.checkpoint)
    freq = scan_frequencies(scan_range(config), args.limit)
    artin = consts.artin_constant(min(args.limit, 1_000_000))
    print(f"pi({args.limit}) = {freq['pi']}")
    print(f"w=1: {freq['w1']}/{freq['pi']} = {freq['w1_fraction']:.6f}   (limit 1/2)")
    print(f"W=1: {freq['W1']}/{freq['pi']} = {freq['W1_fraction']:.6f}   "
          f"(Artin constant {artin:.7f})")
    if args.paper_diff and args.limit == 10**6:
        ref = reference.FREQ_10_6
        print(f"reference: w=1 {ref['w1']}/{ref['pi']} ~ {reference.FREQ_W1_DIGITS}, "
              f"W=1 {ref['W1']}/{ref['pi']} ~ {reference.FREQ_BIGW1_DIGITS}")
    return 0


def cmd_cubes(args) -> int:
    lo, hi = args.range
    rc = 0
    print("p,f,F,f_bar,F_bar,f_witness,F_witness,f_bar_witness,F_bar_witness,chain,hs_bound")
    for p in sieve_primes(max(hi, 3)):
        if p < max(lo, 3) or p > hi:
            continue
        ctx = PrimeContext.for_prime(p)
        try:
            if args.mode == "exhaustive":
                census = cube_census(ctx, max_exhaustive_p=args.max_exhaustive_p)
            else:
                kwargs = {"search": "heuristic"}
                if args.seed is not None:
                    kwargs["seed"] = args.seed
                census = None
                f = max_avoiding_dimension(ctx, NONRESIDUE, **kwargs)
                big_f = max_avoiding_dimension(ctx, PRIMROOT, **kwargs)
                print(f"{p},{f.dim},{big_f.dim},,,{f.witness},{big_f.witness},,,lower-bound,")
                continue
        except CapabilityError as exc:
            print(f"{p},,,,,,,,,capability:{exc},")
            rc = 3
            continue
        violations = census.chain_violations()
        chain = "ok" if not violations else "|".join(violations)
        hs_ok = census.avoid_nonresidue.dim < 12 * p**0.25
        print(",".join([
            str(p),
            str(census.avoid_nonresidue.dim), str(census.avoid_primroot.dim),
            str(census.inside_nonresidue.dim), str(census.inside_primroot.dim),
            str(census.avoid_nonresidue.witness), str(census.avoid_primroot.witness),
            str(census.inside_nonresidue.witness), str(census.inside_primroot.witness),
            chain, "ok" if hs_ok else "violated",
        ]))
        if violations and rc == 0:
            rc = 4
    return rc


def cmd_charsum_indicator(args) -> int:
    ctx = PrimeContext.for_prime(args.p)
    good = 0
    for a in range(1, args.p):
        if int(primroot_indicator(ctx, a)) == int(is_primitive_root(a, ctx)):
            good += 1
    print(f"indicator identity mod {args.p}: exact match {good}/{args.p - 1} residues")
    return 0 if good == args.p - 1 else 4


def cmd_charsum_pv(args) -> int:
    ctx = PrimeContext.for_prime(args.p)
    worst = None
    m = args.p - 1
    for d in sorted(set(d for d in range(2, m + 1) if m % d == 0)):
        for chi in build_characters(ctx, d):
            for start in (0, args.p // 3):
                for length in (args.p // 2, args.p - 1):
                    rep = pv_burgess_bound_report(chi, start, length, args.nu)
                    if worst is None or rep.ratio > worst[0]:
                        worst = (rep.ratio, chi.j, start, length)
    ratio, j, start, length = worst
    print(f"max interval-sum ratio mod {args.p} (nu={args.nu}): {ratio:.6f} "
          f"at chi_{j}, window ({start}, {start + length}]")
    return 0


def cmd_charsum_weil(args) -> int:
    ctx = PrimeContext.for_prime(args.p)
    coeffs = [int(c) for c in args.coeffs.split(",")]
    chi = legendre_character(ctx)
    total, report = poly_char_sum(ctx, chi, coeffs, args.start,
                                  args.length if args.length is not None else args.p - 1)
    print(f"|sum| = {report.magnitude:.6f}, bound = {report.bound:.6f}, "
          f"ratio = {report.ratio:.6f}, applicable = {report.applicable}"
          + (f" ({report.note})" if report.note else ""))
    return 0


def cmd_charsum_hoelder(args) -> int:
    ctx = PrimeContext.for_prime(args.p)
    chi = legendre_character(ctx)
    rep = hoelder_bound_report(ctx, args.n, args.k, args.l, args.m, chi, args.nu)
    print(f"|S| = {rep.magnitude:.6f}, bound = {rep.bound:.6f}, ratio = {rep.ratio:.6f}"
          + ("" if rep.applicable else f"  [{rep.note}]"))
    return 0


def cmd_charsum_double(args) -> int:
    ctx = PrimeContext.for_prime(args.p)
    if args.j is None:
        chi = legendre_character(ctx)
    else:
        m = args.p - 1
        import math as _math
        order = m // _math.gcd(args.j, m) if args.j else 1
        from .characters import Character
        chi = Character(ctx, args.j % m, order)
    total = split_char_sum(ctx, args.n, args.k, args.l, args.m, chi)
    rational = total.as_rational()
    shown = rational if rational is not None else total.value()
    print(f"S = {shown} ({total.n_terms} terms, |S| = {total.magnitude():.6f})")
    return 0


def cmd_constants(args) -> int:
    rho = consts.entropy_half_point()
    theta = consts.sparse_weight_constant()
    artin = consts.artin_constant(args.prime_limit)
    print(f"entropy half-point rho0 = {rho:.10f}   "
          f"(reference digits {reference.ENTROPY_HALF_POINT_DIGITS})")
    print(f"1/(8 sqrt e)    theta0 = {theta:.10f}   "
          f"(reference digits {reference.SPARSE_WEIGHT_DIGITS})")
    print(f"Artin constant A({args.prime_limit}) = {artin:.10f}   "
          f"(reference digits {reference.ARTIN_DIGITS})")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapabilityError as exc:
        print(f"capability limit: {exc}", file=sys.stderr)
        return 3
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
