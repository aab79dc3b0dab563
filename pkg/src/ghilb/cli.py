"""Command line front end.

Exit codes: 0 on success, 1 when an --assert-style flag asked for a verdict
the computation refuted (or a reproduction item failed), 2 on input errors.
"""

import argparse
import json
import sys

from . import cases
from .constellation import UnexpectedCycle, distinguished_constellation, support_quiver
from .fan import BudgetExceeded, enumerate_fan
from .groebner import TiedWeightError, initial_ideal, lattice_ideal, reduced_gb_equal
from .group import GroupParseError, ThetaParam, character_group, parse_group
from .hilb import (
    NotACluster,
    OffComponent,
    OnCoherent,
    chart_semigroup,
    check_normality,
    coherent_membership,
    enumerate_monomial_clusters,
    is_g_cluster,
    universal_family,
)
from .groebner import MonomialIdeal
from .cones import hilbert_basis, semigroup_contains
from .serialize import (
    binomial_json,
    constellation_json,
    family_json,
    fan_json,
    format_constellation,
    format_family,
    format_fan,
    format_ideal,
    format_membership,
    format_monomial,
    format_normality,
    format_vector,
    membership_json,
    monomial_json,
    normality_json,
    parse_monomial_ideal,
    parse_rational_vector,
)


class InputError(Exception):
    pass


def _read(path):
    try:
        with open(path) as handle:
            return handle.read()
    except OSError as err:
        raise InputError(str(err)) from None


def _load_chars(path):
    try:
        return character_group(parse_group(_read(path)))
    except GroupParseError as err:
        raise InputError("%s: %s" % (path, err)) from None


def _weight(text, n):
    try:
        w = parse_rational_vector(text)
    except ValueError as err:
        raise InputError("bad weight %r: %s" % (text, err)) from None
    if len(w) != n:
        raise InputError("weight needs %d entries, got %d" % (n, len(w)))
    if any(x < 0 for x in w):
        raise InputError("weight entries must be nonnegative")
    return w


def _theta(text, r):
    try:
        return ThetaParam.parse(text, r)
    except ValueError as err:
        raise InputError("bad theta: %s" % err) from None


def _emit(args, obj, text):
    if args.json:
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def _cmd_info(args):
    chars = _load_chars(args.group)
    print("variables: %s" % " ".join(chars.names))
    print("n = %d, r = %d" % (chars.n, chars.r))
    print("invariant factors: %s" % (chars.invariants,))
    for i in range(chars.n):
        print(
            "deg %s = %s  (order %d)"
            % (chars.names[i], chars.label(chars.rho[i]), chars.orders[i])
        )
    print("degree kernel basis:")
    for row in chars.lattice:
        print("  %s" % format_vector(row))
    return 0


def _cmd_lattice_ideal(args):
    chars = _load_chars(args.group)
    gb = lattice_ideal(chars.lattice)
    _emit(
        args,
        [binomial_json(g, chars.names) for g in gb],
        format_ideal(gb, chars.names),
    )
    return 0


def _cmd_initial(args):
    chars = _load_chars(args.group)
    w = _weight(args.weight, chars.n)
    try:
        j, _ = initial_ideal(lattice_ideal(chars.lattice), w)
    except TiedWeightError as err:
        raise InputError("weight lies on a wall: %s" % err) from None
    _emit(
        args,
        [monomial_json(m, chars.names) for m in j.gens],
        format_ideal(j.gens, chars.names),
    )
    return 0


def _cmd_constellation(args):
    chars = _load_chars(args.group)
    theta = _theta(args.theta, chars.r)
    w = _weight(args.weight, chars.n)
    con = distinguished_constellation(chars, theta, w)
    if args.json:
        print(json.dumps(constellation_json(con), indent=2))
        return 0
    print("objective value: %s" % con.value)
    print("v = %s" % format_vector(con.v))
    print("M =")
    print(format_constellation(con))
    quiver = support_quiver(con.rep)
    print(
        "support quiver: %d arrows, %d of %d vertices connected to %s"
        % (
            len(quiver.arrows),
            len(quiver.connected_from_trivial()),
            chars.r,
            chars.label(chars.trivial),
        )
    )
    return 0


def _cluster_from_file(path, chars):
    gens = parse_monomial_ideal(_read(path), chars.names)
    try:
        return is_g_cluster(MonomialIdeal.of(gens), chars)
    except NotACluster as err:
        raise InputError("ideal in %s is not a cluster: %s" % (path, err)) from None


def _cmd_membership(args):
    chars = _load_chars(args.group)
    cluster = _cluster_from_file(args.ideal, chars)
    verdict = coherent_membership(cluster, lattice_ideal(chars.lattice))
    _emit(args, membership_json(verdict), format_membership(verdict))
    return 0


def _cmd_clusters(args):
    chars = _load_chars(args.group)
    found = enumerate_monomial_clusters(chars, budget=args.budget)
    if args.json:
        print(
            json.dumps(
                [
                    [monomial_json(m, chars.names) for m in c.ideal.gens]
                    for c in found
                ],
                indent=2,
            )
        )
        return 0
    print("%d monomial clusters" % len(found))
    for c in found:
        mono = ", ".join(format_monomial(m, chars.names) for m in c.ideal.gens)
        print("< %s >" % mono)
    return 0


def _cmd_fan(args):
    chars = _load_chars(args.group)
    fan = enumerate_fan(
        lattice_ideal(chars.lattice), chars=chars, max_cones=args.max_cones
    )
    _emit(args, fan_json(fan, chars.names), format_fan(fan, chars.names))
    return 0


def _spot_report(args, lattice):
    chars = _load_chars(args.group)
    weights = [_weight(t, chars.n) for t in args.weight]
    try:
        return check_normality(chars, weights=weights or None, lattice=lattice,
                               max_cones=args.max_cones)
    except TiedWeightError as err:
        raise InputError("weight lies on a wall: %s" % err) from None


def _cmd_chart(args):
    if not args.weight:
        raise InputError("chart needs at least one --weight")
    report = _spot_report(args, args.lattice)
    _emit(args, normality_json(report, group=args.group), format_normality(report))
    return 0 if report.overall_normal or not args.assert_normal else 1


def _cmd_family(args):
    chars = _load_chars(args.group)
    w = _weight(args.weight, chars.n)
    try:
        j, _ = initial_ideal(lattice_ideal(chars.lattice), w)
    except TiedWeightError as err:
        raise InputError("weight lies on a wall: %s" % err) from None
    fam = universal_family(chart_semigroup(is_g_cluster(j, chars), w))
    _emit(args, family_json(fam), format_family(fam))
    return 0


def _cmd_normality(args):
    report = _spot_report(args, args.lattice)
    _emit(args, normality_json(report, group=args.group), format_normality(report))
    return 0 if report.overall_normal or not args.assert_normal else 1


def _check(label, ok, detail=""):
    print("%s: %s%s" % (label, "PASS" if ok else "FAIL", detail if not ok else ""))
    return ok


def _reproduce_hard():
    chars = cases.load_group(cases.Z11)
    theta = ThetaParam.parse(cases.Z11_THETA, chars.r)
    con = distinguished_constellation(chars, theta, cases.Z11_WEIGHT)
    ok = _check(
        "objective value %s" % cases.Z11_OPTIMUM,
        con.value == cases.Z11_OPTIMUM,
        "  got %s" % con.value,
    )
    ok &= _check(
        "module blocks match",
        con.kept() == cases.Z11_KEPT,
        "  got %s" % sorted(con.kept()),
    )
    try:
        quiver = support_quiver(con.rep, expect_acyclic=True)
        spanning = quiver.connected_from_trivial() == frozenset(range(chars.r))
    except UnexpectedCycle:
        spanning = False
    ok &= _check("support quiver acyclic and spanning", spanning)
    return ok


def _reproduce_reducible():
    chars = cases.load_group(cases.Z14)
    cluster = is_g_cluster(MonomialIdeal.of(cases.z14_cluster()), chars)
    ok = _check("cluster has 14 standard monomials", len(cluster.std) == 14)
    verdict = coherent_membership(cluster, lattice_ideal(chars.lattice))
    ok &= _check("off the coherent component", isinstance(verdict, OffComponent))
    if isinstance(verdict, OffComponent):
        support = {d for d, m in zip(verdict.pairs, verdict.multipliers) if m}
        want = {
            tuple(g - s for g, s in zip(*pair)) for pair in cases.Z14_CERTIFICATE
        }
        ok &= _check(
            "certificate uses the three pair vectors",
            support == want,
            "  got %s" % sorted(support),
        )
        ok &= _check(
            "combination is zero", verdict.combination() == (0, 0, 0)
        )
    return ok


def _reproduce_nonnormal():
    chars = cases.load_group(cases.G5555)
    gb = lattice_ideal(chars.lattice)
    ok = _check(
        "lattice ideal matches (mutual reduction)",
        reduced_gb_equal(cases.g5555_lattice_ideal(), gb, chars.n),
    )
    j, _ = initial_ideal(gb, cases.G5555_WEIGHT)
    ok &= _check(
        "initial ideal has the 46 bundled generators",
        set(j.gens) == set(cases.g5555_cluster()),
        "  got %d generators" % len(j.gens),
    )
    chart = chart_semigroup(is_g_cluster(j, chars), cases.G5555_WEIGHT)
    hb = hilbert_basis(chart.gens, lattice=chars.lattice)
    ok &= _check(
        "hilbert basis is the bundled 10 vectors",
        set(hb.vectors) == set(cases.G5555_HILBERT_BASIS),
        "  got %s" % (hb.vectors,),
    )
    missing = tuple(
        z
        for z in hb.vectors
        if not semigroup_contains(chart.gens, z, grading=cases.G5555_WEIGHT)
    )
    ok &= _check(
        "vector %s stays outside" % (cases.G5555_OUTSIDE,),
        cases.G5555_OUTSIDE in missing,
    )
    ok &= _check("chart verdict NOT NORMAL", bool(missing))
    return ok


_SUITES = {
    "example-hard": _reproduce_hard,
    "example-reducible": _reproduce_reducible,
    "example-nonnormal": _reproduce_nonnormal,
}


def _cmd_reproduce(args):
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        print("== %s ==" % name)
        ok &= _SUITES[name]()
    return 0 if ok else 1


def _add_common(sub, group=True, weight=None, json_flag=True):
    if group:
        sub.add_argument("--group", required=True, help="group spec file")
    if weight == "one":
        sub.add_argument("--weight", "--weights", required=True, help="weight vector, comma separated")
    elif weight == "many":
        sub.add_argument(
            "--weight",
            "--weights",
            action="append",
            default=[],
            help="weight vector for a spot check; repeatable (default: walk the fan)",
        )
    if json_flag:
        sub.add_argument("--json", action="store_true", help="emit JSON")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ghilb",
        description="Exact toolkit for orbit lattice ideals, their Groebner fans, "
        "distinguished modules, and chart normality.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("info", help="describe a group spec")
    _add_common(p, json_flag=False)
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("lattice-ideal", help="reduced basis of the orbit ideal")
    _add_common(p)
    p.set_defaults(func=_cmd_lattice_ideal)

    p = sub.add_parser("initial", help="initial ideal at a weight")
    _add_common(p, weight="one")
    p.set_defaults(func=_cmd_initial)

    p = sub.add_parser("constellation", help="distinguished module for (theta, w)")
    _add_common(p, weight="one")
    p.add_argument("--theta", required=True, help="stability parameter, comma separated")
    p.set_defaults(func=_cmd_constellation)

    p = sub.add_parser("membership", help="is a monomial cluster on the coherent component?")
    _add_common(p)
    p.add_argument("--ideal", required=True, help="file with the monomial ideal")
    p.set_defaults(func=_cmd_membership)

    p = sub.add_parser("clusters", help="enumerate monomial clusters")
    _add_common(p)
    p.add_argument("--budget", type=int, default=100000, help="search node budget")
    p.set_defaults(func=_cmd_clusters)

    p = sub.add_parser("fan", help="walk the Groebner fan of the orbit ideal")
    _add_common(p)
    p.add_argument("--max-cones", type=int, default=None, help="abort after this many cones")
    p.set_defaults(func=_cmd_fan)

    for verb, helptext in (
        ("chart", "chart semigroup and saturation at given weights"),
        ("normality", "normality scan over the fan or given weights"),
    ):
        p = sub.add_parser(verb, help=helptext)
        _add_common(p, weight="many")
        p.add_argument("--lattice", choices=("M", "ZA", "both"), default="both")
        p.add_argument("--max-cones", type=int, default=None)
        p.add_argument(
            "--assert-normal",
            action="store_true",
            help="exit 1 unless every checked chart is normal",
        )
        p.set_defaults(func=_cmd_chart if verb == "chart" else _cmd_normality)

    p = sub.add_parser("family", help="universal family over the chart at a weight")
    _add_common(p, weight="one")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("reproduce", help="golden checks against the bundled examples")
    p.add_argument("suite", choices=sorted(_SUITES) + ["all"])
    p.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    except BudgetExceeded as err:
        print("error: search budget exceeded (limit %s)" % err.limit, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
