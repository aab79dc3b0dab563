"""Plain-text and JSON forms for exponent vectors, binomials, and ideals.

Monomials print as "a^3*c^2*e" with explicit separators, the unit as "1".
A difference binomial prints as "lead - trail".  Ideals print one generator
per line between angle brackets.  Parsing accepts exactly what printing
emits, so round trips are identity.
"""

import re

_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?$")


def format_monomial(u, names):
    parts = []
    for e, name in zip(u, names):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts) if parts else "1"


def parse_monomial(text, names):
    text = text.strip()
    if text == "1":
        return (0,) * len(names)
    index = {name: i for i, name in enumerate(names)}
    u = [0] * len(names)
    for tok in text.split("*"):
        m = _TOKEN.match(tok.strip())
        if not m or m.group(1) not in index:
            raise ValueError("bad monomial factor %r" % tok)
        e = int(m.group(2)) if m.group(2) else 1
        if e < 0:
            raise ValueError("negative exponent in %r" % tok)
        u[index[m.group(1)]] += e
    return tuple(u)


def format_binomial(b, names):
    lead, trail = (b.lead, b.trail) if hasattr(b, "lead") else b
    return "%s - %s" % (format_monomial(lead, names), format_monomial(trail, names))


def parse_binomial(text, names):
    sides = text.split(" - ")
    if len(sides) != 2:
        raise ValueError("expected exactly one ' - ' in %r" % text)
    return parse_monomial(sides[0], names), parse_monomial(sides[1], names)


def format_ideal(gens, names, binomial=None):
    lines = []
    for g in gens:
        if binomial is None:
            is_binom = hasattr(g, "lead") or (
                len(g) == 2 and isinstance(g[0], tuple)
            )
        else:
            is_binom = binomial
        lines.append(
            "  " + (format_binomial(g, names) if is_binom else format_monomial(g, names))
        )
    return "<\n" + ",\n".join(lines) + "\n>"


def _ideal_entries(text):
    text = text.strip()
    if text.startswith("<") and text.endswith(">"):
        text = text[1:-1]
    entries = [e.strip() for e in text.replace("\n", " ").split(",")]
    return [e for e in entries if e]


def parse_binomial_ideal(text, names):
    return tuple(parse_binomial(e, names) for e in _ideal_entries(text))


def parse_monomial_ideal(text, names):
    return tuple(parse_monomial(e, names) for e in _ideal_entries(text))


def format_vector(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def parse_vector(text):
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    return tuple(int(x) for x in text.split(",") if x.strip() != "")


def binomial_json(b, names):
    lead, trail = (b.lead, b.trail) if hasattr(b, "lead") else b
    return {
        "lead": list(lead),
        "trail": list(trail),
        "text": format_binomial(b, names),
    }


def monomial_json(u, names):
    return {"exponents": list(u), "text": format_monomial(u, names)}


def parse_rational_vector(text):
    """Comma-separated entries, each an integer or p/q."""
    from fractions import Fraction

    parts = [p.strip() for p in text.strip().lstrip("(").rstrip(")").split(",")]
    return tuple(Fraction(p) for p in parts if p != "")


def _num(x):
    """JSON-safe number: ints stay ints, fractions become strings."""
    if x == int(x):
        return int(x)
    return str(x)


def format_constellation(con):
    """The distinguished module, one character block per line.

    Each block lists, per variable, either the full binomial (the relation
    survives) or the lone monomial (the trailing term was cut).
    """
    chars = con.chars
    lines = []
    for p in range(chars.r):
        entries = []
        for i in range(chars.n):
            head = "%s*e_%s" % (chars.names[i], chars.label(p))
            if con.rep.b[p][i]:
                entries.append("%s - e_%s" % (head, chars.label(chars.mul[i][p])))
            else:
                entries.append(head)
        lines.append("  " + ",  ".join(entries))
    return "<\n" + ",\n".join(lines) + "\n>"


def constellation_json(con):
    chars = con.chars
    return {
        "theta": [_num(t) for t in con.theta.values],
        "weight": [_num(x) for x in con.w],
        "v": [_num(x) for x in con.v],
        "value": _num(con.value),
        "kept": sorted([i, p] for (i, p) in con.kept()),
        "text": format_constellation(con),
    }


def format_membership(verdict):
    if hasattr(verdict, "witness"):
        return "ON-COHERENT\n  witness w = %s" % format_vector(verdict.witness)
    lines = ["OFF-COMPONENT"]
    for d, m in zip(verdict.pairs, verdict.multipliers):
        if m:
            lines.append("  %s * %s" % (m, format_vector(d)))
    lines.append("  combination = %s" % format_vector(verdict.combination()))
    if verdict.truncated:
        lines.append("  (used the truncated full pair system)")
    return "\n".join(lines)


def membership_json(verdict):
    if hasattr(verdict, "witness"):
        return {
            "status": "OnCoherent",
            "witness": [_num(x) for x in verdict.witness],
            "pairs": [list(d) for d in verdict.pairs],
        }
    return {
        "status": "OffComponent",
        "pairs": [list(d) for d in verdict.pairs],
        "multipliers": [_num(m) for m in verdict.multipliers],
        "combination": list(verdict.combination()),
        "truncated": verdict.truncated,
    }


def format_fan(fan, names):
    lines = ["%d maximal cones" % len(fan)]
    for k, cone in enumerate(fan):
        mono = ", ".join(format_monomial(m, names) for m in cone.initial.gens)
        lines.append("cone %d: weight %s" % (k, format_vector(cone.weight)))
        lines.append("  initial ideal < %s >" % mono)
    return "\n".join(lines)


def fan_json(fan, names):
    return {
        "count": len(fan),
        "cones": [
            {
                "weight": [_num(x) for x in cone.weight],
                "initial": [monomial_json(m, names) for m in cone.initial.gens],
                "facets": [list(row) for row in cone.cone.inequalities],
            }
            for cone in fan
        ],
    }


def _chart_lattice_lines(tag, basis, missing, lines):
    if basis is None:
        return
    lines.append("  hilbert basis (%s), %d vectors:" % (tag, len(basis)))
    for z in basis:
        mark = "  MISSING" if z in missing else ""
        lines.append("    %s%s" % (format_vector(z), mark))


def format_normality(report):
    chars = report.chars
    names = chars.names
    lines = [
        "normality scan: r = %d, n = %d, %d chart%s (%s)"
        % (
            chars.r,
            chars.n,
            len(report.charts),
            "" if len(report.charts) == 1 else "s",
            "full fan" if report.complete else "spot check",
        )
    ]
    for k, chart in enumerate(report.charts):
        mono = ", ".join(format_monomial(m, names) for m in chart.cluster.ideal.gens)
        lines.append("chart %d: J = < %s >" % (k, mono))
        lines.append("  weight %s, %d semigroup generators" % (
            format_vector(chart.witness), len(chart.gens)))
        _chart_lattice_lines("degree kernel", chart.basis_m, chart.missing_m or (), lines)
        _chart_lattice_lines("generator span", chart.basis_za, chart.missing_za or (), lines)
        lines.append("  chart verdict: %s" % ("NORMAL" if chart.normal else "NOT NORMAL"))
    verdict = "NORMAL" if report.overall_normal else "NOT NORMAL"
    if report.complete:
        lines.append("overall: %s" % verdict)
    elif report.overall_normal:
        lines.append("overall: all checked charts NORMAL (spot check only)")
    else:
        lines.append("overall: %s" % verdict)
    return "\n".join(lines)


def normality_json(report, group=""):
    chars = report.chars
    charts = []
    certificates = []
    for k, chart in enumerate(report.charts):
        basis = {}
        missing = {}
        for tag, b, m in (
            ("M", chart.basis_m, chart.missing_m),
            ("ZA", chart.basis_za, chart.missing_za),
        ):
            if b is None:
                continue
            basis[tag] = [list(z) for z in b]
            missing[tag] = [list(z) for z in m]
            if m:
                certificates.append(
                    {"chart": k, "lattice": tag, "missing": [list(z) for z in m]}
                )
        charts.append(
            {
                "J": [monomial_json(m, chars.names) for m in chart.cluster.ideal.gens],
                "witness_w": [_num(x) for x in chart.witness],
                "gens": [list(d) for d in chart.gens],
                "hilbert_basis": basis,
                "missing": missing,
                "normal": chart.normal,
            }
        )
    return {
        "group": group,
        "r": chars.r,
        "n": chars.n,
        "charts": charts,
        "overall_normal": report.overall_normal,
        "complete": report.complete,
        "certificates": certificates,
    }


def format_family(fam):
    """Universal family: deformed generators, then parameter relations."""
    chart = fam.chart
    names = chart.cluster.chars.names
    ynames = ["y%d" % (k + 1) for k in range(len(chart.gens))]
    lines = ["family over the chart:"]
    for g, s, k in fam.binomials:
        smon = format_monomial(s, names)
        tail = ynames[k] if smon == "1" else "%s*%s" % (ynames[k], smon)
        lines.append("  %s - %s" % (format_monomial(g, names), tail))
    if fam.relations:
        lines.append("parameter relations:")
        for rel in fam.relations:
            lines.append("  %s" % format_binomial(rel, ynames))
    else:
        lines.append("parameter relations: none")
    return "\n".join(lines)


def family_json(fam):
    chart = fam.chart
    names = chart.cluster.chars.names
    ynames = ["y%d" % (k + 1) for k in range(len(chart.gens))]
    return {
        "gens": [list(d) for d in chart.gens],
        "binomials": [
            {
                "generator": monomial_json(g, names),
                "standard": monomial_json(s, names),
                "parameter": ynames[k],
            }
            for g, s, k in fam.binomials
        ],
        "relations": [binomial_json(rel, ynames) for rel in fam.relations],
    }
