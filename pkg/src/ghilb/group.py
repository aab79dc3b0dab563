"""Finite abelian diagonal subgroups of GL(n) and their character data.

A group is given by diagonal generators g_k = diag(zeta^{a_k1}, ..., zeta^{a_kn})
with zeta a primitive m_k-th root of unity.  Nothing here ever touches an
actual root of unity: a character is recorded by its tuple of values on the
generators, each value an exponent in Z/m_k.

The character group G* is generated by the coordinate characters
rho_1, ..., rho_n (the columns of the exponent matrix).  The degree map sends
a monomial exponent u to sum u_i rho_i, and its kernel M is a finite-index
sublattice of Z^n with [Z^n : M] = |G|.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .intlin import (
    hermite_basis,
    invariant_factors,
    kernel_mod,
    lattice_index,
)


class GroupParseError(ValueError):
    def __init__(self, line_no, message):
        super().__init__("line %d: %s" % (line_no, message))
        self.line_no = line_no


@dataclass(frozen=True)
class GroupSpec:
    n: int
    generators: tuple  # of (modulus, exponent tuple of length n)
    names: tuple  # variable names, length n

    def __post_init__(self):
        assert len(self.names) == self.n
        for m, row in self.generators:
            assert m >= 1 and len(row) == self.n
            assert all(0 <= a < m for a in row)


def default_names(n):
    return tuple("x%d" % (i + 1) for i in range(n))


def parse_group(text):
    """Parse a group-spec document.

    Format, one item per line, '#' starts a comment:

        n = 3
        names = a b c        (optional)
        gen 11 : 1 2 8       (one line per generator)
    """
    n = None
    names = None
    gens = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("names"):
            head, _, rest = line.partition("=")
            if head.strip() != "names":
                raise GroupParseError(line_no, "expected 'names = a b ...'")
            names = tuple(rest.split())
            if len(set(names)) != len(names):
                raise GroupParseError(line_no, "duplicate variable name")
        elif line.startswith("n"):
            head, _, rest = line.partition("=")
            if head.strip() != "n":
                raise GroupParseError(line_no, "expected 'n = <int>'")
            if n is not None:
                raise GroupParseError(line_no, "n given twice")
            try:
                n = int(rest.strip())
            except ValueError:
                raise GroupParseError(line_no, "n is not an integer") from None
            if n < 1:
                raise GroupParseError(line_no, "n must be at least 1")
        elif line.startswith("gen"):
            if n is None:
                raise GroupParseError(line_no, "'n = ...' must come before generators")
            body = line[3:].strip()
            mod_part, sep, exp_part = body.partition(":")
            if not sep:
                raise GroupParseError(line_no, "expected 'gen <modulus> : <exponents>'")
            try:
                m = int(mod_part.strip())
            except ValueError:
                raise GroupParseError(line_no, "modulus is not an integer") from None
            if m < 1:
                raise GroupParseError(line_no, "modulus must be at least 1")
            try:
                row = tuple(int(tok) for tok in exp_part.split())
            except ValueError:
                raise GroupParseError(line_no, "bad exponent") from None
            if len(row) != n:
                raise GroupParseError(
                    line_no, "expected %d exponents, got %d" % (n, len(row))
                )
            gens.append((m, tuple(a % m for a in row)))
        else:
            raise GroupParseError(line_no, "unrecognized line %r" % line)
    if n is None:
        raise GroupParseError(0, "missing 'n = <int>'")
    if names is None:
        names = default_names(n)
    elif len(names) != n:
        raise GroupParseError(0, "names count differs from n")
    return GroupSpec(n=n, generators=tuple(gens), names=names)


def format_group(spec):
    """Canonical re-serialization; parse_group(format_group(s)) == s."""
    lines = ["n = %d" % spec.n]
    if spec.names != default_names(spec.n):
        lines.append("names = %s" % " ".join(spec.names))
    for m, row in spec.generators:
        lines.append("gen %d : %s" % (m, " ".join(str(a) for a in row)))
    return "\n".join(lines) + "\n"


class CharGroup:
    """The character group G* of a GroupSpec, with the degree map and lattice M.

    Characters are residue tuples: entry k is the exponent the character takes
    on generator k.  The tuples generated by the coordinate characters are
    enumerated in lexicographic order, so the trivial character is element 0
    and the enumeration is deterministic.  For a cyclic group given by one
    generator this makes element j the character with value j, matching the
    usual rho_0, rho_1, ... labelling.
    """

    def __init__(self, spec):
        self.spec = spec
        self.n = spec.n
        self.names = spec.names
        self.moduli = tuple(m for m, _ in spec.generators)
        k = len(self.moduli)
        # column i = values of rho_i (the character of x_i) on the generators
        self.weights = tuple(
            tuple(row[i] for _, row in spec.generators) for i in range(spec.n)
        )
        zero = (0,) * k
        seen = {zero}
        frontier = [zero]
        while frontier:
            t = frontier.pop()
            for col in self.weights:
                nt = tuple((a + b) % m for a, b, m in zip(t, col, self.moduli))
                if nt not in seen:
                    seen.add(nt)
                    frontier.append(nt)
        self.elements = tuple(sorted(seen))
        assert self.elements[0] == zero
        self.r = len(self.elements)
        self.index_of = {c: i for i, c in enumerate(self.elements)}
        self.trivial = 0
        # rho[i] = index of deg(e_i)
        self.rho = tuple(self.index_of[tuple(c % m for c, m in zip(col, self.moduli))]
                         for col in self.weights)
        # mul[i][j] = index of elements[j] * rho_i
        self.mul = tuple(
            tuple(
                self.index_of[
                    tuple((a + b) % m for a, b, m in zip(c, col, self.moduli))
                ]
                for c in self.elements
            )
            for col in self.weights
        )
        self.inverse = tuple(
            self.index_of[tuple((-a) % m for a, m in zip(c, self.moduli))]
            for c in self.elements
        )
        rows = tuple(
            tuple(row[i] for i in range(spec.n)) for _, row in spec.generators
        )
        self.lattice = kernel_mod(rows, self.moduli, n=spec.n)
        assert lattice_index(self.lattice, spec.n) == self.r
        # multiplicative order of each coordinate character
        self.orders = tuple(self._element_order(col) for col in self.weights)
        self.invariants = invariant_factors(self.presentation_matrix())

    def _element_order(self, col):
        o = 1
        for a, m in zip(col, self.moduli):
            if a:
                o = lcm(o, m // gcd(a, m))
        return o

    def presentation_matrix(self):
        """Relations matrix of G* on the generators rho_1..rho_n: its cokernel
        invariants are the invariant factors of G (equal to those of G*)."""
        return hermite_basis(self.lattice)

    def deg(self, u):
        """Index of the character of the monomial x^u (u may have negatives)."""
        assert len(u) == self.n
        t = tuple(
            sum(ui * col[k] for ui, col in zip(u, self.weights)) % m
            for k, m in enumerate(self.moduli)
        )
        return self.index_of[t]

    def label(self, idx):
        return "rho_%d" % idx

    def describe(self, idx):
        c = self.elements[idx]
        if len(self.moduli) == 1:
            return str(c[0])
        return "(" + ",".join(str(a) for a in c) + ")"


def character_group(spec):
    return CharGroup(spec)


@dataclass(frozen=True)
class ThetaParam:
    values: tuple  # of Fraction, length r, summing to zero

    @staticmethod
    def parse(text, r):
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != r:
            raise ValueError("theta needs %d entries, got %d" % (r, len(parts)))
        vals = tuple(Fraction(p) for p in parts)
        return ThetaParam.of(vals)

    @staticmethod
    def of(vals):
        vals = tuple(Fraction(v) for v in vals)
        if sum(vals) != 0:
            raise ValueError("theta must sum to zero, got %s" % (sum(vals),))
        return ThetaParam(values=vals)


def validate_theta_ghilb(theta):
    """First chamber condition for theta to cut out G-Hilb: the trivial
    character weight is negative and every other weight is positive.

    A second chamber condition (degree-one generation of the quotients)
    only matters proof-side and is not checked here; callers that care
    report it as unverified.
    """
    vals = theta.values
    return vals[0] < 0 and all(v > 0 for v in vals[1:])


@dataclass(frozen=True)
class QuiverMatrices:
    B: tuple  # r x nr incidence matrix, rows = characters
    C: tuple  # (r+n) x nr, B stacked over the label rows
    column_index: dict  # (rho index, i) -> column position


def quiver_matrices(chars):
    """Incidence matrices of the McKay quiver.

    Column (rho, i) is e_rho - e_{rho rho_i} (+ e_i in the lower block of C).
    Columns come in r blocks ordered like the character enumeration (trivial
    first), and within a block i runs 1..n.
    """
    r, n = chars.r, chars.n
    ncols = n * r
    col_index = {}
    bt = []  # columns of B
    for p in range(r):
        for i in range(n):
            col_index[(p, i)] = len(bt)
            col = [0] * r
            col[p] += 1
            col[chars.mul[i][p]] -= 1
            bt.append(col)
    b = tuple(tuple(bt[c][row] for c in range(ncols)) for row in range(r))
    lower = tuple(
        tuple(1 if c % n == i else 0 for c in range(ncols)) for i in range(n)
    )
    return QuiverMatrices(B=b, C=b + lower, column_index=col_index)
