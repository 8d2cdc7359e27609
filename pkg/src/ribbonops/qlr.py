"""q-Littlewood-Richardson coefficients by two independent routes.

c^nu_{outer/inner}(q) is simultaneously the coefficient of q^spin-weighted
schur operators, <s_nu(u) . inner, outer>, and the coefficient of s_nu in
the Schur expansion of the ribbon spin generating function.  The routes
share only the single-ribbon kernel; everything above that differs
(Jacobi-Trudi determinant signs vs tableau enumeration plus Kostka
inversion), which is what makes their agreement a real check.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .fock import FockVec
from .operators import _h_vector
from .partitions import contains, partitions_of, partitions_up_to, subpartitions
from .qpoly import QPoly
from .symfunc import schur_in_h
from .tableaux import ribbon_function_schur


def qlr_via_operators(nu, outer, inner, n):
    """<s_nu(u) . inner, outer> from the operator route."""
    nu = tuple(nu)
    if sum(outer) - sum(inner) != n * sum(nu):
        warnings.warn(
            f"skew size {sum(outer) - sum(inner)} != {n}*|{nu}|; pairing is identically zero",
            stacklevel=2)
        return QPoly.zero()
    total = QPoly.zero()
    for alpha, c in schur_in_h(nu).items():
        hit = _h_vector(inner, n, alpha).coefficient(outer)
        if hit:
            total = total + hit * c
    return total


@dataclass
class QLRTable:
    """All q-Littlewood-Richardson coefficients of one skew shape."""

    outer: tuple
    inner: tuple
    n: int
    entries: dict = field(default_factory=dict)  # {nu: QPoly}, dense over nu of degree m

    def __post_init__(self):
        for nu in partitions_of(self.degree):
            self.entries.setdefault(nu, QPoly.zero())

    @property
    def degree(self):
        return (sum(self.outer) - sum(self.inner)) // self.n

    def coefficient(self, nu):
        return self.entries.get(tuple(nu), QPoly.zero())

    def to_json(self):
        return {
            "n": self.n,
            "outer": list(self.outer),
            "inner": list(self.inner),
            "basis": "schur",
            "entries": [
                {"nu": list(nu), "coeffs": self.entries[nu].to_pairs()}
                for nu in partitions_of(self.degree)
            ],
        }

    def text(self):
        if not self.entries:
            return "0"
        bits = []
        for nu in partitions_of(self.degree):
            c = self.entries.get(nu)
            if not c:
                continue
            body = str(c)
            if " " in body:
                body = f"({body})"
            name = ",".join(map(str, nu))
            bits.append(f"s[{name}]" if body == "1" else f"{body} s[{name}]")
        return " + ".join(bits)

    def latex(self):
        """Group the expansion by powers of q, smallest exponent first."""
        by_power = {}
        for nu, poly in self.entries.items():
            for e, c in poly.coeffs.items():
                by_power.setdefault(e, []).append((nu, c))
        if not by_power:
            return "0"
        bits = []
        for e in sorted(by_power):
            terms = []
            for nu, c in sorted(by_power[e], key=lambda t: partitions_of(self.degree).index(t[0])):
                sep = "," if any(p > 9 for p in nu) else ""
                body = f"s_{{{sep.join(map(str, nu)) if sep else ''.join(map(str, nu))}}}"
                terms.append(body if c == 1 else f"{c}{body}")
            inner = " + ".join(terms)
            if e == 0:
                bits.append(inner if len(terms) == 1 else f"({inner})")
            elif len(terms) == 1 and "+" not in inner:
                bits.append(f"q^{{{e}}} {inner}" if e != 1 else f"q {inner}")
            else:
                bits.append(f"q^{{{e}}}({inner})" if e != 1 else f"q({inner})")
        return " + ".join(bits)


def qlr_via_expansion(outer, inner, n):
    """Schur expansion of the ribbon spin generating function, as a table."""
    f = ribbon_function_schur(outer, inner, n)
    return QLRTable(tuple(outer), tuple(inner), n, dict(f.coeffs))


def qlr_table_via_operators(outer, inner, n):
    size = sum(outer) - sum(inner)
    if size % n:
        raise ValueError(f"skew size {size} is not a multiple of {n}")
    entries = {}
    for nu in partitions_of(size // n):
        c = qlr_via_operators(nu, outer, inner, n)
        if c:
            entries[nu] = c
    return QLRTable(tuple(outer), tuple(inner), n, entries)


@dataclass
class ScanReport:
    max_size: int
    ns: tuple
    shapes: int = 0
    entries: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def to_json(self):
        return {
            "max_size": self.max_size,
            "n_values": list(self.ns),
            "shapes_scanned": self.shapes,
            "entries_checked": self.entries,
            "violations": [
                {
                    "n": n,
                    "outer": list(outer),
                    "inner": list(inner),
                    "nu": list(nu),
                    "coeffs": poly.to_pairs(),
                }
                for n, outer, inner, nu, poly in self.violations
            ],
            "ok": self.ok,
        }


def nonnegativity_scan(max_size, ns=(2, 3)):
    """Check every expansion-route coefficient for outer size <= max_size.

    Shapes run over all pairs inner <= outer cellwise with n dividing the
    skew size; a violation is any c^nu with a negative coefficient.
    """
    report = ScanReport(max_size, tuple(ns))
    for outer in partitions_up_to(max_size):
        for inner in subpartitions(outer):
            size = sum(outer) - sum(inner)
            for n in ns:
                if size % n:
                    continue
                table = qlr_via_expansion(outer, inner, n)
                report.shapes += 1
                for nu, poly in table.entries.items():
                    report.entries += 1
                    if any(c < 0 for c in poly.coeffs.values()):
                        report.violations.append((n, outer, inner, nu, poly))
    return report
