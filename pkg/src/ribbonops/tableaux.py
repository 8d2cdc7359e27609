"""Semistandard ribbon tableaux and spin generating functions.

A ribbon tableau of shape outer/inner and weight (w_1, ..., w_r) is a chain
of partitions from inner to outer whose t-th step adds a horizontal strip of
w_t n-ribbons; its spin is the total ribbon spin.  The generating function
collecting q^spin by weight is symmetric, so it is expanded over monomial
coefficients indexed by partitions and converted to the Schur basis through
the Kostka matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .partitions import (
    add_ribbon,
    added_cells,
    contains,
    partitions_of,
    ribbon_slots,
)
from .qpoly import QPoly
from .symfunc import SymFunc, to_schur_basis


@cache
def _strips_last(mu, n, k):
    """(la, spin, last_head) over horizontal strips of k ribbons above mu."""
    if k == 0:
        return ((mu, 0, None),)
    out = []
    for la0, spin0, last in _strips_last(mu, n, k - 1):
        for s in ribbon_slots(la0, n):
            if s.kind == "add" and (last is None or s.diagonal > last):
                la1, sp = add_ribbon(la0, s.diagonal, n)
                out.append((la1, spin0 + sp, s.diagonal))
    return tuple(out)


def horizontal_strips(mu, n, k):
    """All (la, spin) with la/mu a horizontal strip of k n-ribbons.

    Distinct head sequences give distinct la (tilings of a horizontal strip
    are unique), so the pairs need no merging.
    """
    return tuple((la, spin) for la, spin, _ in _strips_last(mu, n, k))


@cache
def _strips_within(mu, n, k, outer):
    """horizontal_strips pruned to partitions contained in outer."""
    if k == 0:
        return ((mu, 0, None),)
    out = []
    for la0, spin0, last in _strips_within(mu, n, k - 1, outer):
        for s in ribbon_slots(la0, n):
            if s.kind == "add" and (last is None or s.diagonal > last):
                la1, sp = add_ribbon(la0, s.diagonal, n)
                if contains(outer, la1):
                    out.append((la1, spin0 + sp, s.diagonal))
    return tuple(out)


def strip_heads(mu, la, n):
    """Ascending head diagonals tiling la/mu as a horizontal strip, else None."""
    size = sum(la) - sum(mu)
    if size % n or not contains(la, mu):
        return None

    def rec(cur, min_diag, left):
        if left == 0:
            return () if cur == la else None
        for s in ribbon_slots(cur, n):
            if s.kind == "add" and s.diagonal >= min_diag:
                nxt, _ = add_ribbon(cur, s.diagonal, n)
                if contains(la, nxt):
                    tail = rec(nxt, s.diagonal + 1, left - 1)
                    if tail is not None:
                        return (s.diagonal,) + tail
        return None

    return rec(mu, -(len(la) + n + 1), size // n)


@dataclass
class RibbonTableau:
    outer: tuple
    inner: tuple
    n: int
    chain: tuple  # partitions from inner to outer, one per strip
    spin: int

    @property
    def weight(self):
        return tuple(
            (sum(b) - sum(a)) // self.n for a, b in zip(self.chain, self.chain[1:])
        )

    def tiles(self):
        """[(strip index, head diagonal)] with strips numbered from 1."""
        out = []
        for t, (a, b) in enumerate(zip(self.chain, self.chain[1:]), start=1):
            for d in strip_heads(a, b, self.n):
                out.append((t, d))
        return out

    def cell_labels(self):
        """{(row, col): strip index} over the cells of outer/inner."""
        labels = {}
        for t, (a, b) in enumerate(zip(self.chain, self.chain[1:]), start=1):
            for cell in added_cells(a, b):
                labels[cell] = t
        return labels

    def ascii_art(self):
        labels = self.cell_labels()
        rows = []
        for r, p in enumerate(self.outer, start=1):
            row = []
            for c in range(1, p + 1):
                if (r, c) in labels:
                    t = labels[(r, c)]
                    row.append(str(t) if t < 10 else f"({t})")
                else:
                    row.append(".")
            rows.append(" ".join(row))
        return "\n".join(rows)

    def to_json(self):
        return {
            "outer": list(self.outer),
            "inner": list(self.inner),
            "n": self.n,
            "weight": list(self.weight),
            "spin": self.spin,
            "chain": [list(p) for p in self.chain],
            "tiles": [{"ribbon_index": t, "head_diagonal": d} for t, d in self.tiles()],
        }


def enumerate_tableaux(outer, inner, n, weight):
    """All ribbon tableaux of shape outer/inner with the given weight composition."""
    if not contains(outer, inner):
        raise ValueError("inner partition not contained in outer")
    if sum(outer) - sum(inner) != n * sum(weight):
        return []
    if any(w < 0 for w in weight):
        raise ValueError("weight entries must be >= 0")
    found = []

    def rec(cur, idx, chain, spin):
        if idx == len(weight):
            if cur == outer:
                found.append(RibbonTableau(outer, inner, n, chain, spin))
            return
        for la, sp, _ in _strips_within(cur, n, weight[idx], outer):
            rec(la, idx + 1, chain + (la,), spin + sp)

    rec(inner, 0, (inner,), 0)
    return found


@cache
def weight_poly(outer, inner, n, weight):
    """Sum of q^spin over ribbon tableaux of shape outer/inner and given weight."""
    if not weight:
        return QPoly.one() if outer == inner else QPoly.zero()
    acc = QPoly.zero()
    for la, sp, _ in _strips_within(inner, n, weight[0], outer):
        contribution = weight_poly(outer, la, n, weight[1:])
        if contribution:
            acc = acc + contribution.shifted(sp)
    return acc


def ribbon_function(outer, inner, n):
    """Spin generating function of outer/inner in the monomial basis."""
    size = sum(outer) - sum(inner)
    if size % n:
        raise ValueError(f"skew size {size} is not a multiple of {n}")
    if not contains(outer, inner):
        raise ValueError("inner partition not contained in outer")
    m = size // n
    coeffs = {}
    for nu in partitions_of(m):
        c = weight_poly(outer, inner, n, nu)
        if c:
            coeffs[nu] = c
    return SymFunc("m", m, coeffs)


def ribbon_function_schur(outer, inner, n):
    return to_schur_basis(ribbon_function(outer, inner, n))
