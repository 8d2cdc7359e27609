"""Symmetric function bookkeeping over Z.

Everything here is classical combinatorics of symmetric functions: schur,
power and elementary sums expanded into products of complete homogeneous
functions (so they can be pushed through any algebra where the h_k commute),
Kostka numbers, and the unitriangular monomial -> Schur basis change.
h-products are recorded as dicts {sorted tuple of parts: int coefficient}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import permutations

from .partitions import partitions_of
from .qpoly import QPoly, qbracket


def _hmul(f, g):
    out = {}
    for a, ca in f.items():
        for b, cb in g.items():
            key = tuple(sorted(a + b, reverse=True))
            c = out.get(key, 0) + ca * cb
            if c:
                out[key] = c
            else:
                del out[key]
    return out


def _hadd(f, g, scale=1):
    out = dict(f)
    for a, c in g.items():
        nc = out.get(a, 0) + scale * c
        if nc:
            out[a] = nc
        else:
            del out[a]
    return out


def _parity(perm):
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


@cache
def skew_schur_in_h(outer, inner=()):
    """Jacobi-Trudi: s_{outer/inner} = det(h_{outer_i - inner_j - i + j})."""
    l = len(outer)
    if len(inner) > l or any((inner[i] if i < len(inner) else 0) > outer[i] for i in range(l)):
        return {}
    pad = tuple(inner) + (0,) * (l - len(inner))
    out = {}
    for sigma in permutations(range(l)):
        subs = [outer[i] - pad[sigma[i]] - i + sigma[i] for i in range(l)]
        if any(s < 0 for s in subs):
            continue
        key = tuple(sorted((s for s in subs if s), reverse=True))
        c = out.get(key, 0) + _parity(sigma)
        if c:
            out[key] = c
        else:
            del out[key]
    return out


@cache
def schur_in_h(nu):
    return skew_schur_in_h(nu, ())


@cache
def elementary_in_h(k):
    return schur_in_h((1,) * k)


@cache
def power_in_h(k):
    """Newton's identity: p_k = k h_k - sum_{i<k} p_i h_{k-i}."""
    if k < 1:
        raise ValueError("power sum index must be >= 1")
    out = {(k,): k}
    for i in range(1, k):
        out = _hadd(out, _hmul(power_in_h(i), {(k - i,): 1}), scale=-1)
    return out


@cache
def ordinary_strips_below(nu, k):
    """All mu with nu/mu a horizontal strip of k boxes (1-ribbons)."""
    out = []

    def rec(row, prev, left, acc):
        if row == len(nu):
            if left == 0:
                out.append(tuple(p for p in acc if p))
            return
        hi = min(nu[row], prev)
        lo = nu[row + 1] if row + 1 < len(nu) else 0
        for p in range(hi, lo - 1, -1):
            drop = nu[row] - p
            if drop > left:
                break
            rec(row + 1, p, left - drop, acc + (p,))

    rec(0, nu[0] if nu else 0, k, ())
    return tuple(out)


@cache
def kostka(nu, rho):
    """Number of semistandard tableaux of shape nu and content rho."""
    if sum(nu) != sum(rho):
        return 0
    if not rho:
        return 1 if not nu else 0
    return sum(kostka(mu, rho[:-1]) for mu in ordinary_strips_below(nu, rho[-1]))


@dataclass
class SymFunc:
    """Homogeneous symmetric function with QPoly coefficients, in basis 'm' or 's'."""

    basis: str
    degree: int
    coeffs: dict

    def __post_init__(self):
        if self.basis not in ("m", "s"):
            raise ValueError("basis must be 'm' or 's'")
        self.coeffs = {nu: c for nu, c in self.coeffs.items() if c}

    def coefficient(self, nu):
        return self.coeffs.get(nu, QPoly.zero())

    def to_pairs(self):
        order = partitions_of(self.degree)
        return [[list(nu), self.coeffs[nu].to_pairs()] for nu in order if nu in self.coeffs]

    def __eq__(self, other):
        return (
            isinstance(other, SymFunc)
            and self.basis == other.basis
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )


def to_schur_basis(f):
    """Invert the unitriangular Kostka matrix: basis 'm' -> basis 's'.

    partitions_of runs in reverse-lex order, a linear extension of dominance,
    and K(nu, rho) != 0 only when nu dominates rho, so plain forward
    substitution is exact over Z.
    """
    if f.basis == "s":
        return f
    out = {}
    for nu in partitions_of(f.degree):
        c = f.coefficient(nu)
        for mu, cm in out.items():
            k = kostka(mu, nu)
            if k:
                c = c - cm * k
        if c:
            out[nu] = c
    return SymFunc("s", f.degree, out)


def to_monomial_basis(f):
    if f.basis == "m":
        return f
    out = {}
    for nu, c in f.coeffs.items():
        for rho in partitions_of(f.degree):
            k = kostka(nu, rho)
            if k:
                prev = out.get(rho, QPoly.zero())
                out[rho] = prev + c * k
    return SymFunc("m", f.degree, out)


@cache
def h_eval_at_q2(i, n):
    """h_i(1, q^2, q^4, ..., q^(2(n-1))) as an exact polynomial."""
    if i == 0:
        return QPoly.one()
    if n == 0:
        return QPoly.zero()
    # h over one more variable: h_i(x_1..x_n) = h_i(x_1..x_{n-1}) + x_n h_{i-1}(x_1..x_n)
    return h_eval_at_q2(i, n - 1) + h_eval_at_q2(i - 1, n).shifted(2 * (n - 1))


def p_eval_at_q2(k, n):
    """p_k(1, q^2, ..., q^(2(n-1))) = 1 + q^(2k) + ... + q^(2k(n-1))."""
    return qbracket(n, 2 * k)
