"""Ribbon Schur operators and their compositions on the Fock space.

u_i adds an n-ribbon with head on diagonal i, weighted q^spin; d_i is its
adjoint.  h_k sums the ascending-head compositions u_{i_k}...u_{i_1}
(i_1 < ... < i_k), which is exactly "add a horizontal ribbon strip of k
ribbons"; every other symmetric-function operator (e_k, p_k, schur, skew
schur, Heisenberg generators B_k) is pushed through its expansion into
products of the commuting h_k.

Words store letters in product order: apply_word((2, 1, 3, 0), n, v)
computes u_2 u_1 u_3 u_0 . v, so the rightmost letter acts first.
"""

from __future__ import annotations

import re
from functools import cache

from .fock import FockVec, linear_map
from .partitions import add_ribbon, remove_ribbon, ribbon_slots, is_partition
from .qpoly import QPoly, qbracket
from .symfunc import (
    elementary_in_h,
    power_in_h,
    schur_in_h,
    skew_schur_in_h,
)


def apply_u(i, n, v):
    def moves(la):
        hit = add_ribbon(la, i, n)
        return (hit,) if hit else ()

    return linear_map(v, moves)


def apply_d(i, n, v):
    def moves(la):
        hit = remove_ribbon(la, i, n)
        return (hit,) if hit else ()

    return linear_map(v, moves)


def apply_word(letters, n, v):
    """u_{letters[0]} ... u_{letters[-1]} . v (rightmost letter first)."""
    for i in reversed(letters):
        if not v:
            break
        v = apply_u(i, n, v)
    return v


@cache
def _h_moves(la, n, k):
    """(mu, spin) over ascending-head additions of k ribbons starting at la."""
    if k == 0:
        return ((la, 0),)
    out = []

    def rec(cur, min_diag, left, spin):
        if left == 0:
            out.append((cur, spin))
            return
        for s in ribbon_slots(cur, n):
            if s.kind == "add" and s.diagonal >= min_diag:
                nxt, sp = add_ribbon(cur, s.diagonal, n)
                rec(nxt, s.diagonal + 1, left - 1, spin + sp)

    rec(la, -(len(la) + n * k + 1), k, 0)
    return tuple(out)


@cache
def _hperp_moves(la, n, k):
    """(mu, spin) over descending-head removals of k ribbons starting at la."""
    if k == 0:
        return ((la, 0),)
    out = []

    def rec(cur, max_diag, left, spin):
        if left == 0:
            out.append((cur, spin))
            return
        for s in ribbon_slots(cur, n):
            if s.kind == "remove" and s.diagonal <= max_diag:
                nxt, sp = remove_ribbon(cur, s.diagonal, n)
                rec(nxt, s.diagonal - 1, left - 1, spin + sp)

    rec(la, (la[0] if la else 0) + n + 1, k, 0)
    return tuple(out)


def apply_h(k, n, v):
    if k < 0:
        return FockVec.zero()
    return linear_map(v, lambda la: _h_moves(la, n, k))


def apply_h_perp(k, n, v):
    if k < 0:
        return FockVec.zero()
    return linear_map(v, lambda la: _hperp_moves(la, n, k))


@cache
def _h_vector(la, n, alpha):
    """h_alpha . la with the rightmost factor applied first, memoized per basis."""
    if not alpha:
        return FockVec.basis(la)
    return apply_h(alpha[0], n, _h_vector(la, n, alpha[1:]))


def apply_h_product(alpha, n, v):
    out = FockVec.zero()
    for la, coeff in v.terms.items():
        out = out + _h_vector(la, n, tuple(alpha)) * coeff
    return out


def apply_expansion(expansion, n, v):
    """Apply sum_alpha c_alpha h_alpha given {alpha: c_alpha}."""
    out = FockVec.zero()
    for alpha, c in expansion.items():
        out = out + apply_h_product(alpha, n, v) * c
    return out


def apply_expansion_perp(expansion, n, v):
    """Apply the adjoint sum_alpha c_alpha h_alpha^perp."""
    out = FockVec.zero()
    for alpha, c in expansion.items():
        w = v
        for part in alpha:
            w = apply_h_perp(part, n, w)
        out = out + w * c
    return out


def apply_e(k, n, v):
    return apply_expansion(elementary_in_h(k), n, v)


def apply_p(k, n, v):
    return apply_expansion(power_in_h(k), n, v)


def apply_schur(nu, n, v):
    return apply_expansion(schur_in_h(tuple(nu)), n, v)


def apply_skew_schur(outer, inner, n, v):
    return apply_expansion(skew_schur_in_h(tuple(outer), tuple(inner)), n, v)


def apply_B(k, n, v):
    """Heisenberg generators: B_{-k} = p_k(u) raises, B_k = p_k(u)^perp lowers (k > 0)."""
    if k == 0:
        raise ValueError("B_0 is not defined")
    if k < 0:
        return apply_expansion(power_in_h(-k), n, v)
    return apply_expansion_perp(power_in_h(k), n, v)


def _diag_weight(la, i, j, n):
    """Coefficient of (u_i d_i)^j - (d_i u_i)^j on la: -q^(2 j spin) on an
    i-addable partition, +q^(2 j spin) on an i-removable one, else 0."""
    hit = add_ribbon(la, i, n)
    if hit is not None:
        return QPoly.q_power(2 * j * hit[1], -1)
    hit = remove_ribbon(la, i, n)
    if hit is not None:
        return QPoly.q_power(2 * j * hit[1])
    return QPoly.zero()


def apply_diag(i, j, n, v):
    out = FockVec.zero()
    for la, coeff in v.terms.items():
        w = _diag_weight(la, i, j, n)
        if w:
            out = out + FockVec.basis(la, coeff * w)
    return out


def apply_diag_sum_from(i, j, n, v):
    """Sum over k >= i of the diagonal operators, slotwise finite."""
    out = FockVec.zero()
    for la, coeff in v.terms.items():
        total = QPoly.zero()
        for s in ribbon_slots(la, n):
            if s.diagonal >= i:
                sign = -1 if s.kind == "add" else 1
                total = total + QPoly.q_power(2 * j * s.spin, sign)
        if total:
            out = out + FockVec.basis(la, coeff * total)
    return out


_ATOM = re.compile(r"([A-Za-z]+)\[([-0-9,\s]*)\]")


def parse_expr(text):
    """Operator expressions: juxtaposed atoms, rightmost applied first.

    Grammar: u[i] d[i] h[k] hperp[k] e[k] p[k] B[k] s[nu] sskew[outer/inner]
    with i, k integers and nu a comma-separated partition.
    """
    atoms = []
    pos = 0
    for m in _ATOM.finditer(text):
        if text[pos : m.start()].strip():
            raise ValueError(f"cannot parse operator expression near {text[pos:m.start()]!r}")
        name, arg = m.group(1), m.group(2).strip()
        if name in ("u", "d", "h", "hperp", "e", "p", "B"):
            try:
                atoms.append((name, int(arg)))
            except ValueError:
                raise ValueError(f"{name}[] wants one integer, got {arg!r}") from None
        elif name == "s":
            parts = tuple(int(t) for t in arg.split(",")) if arg else ()
            if not is_partition(parts):
                raise ValueError(f"s[] wants a partition, got {arg!r}")
            atoms.append(("s", parts))
        else:
            raise ValueError(f"unknown operator {name!r}")
        pos = m.end()
    if text[pos:].strip():
        raise ValueError(f"cannot parse operator expression near {text[pos:]!r}")
    if not atoms:
        raise ValueError("empty operator expression")
    return tuple(atoms)


def apply_atom(atom, n, v):
    name, arg = atom
    if name == "u":
        return apply_u(arg, n, v)
    if name == "d":
        return apply_d(arg, n, v)
    if name == "h":
        return apply_h(arg, n, v)
    if name == "hperp":
        return apply_h_perp(arg, n, v)
    if name == "e":
        return apply_e(arg, n, v)
    if name == "p":
        return apply_p(arg, n, v)
    if name == "B":
        return apply_B(arg, n, v)
    if name == "s":
        return apply_schur(arg, n, v)
    raise ValueError(f"unknown operator {name!r}")


def apply_expr(atoms, n, v):
    for atom in reversed(atoms):
        if not v:
            break
        v = apply_atom(atom, n, v)
    return v


def heisenberg_scalar(k, n):
    """[B_k, B_{-k}] acts by k (1 + q^(2k) + ... + q^(2k(n-1))) for k > 0."""
    return qbracket(n, 2 * abs(k)) * k
