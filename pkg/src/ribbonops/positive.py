"""Positive monomial formulas for schur functions in the u_i.

For hook shapes (a, 1^b) and two-row shapes (s, 2), the schur operator
s_nu(u) expands as a multiplicity-free sum of monomials u_w indexed by
fillings of nu whose rows strictly increase and whose reading word (top row
right to left, then the next rows) obeys the n-commuting constraints.  The
conjugate families (b+1, 1^(a-1)) and (2, 2, 1^(s-2)) come for free by
reversing the order on letter values, which swaps the roles of h and e.

Words are stored in product order (rightmost letter acts first), matching
apply_word.
"""

from __future__ import annotations

from functools import cache
from itertools import combinations

from .fock import FockVec, linear_map
from .partitions import add_ribbon, conjugate, ribbon_slots
from .qpoly import QPoly
from .tableaux import RibbonTableau


class UnsupportedShapeError(ValueError):
    """nu lies outside the implemented families {hooks, (s,2)} and their conjugates."""


def reading_word(rows):
    """Top row right to left, then downwards."""
    word = []
    for row in rows:
        word.extend(reversed(row))
    return tuple(word)


def is_n_commuting(rows, n):
    """Filling test for a straight shape, one row tuple per row.

    Rows must strictly increase.  Columns past the first weakly increase
    downward; the first column only does where the lower row has a single
    cell.  A two-by-two block in the first two columns must either descend
    in column one with the lower-row letters n-close (non-commuting), or
    ascend with the upper-right letter at most the lower-left one, or ascend
    with the upper-right letter larger and the corner letters far enough
    apart to commute.
    """
    shape = tuple(len(r) for r in rows)
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError("rows must form a partition shape")
    for row in rows:
        if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
            return False
    for x in range(len(rows) - 1):
        up, down = rows[x], rows[x + 1]
        for y in range(1, len(down)):
            if up[y] > down[y]:
                return False
        if len(down) == 1 and up[0] > down[0]:
            return False
        if len(down) >= 2:
            a, b = up[0], up[1]
            c, d = down[0], down[1]
            if a > c:
                if d - c > n:
                    return False
            elif a < c:
                if not (b <= c or d - a > n):
                    return False
            else:
                return False
    return True


def hook_monomials(a, b, window):
    """Product-order words of the hook (a, 1^b) formula over diagonals in window."""
    if a < 1 or b < 0:
        raise ValueError("hook needs a >= 1 arm and b >= 0 leg")
    lo, hi = window
    words = []
    for row in combinations(range(lo, hi + 1), a):
        for col in combinations(range(row[0] + 1, hi + 1), b):
            words.append(tuple(reversed(row)) + col)
    return words


def s2_monomials(s, n, window):
    """Product-order words of the (s, 2) formula over diagonals in window."""
    if s < 2:
        raise ValueError("(s,2) needs s >= 2")
    lo, hi = window
    words = []
    for c in range(lo, hi + 1):
        for d in range(c + 1, hi + 1):
            for row in combinations(range(lo, hi + 1), s):
                if _s2_ok(row[0], row[1], c, d, n):
                    words.append(tuple(reversed(row)) + (d, c))
    return words


def _s2_ok(x1, x2, c, d, n):
    if x2 > d:
        return False
    if x1 > c:
        return d - c <= n
    if x1 == c:
        return False
    return x2 <= c or d - x1 > n


@cache
def _hook_words(la, a, b, n, sign):
    """(product word, mu, spin) for hook-formula words acting nonzero on la.

    sign=-1 runs the order-reversed family; all comparisons go through
    sign * diagonal while the letters stay actual diagonals.
    """
    out = []

    def row_rec(cur, prev_key, cap, left, spin, acc):
        if left == 0:
            out.append((tuple(reversed(acc)), cur, spin))
            return
        for s in ribbon_slots(cur, n):
            if s.kind != "add":
                continue
            key = sign * s.diagonal
            if prev_key is not None and key <= prev_key:
                continue
            if cap is not None and key >= cap:
                continue
            nxt, sp = add_ribbon(cur, s.diagonal, n)
            row_rec(nxt, key, None, left - 1, spin + sp, acc + (s.diagonal,))

    def col_rec(cur, ub, left, spin, acc):
        if left == 0:
            row_rec(cur, None, ub, a, spin, acc)
            return
        for s in ribbon_slots(cur, n):
            if s.kind != "add":
                continue
            key = sign * s.diagonal
            if ub is not None and key >= ub:
                continue
            nxt, sp = add_ribbon(cur, s.diagonal, n)
            col_rec(nxt, key, left - 1, spin + sp, acc + (s.diagonal,))

    if b == 0:
        row_rec(la, None, None, a, 0, ())
    else:
        col_rec(la, None, b, 0, ())
    return tuple(out)


@cache
def _s2_words(la, s, n, sign):
    """(product word, mu, spin) for (s,2)-formula words acting nonzero on la."""
    out = []

    def row_rest(cur, prev_key, left, spin, acc):
        if left == 0:
            out.append((tuple(reversed(acc)), cur, spin))
            return
        for t in ribbon_slots(cur, n):
            if t.kind != "add":
                continue
            key = sign * t.diagonal
            if key <= prev_key:
                continue
            nxt, sp = add_ribbon(cur, t.diagonal, n)
            row_rest(nxt, key, left - 1, spin + sp, acc + (t.diagonal,))

    for sc in ribbon_slots(la, n):
        if sc.kind != "add":
            continue
        c = sc.diagonal
        after_c, sp_c = add_ribbon(la, c, n)
        for sd in ribbon_slots(after_c, n):
            if sd.kind != "add" or sign * sd.diagonal <= sign * c:
                continue
            d = sd.diagonal
            after_d, sp_d = add_ribbon(after_c, d, n)
            for sx1 in ribbon_slots(after_d, n):
                if sx1.kind != "add":
                    continue
                x1 = sx1.diagonal
                if x1 == c:
                    continue
                if sign * x1 > sign * c and abs(d - c) > n:
                    continue
                below = sign * x1 < sign * c
                after_x1, sp_x1 = add_ribbon(after_d, x1, n)
                for sx2 in ribbon_slots(after_x1, n):
                    if sx2.kind != "add":
                        continue
                    x2 = sx2.diagonal
                    if sign * x2 <= sign * x1 or sign * x2 > sign * d:
                        continue
                    if below and not (sign * x2 <= sign * c or abs(d - x1) > n):
                        continue
                    after_x2, sp_x2 = add_ribbon(after_x1, x2, n)
                    row_rest(
                        after_x2,
                        sign * x2,
                        s - 2,
                        sp_c + sp_d + sp_x1 + sp_x2,
                        (c, d, x1, x2),
                    )
    return tuple(out)


def _classify(nu):
    nu = tuple(nu)
    if nu and all(p == 1 for p in nu[1:]):
        return ("hook", nu[0], len(nu) - 1)
    if len(nu) == 2 and nu[1] == 2:
        return ("s2", nu[0])
    return None


def formula_words(nu, la, n):
    """All (product word, mu, spin) of the positive formula for s_nu(u) on la.

    Primal for hooks and (s,2); order-reversed for their conjugates;
    UnsupportedShapeError otherwise.
    """
    kind = _classify(nu)
    if kind is not None:
        sign = 1
    else:
        kind = _classify(conjugate(nu))
        if kind is None:
            raise UnsupportedShapeError(f"no positive formula implemented for {nu}")
        sign = -1
    if kind[0] == "hook":
        return _hook_words(la, kind[1], kind[2], n, sign)
    return _s2_words(la, kind[1], n, sign)


def apply_formula(nu, n, v):
    """Positive-formula action of s_nu(u) on a vector."""

    def moves(la):
        return tuple((mu, spin) for _, mu, spin in formula_words(nu, la, n))

    return linear_map(v, moves)


def monomials_in_window(nu, n, window):
    """Product-order words of whichever positive formula covers nu."""
    kind = _classify(nu)
    if kind is not None:
        if kind[0] == "hook":
            return hook_monomials(kind[1], kind[2], window)
        return s2_monomials(kind[1], n, window)
    return dual_monomials(nu, n, window)


def dual_monomials(nu, n, window):
    """Order-reversed words for nu whose conjugate is a hook or (s,2)."""
    lo, hi = window
    kind = _classify(conjugate(nu))
    if kind is None:
        raise UnsupportedShapeError(f"{nu} has no implemented conjugate formula")
    if kind[0] == "hook":
        base = hook_monomials(kind[1], kind[2], (-hi, -lo))
    else:
        base = s2_monomials(kind[1], n, (-hi, -lo))
    return [tuple(-l for l in w) for w in base]


def _increasing_runs(seq):
    runs = []
    for x in seq:
        if runs and x > runs[-1][-1]:
            runs[-1].append(x)
        else:
            runs.append([x])
    return runs


def yamanouchi_tableaux(nu, outer, inner, n):
    """Ribbon tableaux cut out of the positive formula's words.

    Each word with u_w . inner = q^spin outer is grouped into maximal
    strictly increasing runs of its application order; the runs are the
    strips of a ribbon tableau whose sorted weight must be nu.
    """
    nu = tuple(nu)
    if _classify(nu) is None:
        raise UnsupportedShapeError(f"yamanouchi extraction wants a hook or (s,2), got {nu}")
    found = []
    for word, mu, spin in formula_words(nu, inner, n):
        if mu != tuple(outer):
            continue
        runs = _increasing_runs(list(reversed(word)))
        profile = tuple(sorted((len(r) for r in runs), reverse=True))
        if profile != nu:
            raise AssertionError(f"word {word} groups as {profile}, expected {nu}")
        chain = [tuple(inner)]
        total = 0
        cur = tuple(inner)
        for run in runs:
            for i in run:
                cur, sp = add_ribbon(cur, i, n)
                total += sp
            chain.append(cur)
        assert cur == tuple(outer) and total == spin
        found.append(RibbonTableau(tuple(outer), tuple(inner), n, tuple(chain), spin))
    return found


def formula_polynomial(nu, outer, inner, n):
    """Sum of q^spin over the formula's words from inner to outer."""
    total = QPoly.zero()
    for _, mu, spin in formula_words(nu, inner, n):
        if mu == tuple(outer):
            total = total + QPoly.q_power(spin)
    return total
