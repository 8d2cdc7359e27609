"""Exhaustive desk-scale checks of the operator identities.

Every checker sweeps all partitions up to a size bound, compares both sides
of an identity exactly, and returns a VerificationReport whose failures
carry enough data to replay one bad case by hand.  algebra_dimension
measures the rank of the span of u-word matrices on a truncated Fock space
over the field of rational functions in q, fraction-free over the integer
polynomials with a rational-specialization cross-check.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .fock import FockVec
from .operators import (
    apply_B,
    apply_d,
    apply_diag,
    apply_diag_sum_from,
    apply_h,
    apply_h_perp,
    apply_u,
    heisenberg_scalar,
)
from .partitions import (
    add_ribbon,
    diagonal_window,
    format_partition,
    partitions_up_to,
    ribbon_slots,
)
from .qpoly import QPoly, qbracket
from .symfunc import h_eval_at_q2


@dataclass
class VerificationReport:
    identity: str
    n: int
    params: dict
    cases: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self):
        return not self.failures

    def tally(self, lhs, rhs, witness):
        self.cases += 1
        if lhs != rhs:
            self.failures.append(dict(witness, lhs=str(lhs), rhs=str(rhs)))

    def to_json(self):
        return {
            "identity": self.identity,
            "n": self.n,
            "params": self.params,
            "cases": self.cases,
            "failures": self.failures,
            "ok": self.ok,
            "elapsed": round(self.elapsed, 3),
        }

    def summary(self):
        word = "ok" if self.ok else f"{len(self.failures)} FAILED"
        return (f"{self.identity} n={self.n} {self.params}: "
                f"{self.cases} cases, {word} ({self.elapsed:.2f}s)")


def _witness(la, **kw):
    return dict(kw, shape=format_partition(la))


def check_relations(n, max_size, shapes=None):
    """Local relations of the u_i and the off-diagonal ud commutation."""
    t0 = time.time()
    rep = VerificationReport("relations", n, {"max_size": max_size})
    for la in (partitions_up_to(max_size) if shapes is None else shapes):
        v = FockVec.basis(la)
        lo, hi = diagonal_window(la, n, 2)
        for i in range(lo, hi + 1):
            rep.tally(apply_u(i, n, apply_u(i, n, v)), FockVec.zero(),
                      _witness(la, rule="u_i u_i = 0", i=i))
            rep.tally(
                apply_u(i + n, n, apply_u(i, n, apply_u(i + n, n, v))),
                FockVec.zero(),
                _witness(la, rule="u_{i+n} u_i u_{i+n} = 0", i=i))
            rep.tally(
                apply_u(i, n, apply_u(i + n, n, apply_u(i, n, v))),
                FockVec.zero(),
                _witness(la, rule="u_i u_{i+n} u_i = 0", i=i))
            for j in range(lo, i):
                ud = apply_u(i, n, apply_d(j, n, v))
                du = apply_d(j, n, apply_u(i, n, v))
                rep.tally(ud, du, _witness(la, rule="u_i d_j = d_j u_i", i=i, j=j))
                ud = apply_u(j, n, apply_d(i, n, v))
                du = apply_d(i, n, apply_u(j, n, v))
                rep.tally(ud, du, _witness(la, rule="u_j d_i = d_i u_j", i=i, j=j))
                uij = apply_u(i, n, apply_u(j, n, v))
                uji = apply_u(j, n, apply_u(i, n, v))
                if i - j > n:
                    rep.tally(uij, uji,
                              _witness(la, rule="far letters commute", i=i, j=j))
                elif i - j < n:
                    rep.tally(uij, uji * QPoly.q_power(2),
                              _witness(la, rule="u_i u_j = q^2 u_j u_i", i=i, j=j))
    rep.elapsed = time.time() - t0
    return rep


def check_h_commute(n, kmax, max_size, shapes=None):
    """Horizontal strip operators commute pairwise."""
    t0 = time.time()
    rep = VerificationReport("hcommute", n, {"kmax": kmax, "max_size": max_size})
    for la in (partitions_up_to(max_size) if shapes is None else shapes):
        v = FockVec.basis(la)
        for a in range(1, kmax + 1):
            for b in range(a + 1, kmax + 1):
                lhs = apply_h(a, n, apply_h(b, n, v))
                rhs = apply_h(b, n, apply_h(a, n, v))
                rep.tally(lhs, rhs, _witness(la, a=a, b=b))
    rep.elapsed = time.time() - t0
    return rep


def check_cauchy(n, amax, bmax, max_size, shapes=None):
    """h_b^perp h_a = sum_i h_i(1, q^2, ..., q^(2n-2)) h_{a-i} h_{b-i}^perp."""
    t0 = time.time()
    rep = VerificationReport(
        "cauchy", n, {"amax": amax, "bmax": bmax, "max_size": max_size})
    for la in (partitions_up_to(max_size) if shapes is None else shapes):
        v = FockVec.basis(la)
        for a in range(amax + 1):
            for b in range(bmax + 1):
                lhs = apply_h_perp(b, n, apply_h(a, n, v))
                rhs = FockVec.zero()
                for i in range(min(a, b) + 1):
                    term = apply_h(a - i, n, apply_h_perp(b - i, n, v))
                    rhs = rhs + term * h_eval_at_q2(i, n)
                rep.tally(lhs, rhs, _witness(la, a=a, b=b))
    rep.elapsed = time.time() - t0
    return rep


def check_heisenberg(n, kmax, max_size, shapes=None):
    """[B_k, B_l] = delta_{k,-l} k [n]_{q^(2|k|)} as operators."""
    t0 = time.time()
    rep = VerificationReport("heisenberg", n, {"kmax": kmax, "max_size": max_size})
    ks = [k for k in range(-kmax, kmax + 1) if k != 0]
    for la in (partitions_up_to(max_size) if shapes is None else shapes):
        v = FockVec.basis(la)
        for k in ks:
            for l in ks:
                lhs = apply_B(k, n, apply_B(l, n, v)) - apply_B(l, n, apply_B(k, n, v))
                if k == -l:
                    rhs = v * heisenberg_scalar(k, n)
                else:
                    rhs = FockVec.zero()
                rep.tally(lhs, rhs, _witness(la, k=k, l=l))
    rep.elapsed = time.time() - t0
    return rep


def check_haction(n, jmax, max_size, shapes=None):
    """Diagonal operators: closed form of (u_i d_i)^j - (d_i u_i)^j and the
    q-integer values of their tail sums along the diagonal line."""
    t0 = time.time()
    rep = VerificationReport("haction", n, {"jmax": jmax, "max_size": max_size})
    for la in (partitions_up_to(max_size) if shapes is None else shapes):
        v = FockVec.basis(la)
        lo, hi = diagonal_window(la, n, 1)
        for j in range(1, jmax + 1):
            for i in range(lo, hi + 1):
                ud, du = v, v
                for _ in range(j):
                    ud = apply_d(i, n, apply_u(i, n, ud))
                    du = apply_u(i, n, apply_d(i, n, du))
                rep.tally(du - ud, apply_diag(i, j, n, v),
                          _witness(la, rule="closed form", i=i, j=j))
            rep.tally(apply_diag_sum_from(lo, j, n, v),
                      v * (-qbracket(n, 2 * j)),
                      _witness(la, rule="full line", j=j))
            for s in ribbon_slots(la, n):
                count = s.spin + 1 if s.kind == "add" else s.spin
                rep.tally(apply_diag_sum_from(s.diagonal, j, n, v),
                          v * (-qbracket(count, 2 * j)),
                          _witness(la, rule=f"tail at {s.kind} slot",
                                   i=s.diagonal, j=j, spin=s.spin))
    rep.elapsed = time.time() - t0
    return rep


CHECKERS = {
    "relations": lambda n, max_size, shapes=None: check_relations(n, max_size, shapes),
    "hcommute": lambda n, max_size, shapes=None: check_h_commute(n, 4, max_size, shapes),
    "cauchy": lambda n, max_size, shapes=None: check_cauchy(n, 4, 4, max_size, shapes),
    "heisenberg": lambda n, max_size, shapes=None: check_heisenberg(n, 3, max_size, shapes),
    "haction": lambda n, max_size, shapes=None: check_haction(n, 2, max_size, shapes),
}


def run_identity(name, n, max_size, shapes=None):
    try:
        checker = CHECKERS[name]
    except KeyError:
        raise ValueError(f"unknown identity {name!r}; pick from {sorted(CHECKERS)}")
    return checker(n, max_size, shapes)


@dataclass
class DimensionReport:
    n: int
    k: int
    max_size: int
    residues: tuple
    basis_size: int
    words: int
    rank: int
    rank_smaller: int
    stable: bool
    specialization_ranks: tuple
    elapsed: float

    def to_json(self):
        return {
            "n": self.n, "k": self.k, "max_size": self.max_size,
            "residues": list(self.residues), "basis_size": self.basis_size,
            "words": self.words, "rank": self.rank,
            "rank_smaller": self.rank_smaller, "stable": self.stable,
            "specialization_ranks": list(self.specialization_ranks),
            "elapsed": round(self.elapsed, 3),
        }

    def summary(self):
        tag = "stable" if self.stable else "UNSTABLE"
        return (f"dim n={self.n} k={self.k} max_size={self.max_size}: "
                f"rank {self.rank} over {self.words} word matrices "
                f"({tag}, smaller cutoff gives {self.rank_smaller}, "
                f"{self.elapsed:.2f}s)")


def _word_matrices(n, k, max_size, residues):
    """Distinct matrices of u-words restricted to the truncated basis.

    Only the domain is cut off; images may outgrow it.  Each matrix is a
    monomial partial map {la: (mu, t)}; q^c multiples are identified by
    shifting the minimum exponent to zero, which is harmless for the rank
    over rational functions in q.
    """
    basis = [la for la in partitions_up_to(max_size)
             if sum(la) % n in residues]
    gens = range(1, k * n + 1)
    ident = {la: (la, 0) for la in basis}
    seen = {_normalize(ident)}
    frontier = [ident]
    length = 0
    while frontier:
        length += 1
        if length > 64:
            raise RuntimeError("word length cap hit; algebra looks infinite here")
        nxt = []
        for mat in frontier:
            for g in gens:
                new = {}
                for la, (mu, t) in mat.items():
                    hit = add_ribbon(mu, g, n)
                    if hit is not None:
                        new[la] = (hit[0], t + hit[1])
                if not new:
                    continue
                key = _normalize(new)
                if key not in seen:
                    seen.add(key)
                    nxt.append(new)
        frontier = nxt
    return basis, sorted(seen)


def _normalize(mat):
    base = min(t for _, t in mat.values())
    return tuple(sorted((la, mu, t - base) for la, (mu, t) in mat.items()))


def _rank_bareiss(rows, ncols):
    """Fraction-free row reduction over integer polynomials in q."""
    rows = [dict(r) for r in rows]
    prev = QPoly.one()
    rank = 0
    for col in range(ncols):
        pivot = None
        for idx in range(rank, len(rows)):
            if rows[idx].get(col):
                pivot = idx
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        p = prow[col]
        for idx in range(rank + 1, len(rows)):
            r = rows[idx]
            f = r.pop(col, None)
            if f is None and not r:
                continue
            new = {}
            for c in set(r) | set(prow):
                if c == col:
                    continue
                val = p * r.get(c, QPoly.zero()) - (f or QPoly.zero()) * prow.get(c, QPoly.zero())
                if val:
                    new[c] = val.divexact(prev)
            rows[idx] = new
        prev = p
        rank += 1
    return rank


def _rank_specialized(rows, ncols, point):
    rows = [{c: Fraction(v.evaluate(point)) for c, v in r.items()} for r in rows]
    rank = 0
    for col in range(ncols):
        pivot = None
        for idx in range(rank, len(rows)):
            if rows[idx].get(col):
                pivot = idx
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        p = prow[col]
        for idx in range(rank + 1, len(rows)):
            f = rows[idx].pop(col, None)
            if not f:
                continue
            r = rows[idx]
            for c, v in prow.items():
                if c == col:
                    continue
                nv = r.get(c, Fraction(0)) - f * v / p
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
        rank += 1
    return rank


def _span_rank(n, k, max_size, residues, points):
    basis, mats = _word_matrices(n, k, max_size, residues)
    coords = {}
    rows = []
    for mat in mats:
        row = {}
        for la, mu, t in mat:
            key = coords.setdefault((la, mu), len(coords))
            row[key] = QPoly.q_power(t)
        rows.append(row)
    spec = tuple(_rank_specialized(rows, len(coords), pt) for pt in points)
    rank = _rank_bareiss(rows, len(coords))
    return len(basis), len(mats), rank, spec


def algebra_dimension(n, k, max_size=None, residues=None, seed=0):
    """Rank of the span of u_1..u_{kn} word matrices on a truncated basis.

    Truncating the Fock space can only collapse words, so the rank grows
    monotonically with the size cutoff and converges to the dimension of the
    algebra the words span.  Without an explicit max_size the cutoff grows
    by n until two consecutive ranks agree; with one, the smaller-cutoff
    rerun reports whether that cutoff was already stable.  Two random
    rational specializations of q guard the symbolic elimination.
    """
    t0 = time.time()
    if residues is None:
        residues = tuple(range(n))
    else:
        residues = tuple(sorted({r % n for r in residues}))
    rng = random.Random(seed)
    points = []
    while len(points) < 2:
        pt = Fraction(rng.randint(2, 97), rng.randint(2, 97))
        if pt != 1 and pt not in points:
            points.append(pt)
    if max_size is not None:
        basis_size, words, rank, spec = _span_rank(n, k, max_size, residues, points)
        _, _, rank_smaller, _ = _span_rank(n, k, max_size - n, residues, points)
        stable = rank == rank_smaller
    else:
        max_size = max(n * (k + 1), n * k * k)
        history = []
        while True:
            basis_size, words, rank, spec = _span_rank(n, k, max_size, residues, points)
            history.append(rank)
            if len(history) >= 3 and history[-1] == history[-2] == history[-3]:
                stable = True
                break
            if max_size > 40 * n:
                stable = False
                break
            max_size += n
        rank_smaller = history[-2] if len(history) > 1 else rank
    return DimensionReport(
        n=n, k=k, max_size=max_size, residues=residues,
        basis_size=basis_size, words=words, rank=rank,
        rank_smaller=rank_smaller, stable=stable,
        specialization_ranks=spec, elapsed=time.time() - t0)
