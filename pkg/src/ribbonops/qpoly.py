"""Sparse integer polynomials in the variable q.

A QPoly is a map {exponent: coefficient} with int entries and no explicit
zeros.  Instances are treated as immutable values: every arithmetic
operation returns a fresh QPoly, and hashing is allowed.  Exponents may be
any integers, although every quantity produced by this library (spin
weights, Heisenberg scalars) has nonnegative exponents.
"""

from __future__ import annotations

from fractions import Fraction


class QPoly:
    def __init__(self, coeffs=None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def q_power(cls, e, c=1):
        """c * q^e."""
        return cls({e: c})

    @classmethod
    def from_pairs(cls, pairs):
        p = cls()
        for e, c in pairs:
            p.coeffs[e] = p.coeffs.get(e, 0) + c
        p.coeffs = {e: c for e, c in p.coeffs.items() if c}
        return p

    def to_pairs(self):
        """[[exponent, coefficient], ...] sorted by exponent."""
        return [[e, self.coeffs[e]] for e in sorted(self.coeffs)]

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            nc = out.get(e, 0) + c
            if nc:
                out[e] = nc
            else:
                del out[e]
        p = QPoly()
        p.coeffs = out
        return p

    __radd__ = __add__

    def __neg__(self):
        return QPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return QPoly()
            return QPoly({e: c * other for e, c in self.coeffs.items()})
        if not isinstance(other, QPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                nc = out.get(e, 0) + c1 * c2
                if nc:
                    out[e] = nc
                else:
                    del out[e]
        p = QPoly()
        p.coeffs = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = QPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def shifted(self, e):
        """Multiply by q^e without a general product."""
        if not e:
            return self
        return QPoly({k + e: c for k, c in self.coeffs.items()})

    def degree(self):
        """Largest exponent; -1 on the zero polynomial (matching list length conventions)."""
        return max(self.coeffs, default=-1)

    def leading(self):
        """(exponent, coefficient) of the top term."""
        e = max(self.coeffs)
        return e, self.coeffs[e]

    def divexact(self, other):
        """Quotient self/other when the division is exact in Z[q]; raises otherwise."""
        if not other:
            raise ZeroDivisionError("QPoly division by zero")
        rem = dict(self.coeffs)
        de, dc = other.leading()
        quo = {}
        while rem:
            e = max(rem)
            c = rem[e]
            if e < de or c % dc:
                raise ValueError("inexact QPoly division")
            qe, qc = e - de, c // dc
            quo[qe] = qc
            for oe, oc in other.coeffs.items():
                k = oe + qe
                nc = rem.get(k, 0) - oc * qc
                if nc:
                    rem[k] = nc
                else:
                    rem.pop(k, None)
        p = QPoly()
        p.coeffs = quo
        return p

    def evaluate(self, x):
        """Value at x, exact when x is an int or Fraction."""
        if not isinstance(x, (int, Fraction)):
            raise TypeError("evaluate wants an int or Fraction")
        return sum((c * Fraction(x) ** e for e, c in self.coeffs.items()), Fraction(0))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                body = str(abs(c))
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if abs(c) == 1 else f"{abs(c)}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"QPoly({self.coeffs!r})"


def qbracket(count, step=1):
    """1 + q^step + q^(2 step) + ... with `count` terms."""
    return QPoly({i * step: 1 for i in range(count)})
