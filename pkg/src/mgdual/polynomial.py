"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatch, NotHomogeneous
from .grading import Grading, degree_of


class Polynomial:
    """A polynomial as a map from exponent tuples to nonzero ``Fraction`` coefficients.

    Instances are treated as immutable: arithmetic returns new objects.
    """

    __slots__ = ("grading", "terms")

    def __init__(self, grading: Grading, terms=None):
        self.grading = grading
        clean = {}
        n = grading.nvars
        for alpha, c in (terms or {}).items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != n or min(alpha, default=0) < 0:
                raise DimensionMismatch(f"bad exponent vector {alpha} for {n} variables")
            c = Fraction(c)
            if c:
                clean[alpha] = clean.get(alpha, 0) + c
                if not clean[alpha]:
                    del clean[alpha]
        self.terms = clean

    @classmethod
    def constant(cls, grading, c):
        return cls(grading, {(0,) * grading.nvars: c})

    @classmethod
    def variable(cls, grading, i):
        alpha = [0] * grading.nvars
        alpha[i] = 1
        return cls(grading, {tuple(alpha): 1})

    @classmethod
    def monomial(cls, grading, alpha, c=1):
        return cls(grading, {tuple(alpha): c})

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.grading.nvars != self.grading.nvars:
                raise DimensionMismatch("polynomials live in different rings")
            return other
        return Polynomial.constant(self.grading, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for a, c in other.terms.items():
            terms[a] = terms.get(a, 0) + c
        return Polynomial(self.grading, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.grading, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        terms = {}
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                e = tuple(x + y for x, y in zip(a, b))
                terms[e] = terms.get(e, 0) + c * d
        return Polynomial(self.grading, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        out = Polynomial.constant(self.grading, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms and self.grading.nvars == other.grading.nvars
        if not self.terms:
            return other == 0
        return False

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, alpha):
        return self.terms.get(tuple(alpha), Fraction(0))

    def term_degrees(self) -> list:
        return sorted({degree_of(self.grading, a) for a in self.terms})

    def is_homogeneous(self) -> bool:
        return len(self.term_degrees()) <= 1

    @property
    def degree(self) -> tuple:
        """Multidegree of a nonzero homogeneous polynomial."""
        degs = self.term_degrees()
        if len(degs) != 1:
            raise NotHomogeneous(f"{self} is not homogeneous (term degrees {degs})" if degs else "zero polynomial has no degree")
        return degs[0]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for alpha, c in self.sorted_terms():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(self.grading.var_names, alpha) if e
            )
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Polynomial({self})"
