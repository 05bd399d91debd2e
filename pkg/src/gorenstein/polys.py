"""Exact integer polynomials: univariate ``UniPoly`` and Laurent ``BiPoly`` in (u, v)."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping

NEG_INF = -math.inf


class UniPoly:
    """Immutable integer polynomial in t, coefficients indexed from degree 0."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "UniPoly":
        return cls([0] * k + [c])

    @property
    def degree(self):
        """Degree; the zero polynomial has degree -inf."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def subdegree(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == UniPoly([other]).coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == UniPoly(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly(c * other for c in self.coeffs)
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = UniPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "UniPoly":
        """Multiply by t^k (k >= 0)."""
        return UniPoly([0] * k + list(self.coeffs)) if self.coeffs else self

    def truncate_below(self, bound: Fraction | int) -> "UniPoly":
        """Keep the terms of degree strictly below ``bound``."""
        return UniPoly(c for i, c in enumerate(self.coeffs) if i < bound)

    def reversed(self, n: int) -> "UniPoly":
        """t^n p(1/t); requires n >= degree."""
        if not self.coeffs:
            return self
        if n < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        return UniPoly([self[n - i] for i in range(n + 1)])

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def dominated_by(self, other: "UniPoly") -> bool:
        """Coefficientwise self <= other."""
        n = max(len(self), len(other))
        return all(self[i] <= other[i] for i in range(n))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs, "t")


def _as_poly(x) -> UniPoly:
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, int):
        return UniPoly([x])
    return UniPoly(x)


def format_poly(coeffs, var: str = "t") -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return s


T = UniPoly([0, 1])


class BiPoly:
    """Sparse Laurent polynomial sum c * u^i v^j with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        t = {}
        if terms:
            for k, c in terms.items():
                if c:
                    t[(int(k[0]), int(k[1]))] = int(c)
        object.__setattr__(self, "terms", t)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "BiPoly":
        return cls({(i, j): c})

    @classmethod
    def constant(cls, c: int) -> "BiPoly":
        return cls({(0, 0): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = BiPoly.constant(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return BiPoly({k: c * other for k, c in self.terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def shift(self, di: int, dj: int) -> "BiPoly":
        """Multiply by u^di v^dj."""
        return BiPoly({(i + di, j + dj): c for (i, j), c in self.terms.items()})

    def swap(self) -> "BiPoly":
        """f(v, u)."""
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    def invert(self, u: bool = True, v: bool = True) -> "BiPoly":
        """Substitute u -> 1/u and/or v -> 1/v."""
        return BiPoly({((-i if u else i), (-j if v else j)): c
                       for (i, j), c in self.terms.items()})

    def is_polynomial(self) -> bool:
        return all(i >= 0 and j >= 0 for i, j in self.terms)

    def min_exponents(self) -> tuple[int, int]:
        if not self.terms:
            return (0, 0)
        return (min(i for i, _ in self.terms), min(j for _, j in self.terms))

    @property
    def total_degree(self):
        if not self.terms:
            return NEG_INF
        return max(i + j for i, j in self.terms)

    def coefficient(self, i: int, j: int) -> int:
        return self.terms.get((i, j), 0)

    def __call__(self, u, v):
        return sum(c * _pow(u, i) * _pow(v, j) for (i, j), c in self.terms.items())

    def at_v(self, v: int) -> dict[int, int]:
        """Collapse v to an integer value: returns {u-exponent: coefficient}.

        Only v in {0, 1, -1} are supported for Laurent inputs.
        """
        out: dict[int, int] = {}
        for (i, j), c in self.terms.items():
            if v == 0:
                if j != 0:
                    continue
                w = c
            else:
                w = c * _pow(v, j)
            out[i] = out.get(i, 0) + w
        return {k: c for k, c in out.items() if c}

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """Monomials as (i, j, c) sorted by descending total degree, then i."""
        return sorted(((i, j, c) for (i, j), c in self.terms.items()),
                      key=lambda t: (-(t[0] + t[1]), -t[0], -t[1]))

    def __repr__(self):
        return f"BiPoly({self.sorted_terms()})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, j, c in self.sorted_terms():
            mono = _mono("u", i) + _mono("v", j)
            body = mono if (mono and abs(c) == 1) else f"{abs(c)}{mono}"
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


def _mono(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def _pow(x, e: int):
    if e >= 0:
        return x ** e
    return Fraction(1, 1) / Fraction(x) ** (-e)


U = BiPoly.monomial(1, 0)
V = BiPoly.monomial(0, 1)


def from_unipoly(p: UniPoly, i_step: int, j_step: int) -> BiPoly:
    """Substitute t -> u^i_step v^j_step."""
    return BiPoly({(k * i_step, k * j_step): c for k, c in enumerate(p.coeffs) if c})


def derivative_at_one(coeffs: Mapping[int, int], order: int) -> int:
    """order-th derivative of sum c_k u^k evaluated at u = 1 (Laurent allowed)."""
    total = 0
    for k, c in coeffs.items():
        f = 1
        for s in range(order):
            f *= k - s
        total += c * f
    return total
