"""Eulerian posets and their g- and h-polynomials.

Elements are integers 0..n-1. The order is stored as bitmasks: ``down[x]``
has bit y set iff y <= x. Intervals are therefore cheap masks, and the
g/h recursion is memoized per (bottom, top, dualized) triple.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from gorenstein.errors import NotComparable, NotEulerian, TheoremViolation
from gorenstein.polys import UniPoly

ONE = UniPoly([1])
T_MINUS_1 = UniPoly([-1, 1])
ONE_MINUS_T = UniPoly([1, -1])


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class EulerianPoset:
    """A finite graded poset with 0̂ and 1̂, plus g/h-polynomial evaluation.

    ``ranks[x]`` is the rank of element x; ``down[x]`` is the bitmask of
    elements below or equal to x. The poset is assumed bounded; call
    ``check_eulerian`` before trusting the polynomials.
    """

    def __init__(self, ranks: Sequence[int], down: Sequence[int]):
        self.ranks = list(ranks)
        self.down = list(down)
        n = len(self.ranks)
        up = [0] * n
        for x in range(n):
            for y in _bits(self.down[x]):
                up[y] |= 1 << x
        self.up = up
        self.bottom = min(range(n), key=lambda x: (self.ranks[x], x))
        self.top = max(range(n), key=lambda x: (self.ranks[x], -x))
        full = (1 << n) - 1
        if self.up[self.bottom] != full or self.down[self.top] != full:
            raise NotEulerian("poset is not bounded")
        self._even = sum(1 << x for x in range(n) if self.ranks[x] % 2 == 0)
        self._memo: dict[tuple[int, int, bool], tuple[UniPoly, UniPoly]] = {}

    @classmethod
    def from_relation(cls, ranks: Sequence[int], leq) -> "EulerianPoset":
        n = len(ranks)
        down = [sum(1 << y for y in range(n) if leq(y, x)) for x in range(n)]
        return cls(ranks, down)

    def __len__(self):
        return len(self.ranks)

    @property
    def rank(self) -> int:
        return self.ranks[self.top] - self.ranks[self.bottom]

    def leq(self, x: int, y: int) -> bool:
        return bool(self.down[y] >> x & 1)

    def interval_mask(self, lo: int, hi: int) -> int:
        return self.up[lo] & self.down[hi]

    def interval(self, lo: int, hi: int, dualize: bool = False) -> "EulerianPoset":
        """The interval [lo, hi] as a poset of its own, order-reversed if asked."""
        if not self.leq(lo, hi):
            raise NotComparable(f"{lo} is not below {hi}")
        elems = list(_bits(self.interval_mask(lo, hi)))
        pos = {x: i for i, x in enumerate(elems)}
        base = self.ranks[lo]
        if dualize:
            ranks = [self.ranks[hi] - self.ranks[x] for x in elems]
            down = [sum(1 << pos[y] for y in _bits(self.up[x] & self.down[hi])) for x in elems]
        else:
            ranks = [self.ranks[x] - base for x in elems]
            down = [sum(1 << pos[y] for y in _bits(self.down[x] & self.up[lo])) for x in elems]
        return EulerianPoset(ranks, down)

    def dual(self) -> "EulerianPoset":
        return self.interval(self.bottom, self.top, dualize=True)

    def product(self, other: "EulerianPoset") -> "EulerianPoset":
        n, m = len(self), len(other)
        ranks = [self.ranks[a] + other.ranks[b] for a in range(n) for b in range(m)]
        down = []
        for a in range(n):
            for b in range(m):
                mask = 0
                for a2 in _bits(self.down[a]):
                    for b2 in _bits(other.down[b]):
                        mask |= 1 << (a2 * m + b2)
                down.append(mask)
        return EulerianPoset(ranks, down)

    # --- Eulerian property ----------------------------------------------------

    def check_eulerian(self) -> None:
        """Raise NotEulerian unless every interval of positive rank is balanced."""
        n = len(self)
        even = self._even
        for x in range(n):
            upx = self.up[x]
            for y in _bits(upx):
                if y == x:
                    continue
                m = upx & self.down[y]
                e = (m & even).bit_count()
                if 2 * e != m.bit_count():
                    raise NotEulerian(f"interval [{x}, {y}] is not balanced")

    def is_eulerian(self) -> bool:
        try:
            self.check_eulerian()
        except NotEulerian:
            return False
        return True

    # --- g and h ----------------------------------------------------------------

    def gh(self, lo: int | None = None, hi: int | None = None,
           dual: bool = False) -> tuple[UniPoly, UniPoly]:
        """(h, g) of the interval [lo, hi], or of its order dual."""
        lo = self.bottom if lo is None else lo
        hi = self.top if hi is None else hi
        key = (lo, hi, dual)
        got = self._memo.get(key)
        if got is not None:
            return got
        e = self.ranks[hi] - self.ranks[lo]
        if e == 0:
            out = (ONE, ONE)
        else:
            h = UniPoly()
            if not dual:
                base = self.ranks[lo]
                for x in _bits(self.interval_mask(lo, hi) & ~(1 << lo)):
                    g = self.gh(x, hi, False)[1]
                    h = h + (T_MINUS_1 ** (self.ranks[x] - base - 1)) * g
            else:
                # dual interval: bottom is hi, rank*(x) = rank(hi) - rank(x)
                top = self.ranks[hi]
                for x in _bits(self.interval_mask(lo, hi) & ~(1 << hi)):
                    g = self.gh(lo, x, True)[1]
                    h = h + (T_MINUS_1 ** (top - self.ranks[x] - 1)) * g
            g = (ONE_MINUS_T * h).truncate_below(e / 2)
            if h.degree != e - 1 or (not g.is_zero() and 2 * g.degree > e - 1):
                raise TheoremViolation(
                    f"degree bound failed on interval ({lo}, {hi}, dual={dual})",
                    module="poset-polys")
            out = (h, g)
        self._memo[key] = out
        return out

    def g(self, lo: int | None = None, hi: int | None = None, dual: bool = False) -> UniPoly:
        return self.gh(lo, hi, dual)[1]

    def h(self, lo: int | None = None, hi: int | None = None, dual: bool = False) -> UniPoly:
        return self.gh(lo, hi, dual)[0]

    def convolution(self, lo: int, hi: int, mirrored: bool = False) -> UniPoly:
        """Left side of Stanley's convolution identity on [lo, hi] (zero when e > 0)."""
        out = UniPoly()
        for x in _bits(self.interval_mask(lo, hi)):
            if not mirrored:
                sign = (-1) ** (self.ranks[hi] - self.ranks[x])
                out = out + self.g(lo, x) * self.g(x, hi, True) * sign
            else:
                sign = (-1) ** (self.ranks[x] - self.ranks[lo])
                out = out + self.g(lo, x, True) * self.g(x, hi) * sign
        return out


def gh_poly(poset: EulerianPoset) -> tuple[UniPoly, UniPoly]:
    """(h, g) of an Eulerian poset, after checking the Eulerian property."""
    poset.check_eulerian()
    return poset.gh()


def boolean_lattice(k: int) -> EulerianPoset:
    """Subsets of a k-set ordered by inclusion (rank k)."""
    n = 1 << k
    return EulerianPoset([bin(s).count("1") for s in range(n)],
                         [sum(1 << t for t in range(n) if t & s == t) for s in range(n)])
