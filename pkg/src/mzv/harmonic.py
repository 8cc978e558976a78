"""Exact finite harmonic sums and their difference calculus.

For a multi-index ``mu = (mu_1, .., mu_p)`` the building blocks are

* ``seq_s``: chains ``0 <= n_1 <= .. <= n_p = n``, factor ``1/(n_i+1)**mu_i``,
* ``seq_a``: the same with strict inequalities ``n_1 < .. < n_p = n``,
* ``seq_S`` / ``seq_A``: their running sums over ``n' < n`` (1 for phi),

all with exact ``Fraction`` values on ``0..horizon`` and extended linearly to
combinations.  :class:`RationalSequence` carries the finite-difference
toolkit: ``delta`` (forward difference ``a(n) - a(n+1)``), ``shift``, and the
binomial transform ``nabla``, which is an involution interchanging rows and
columns of the difference table.

``seq_s2`` evaluates the two-parameter normalised sum attached to a pair of
equal-weight indices: both chains are run simultaneously, each of the
``m = |mu| = |nu|`` factors couples one entry of the first chain with one of
the second (entry ``i`` is used ``mu_i`` times, entry ``j`` is used ``nu_j``
times, both in increasing order), and the total is divided by the binomial
coefficient ``C(n+k, n)``.  Specialising either argument to 0 recovers
``seq_s`` of the other index.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .indices import MultiIndex, as_combination, as_index

ZERO = Fraction(0)
ONE = Fraction(1)


class RationalSequence:
    """Exact values ``a(0), .., a(horizon)`` with pointwise arithmetic."""

    __slots__ = ("values",)

    def __init__(self, values):
        self.values = tuple(Fraction(v) for v in values)
        if not self.values:
            raise ValueError("a sequence needs at least the value at 0")

    @classmethod
    def constant(cls, value, horizon: int) -> "RationalSequence":
        return cls([Fraction(value)] * (horizon + 1))

    @property
    def horizon(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalSequence) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        shown = ", ".join(str(v) for v in self.values[:6])
        more = ", .." if len(self.values) > 6 else ""
        return "RationalSequence([%s%s])" % (shown, more)

    def _pointwise(self, other, op):
        if isinstance(other, RationalSequence):
            n = min(len(self.values), len(other.values))
            return RationalSequence(op(a, b) for a, b in zip(self.values[:n], other.values[:n]))
        other = Fraction(other)
        return RationalSequence(op(a, other) for a in self.values)

    def __add__(self, other):
        return self._pointwise(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._pointwise(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._pointwise(other, lambda a, b: a * b)

    __radd__ = __add__
    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "RationalSequence":
        """Drop the first ``k`` values: n -> a(n+k)."""
        if k < 0 or k > self.horizon:
            raise ValueError("cannot shift past the horizon")
        return RationalSequence(self.values[k:])

    def delta(self, k: int = 1) -> "RationalSequence":
        """The k-fold difference n -> a(n) - a(n+1); horizon shrinks by k."""
        if k < 0 or k > self.horizon:
            raise ValueError("cannot difference past the horizon")
        vals = self.values
        for _ in range(k):
            vals = tuple(a - b for a, b in zip(vals, vals[1:]))
        return RationalSequence(vals)

    def nabla(self) -> "RationalSequence":
        """Binomial transform n -> sum((-1)**k C(n,k) a(k), k=0..n)."""
        return RationalSequence(
            sum((-1) ** k * comb(n, k) * self.values[k] for k in range(n + 1))
            for n in range(len(self.values))
        )


@lru_cache(maxsize=None)
def _chain_values(mu: MultiIndex, horizon: int, strict: bool) -> tuple:
    """Values of the chain sum for a bare index on 0..horizon."""
    if not mu:
        return (ONE,) * (horizon + 1)
    level = [ONE] * (horizon + 1)
    for depth, part in enumerate(mu):
        if depth == 0:
            level = [Fraction(1, (i + 1) ** part) for i in range(horizon + 1)]
            continue
        if strict:
            acc = ZERO
            nxt = []
            for i in range(horizon + 1):
                nxt.append(acc / (i + 1) ** part)
                acc += level[i]
        else:
            acc = ZERO
            nxt = []
            for i in range(horizon + 1):
                acc += level[i]
                nxt.append(acc / (i + 1) ** part)
        level = nxt
    return tuple(level)


def _linear_sequence(x, horizon: int, basis) -> RationalSequence:
    x = as_combination(x)
    totals = [ZERO] * (horizon + 1)
    for mu, c in x.terms():
        vals = basis(mu, horizon)
        for i in range(horizon + 1):
            totals[i] += c * vals[i]
    return RationalSequence(totals)


def seq_s(x, horizon: int) -> RationalSequence:
    """Weak-chain sums on ``0..horizon``, linear in ``x``; 1 for phi."""
    return _linear_sequence(x, horizon, lambda mu, h: _chain_values(mu, h, False))


def seq_a(x, horizon: int) -> RationalSequence:
    """Strict-chain sums on ``0..horizon``, linear in ``x``; 1 for phi."""
    return _linear_sequence(x, horizon, lambda mu, h: _chain_values(mu, h, True))


def _running(vals: tuple) -> tuple:
    out = [ZERO]
    for v in vals[:-1]:
        out.append(out[-1] + v)
    return tuple(out)


def seq_S(x, horizon: int) -> RationalSequence:
    """Running sums ``n -> sum(seq_s(x)(i), i < n)``; constant 1 for phi."""
    def basis(mu, h):
        if not mu:
            return (ONE,) * (h + 1)
        return _running(_chain_values(mu, h, False))

    return _linear_sequence(x, horizon, basis)


def seq_A(x, horizon: int) -> RationalSequence:
    """Running sums ``n -> sum(seq_a(x)(i), i < n)``; constant 1 for phi."""
    def basis(mu, h):
        if not mu:
            return (ONE,) * (h + 1)
        return _running(_chain_values(mu, h, True))

    return _linear_sequence(x, horizon, basis)


# ---------------------------------------------------------------------------
# the two-parameter sums


def _step_labels(mu: MultiIndex) -> list[int]:
    out = []
    for i, part in enumerate(mu):
        out.extend([i] * part)
    return out


def seq_s2(mu, nu, n: int, k: int) -> Fraction:
    """The normalised two-chain sum for equal-weight indices ``mu``, ``nu``.

    Runs a joint chain DP: state (a, b) holds the current entries of the two
    chains, each factor contributes 1/(a+b+1), and a chain entry advances
    exactly where its index prescribes.
    """
    mu, nu = as_index(mu), as_index(nu)
    if not mu or not nu:
        raise ValueError("the two-parameter sum needs non-empty indices")
    if mu.weight != nu.weight:
        raise ValueError("indices must have equal weight")
    if n < 0 or k < 0:
        raise ValueError("arguments must be non-negative")
    left = _step_labels(mu)
    right = _step_labels(nu)
    m = mu.weight
    # grid[a][b]: sum over admissible earlier chain entries, factors consumed
    grid = [[Fraction(1, a + b + 1) for b in range(k + 1)] for a in range(n + 1)]
    for t in range(1, m):
        advance_left = left[t] != left[t - 1]
        advance_right = right[t] != right[t - 1]
        if advance_left:
            for b in range(k + 1):
                acc = ZERO
                for a in range(n + 1):
                    acc += grid[a][b]
                    grid[a][b] = acc
        if advance_right:
            for a in range(n + 1):
                acc = ZERO
                row = grid[a]
                for b in range(k + 1):
                    acc += row[b]
                    row[b] = acc
        for a in range(n + 1):
            row = grid[a]
            for b in range(k + 1):
                row[b] /= a + b + 1
    return grid[n][k] / comb(n + k, n)
