"""The harmonic product of multi-indices and its relatives.

``stuffle(x, y)`` is the commutative product obtained by interleaving the two
part lists while optionally adding one part of each side; ``stuffle_bar`` is
the variant where every term additionally carries the sign
``(-1)**(len(mu) + len(nu) - len(term))``, so merged parts flip sign.  Both
are computed by a cached recursion on the last parts; an independent oracle
(:func:`enumerate_stuffle`, which lists the two-row interleaving matrices) is
kept around for cross-checking.

``circ``/``circ_bar`` fuse the last parts after multiplying the rest:
``circ(mu, nu) = concat(stuffle(mu', nu'), (a+b,))`` where ``a``, ``b`` are
the last parts and the primes drop them.  These are the products satisfied by
the single-step tails of the finite harmonic sums, hence their role next to
the full products of the running sums.
"""

from __future__ import annotations

from functools import lru_cache

from .indices import PHI, Combination, MultiIndex, as_combination, as_index


class StuffleMatrix:
    """A two-row interleaving pattern: columns are (top, bottom) pairs.

    No column is (0, 0); deleting zeros from the top row recovers the left
    factor and from the bottom row the right factor.  The product term of the
    matrix is the tuple of column sums.
    """

    __slots__ = ("columns",)

    def __init__(self, columns):
        self.columns = tuple((int(a), int(b)) for a, b in columns)
        if any(a == 0 and b == 0 for a, b in self.columns):
            raise ValueError("a stuffle matrix has no zero column")

    @property
    def width(self) -> int:
        return len(self.columns)

    def top(self) -> MultiIndex:
        return MultiIndex(a for a, _ in self.columns if a)

    def bottom(self) -> MultiIndex:
        return MultiIndex(b for _, b in self.columns if b)

    def term(self) -> MultiIndex:
        return MultiIndex(a + b for a, b in self.columns)

    def __eq__(self, other):
        return isinstance(other, StuffleMatrix) and self.columns == other.columns

    def __hash__(self):
        return hash(self.columns)

    def __repr__(self):
        return "StuffleMatrix(%r)" % (list(self.columns),)


def enumerate_stuffle(mu, nu) -> list[StuffleMatrix]:
    """All interleaving matrices with top row ``mu`` and bottom row ``nu``.

    The count is the Delannoy-style number D(len(mu), len(nu)); this is the
    slow reference path for the products below.
    """
    mu, nu = as_index(mu), as_index(nu)

    def rec(i, j):
        # matrices using mu[:i] and nu[:j], built right-to-left
        if i == 0 and j == 0:
            return [()]
        out = []
        if i > 0:
            out += [cols + ((mu[i - 1], 0),) for cols in rec(i - 1, j)]
        if j > 0:
            out += [cols + ((0, nu[j - 1]),) for cols in rec(i, j - 1)]
        if i > 0 and j > 0:
            out += [cols + ((mu[i - 1], nu[j - 1]),) for cols in rec(i - 1, j - 1)]
        return out

    return [StuffleMatrix(cols) for cols in rec(len(mu), len(nu))]


def stuffle_via_matrices(mu, nu) -> Combination:
    """Reference implementation of :func:`stuffle` on two bare indices."""
    return Combination((h.term(), 1) for h in enumerate_stuffle(mu, nu))


def stuffle_bar_via_matrices(mu, nu) -> Combination:
    """Reference implementation of :func:`stuffle_bar` on two bare indices."""
    mu, nu = as_index(mu), as_index(nu)
    total = len(mu) + len(nu)
    return Combination(
        (h.term(), (-1) ** (total - h.width)) for h in enumerate_stuffle(mu, nu)
    )


def _concat_last(comb: Combination, part: int) -> dict:
    return {MultiIndex(mu + (part,)): c for mu, c in comb._terms.items()}


def _merge_dicts(*dicts) -> Combination:
    out = Combination()
    data = out._terms
    for d in dicts:
        for key, c in d.items():
            e = data.get(key, 0) + c
            if e:
                data[key] = e
            elif key in data:
                del data[key]
    return out


@lru_cache(maxsize=None)
def _stuffle(mu: MultiIndex, nu: MultiIndex) -> Combination:
    if not mu:
        return Combination.term(nu)
    if not nu:
        return Combination.term(mu)
    if nu < mu:
        mu, nu = nu, mu
    a, b = mu[-1], nu[-1]
    mu0, nu0 = MultiIndex(mu[:-1]), MultiIndex(nu[:-1])
    return _merge_dicts(
        _concat_last(_stuffle(mu0, nu), a),
        _concat_last(_stuffle(mu, nu0), b),
        _concat_last(_stuffle(mu0, nu0), a + b),
    )


@lru_cache(maxsize=None)
def _stuffle_bar(mu: MultiIndex, nu: MultiIndex) -> Combination:
    if not mu:
        return Combination.term(nu)
    if not nu:
        return Combination.term(mu)
    if nu < mu:
        mu, nu = nu, mu
    a, b = mu[-1], nu[-1]
    mu0, nu0 = MultiIndex(mu[:-1]), MultiIndex(nu[:-1])
    merged = _concat_last(_stuffle_bar(mu0, nu0), a + b)
    return _merge_dicts(
        _concat_last(_stuffle_bar(mu0, nu), a),
        _concat_last(_stuffle_bar(mu, nu0), b),
        {key: -c for key, c in merged.items()},
    )


def _bilinear(pairfn, x, y) -> Combination:
    x, y = as_combination(x), as_combination(y)
    out = Combination()
    data = out._terms
    for mu, c in x._terms.items():
        for nu, d in y._terms.items():
            cd = c * d
            for key, e in pairfn(mu, nu)._terms.items():
                f = data.get(key, 0) + cd * e
                if f:
                    data[key] = f
                elif key in data:
                    del data[key]
    return out


def stuffle(x, y) -> Combination:
    """The harmonic product, extended bilinearly; phi is the unit.

    >>> stuffle((1,), (1,))
    2*(1,1) + (2)
    """
    return _bilinear(_stuffle, x, y)


def stuffle_bar(x, y) -> Combination:
    """The signed harmonic product (merged parts count negatively).

    >>> stuffle_bar((1,), (1,))
    2*(1,1) - (2)
    """
    return _bilinear(_stuffle_bar, x, y)


def _circ_pair(mu: MultiIndex, nu: MultiIndex) -> Combination:
    if not mu or not nu:
        raise ValueError("circ requires non-empty indices")
    a, b = mu[-1], nu[-1]
    head = _stuffle(MultiIndex(mu[:-1]), MultiIndex(nu[:-1]))
    return Combination(_concat_last(head, a + b))


def _circ_bar_pair(mu: MultiIndex, nu: MultiIndex) -> Combination:
    if not mu or not nu:
        raise ValueError("circ_bar requires non-empty indices")
    a, b = mu[-1], nu[-1]
    head = _stuffle_bar(MultiIndex(mu[:-1]), MultiIndex(nu[:-1]))
    return Combination(_concat_last(head, a + b))


def circ(x, y) -> Combination:
    """Multiply all but the last parts, then fuse the last parts.

    Every index in the support of both arguments must be non-empty.

    >>> circ((2,), (2,))
    (4)
    >>> circ((1,), (1, 1))
    (1,2)
    """
    return _bilinear(_circ_pair, x, y)


def circ_bar(x, y) -> Combination:
    """Signed variant of :func:`circ`, built on :func:`stuffle_bar`."""
    return _bilinear(_circ_bar_pair, x, y)


def mult_by(v):
    """The linear map 'harmonic product with ``v``'."""
    v = as_combination(v)
    return lambda x: stuffle(v, x)


def stuffle_cache_clear() -> None:
    """Drop the memoised pair products (mainly for benchmarks)."""
    _stuffle.cache_clear()
    _stuffle_bar.cache_clear()
