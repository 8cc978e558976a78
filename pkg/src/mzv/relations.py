"""Generators of the relation space, with provenance tags.

The central family: for non-empty indices ``mu``, ``nu`` the combination
``refine(signed(stuffle(mu, nu)))`` annihilates the raised zeta functional.
:func:`kawashima_basis` collects one such row per unordered pair of a fixed
total weight.  Reversal--dual differences (:func:`duality_relation`) and
their images under the shift operators (:func:`ohno_relations`) land inside
the same span; the membership certificates produced in the tests make that
containment concrete.

Quadratic counterparts pair two raised evaluations against one: see
:func:`quadratic_relation`, whose terms come from fusing with all-ones tails,
and :func:`newton_series_coefficients` for the underlying one-variable
expansion coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .indices import (
    Combination,
    MultiIndex,
    all_indices,
    as_combination,
    as_index,
    coarsen,
    dual,
    format_combination,
    format_index,
    ones,
    refine,
    reverse,
    signed,
)
from .ohno import ohno_u
from .products import circ, stuffle


@dataclass(frozen=True)
class LinearRelation:
    """A combination annihilated by the raised zeta functional."""

    element: Combination
    provenance: str
    weight: int

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "provenance": self.provenance,
            "terms": [
                {
                    "index": list(mu),
                    "num": Fraction(c).numerator,
                    "den": Fraction(c).denominator,
                }
                for mu, c in self.element.terms()
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "LinearRelation":
        element = Combination(
            (tuple(t["index"]), Fraction(t["num"], t["den"])) for t in data["terms"]
        )
        return LinearRelation(element, data["provenance"], data["weight"])

    def __str__(self) -> str:
        return "%s: %s" % (self.provenance, format_combination(self.element))


@dataclass(frozen=True)
class QuadraticRelation:
    """sum of zeta(left)*zeta(right) over ``factors`` equals zeta(rhs).

    All three combination slots hold arguments for the plain (un-raised)
    strict evaluation; they are already fused with the all-ones tails.
    """

    factors: tuple
    rhs: Combination
    provenance: str
    weight: int

    def __str__(self) -> str:
        lhs = " + ".join(
            "[%s]*[%s]" % (format_combination(a), format_combination(b))
            for a, b in self.factors
        )
        return "%s: %s = %s" % (self.provenance, lhs, format_combination(self.rhs))


def kawashima_element(mu, nu) -> Combination:
    """``refine(signed(stuffle(mu, nu)))`` for non-empty ``mu``, ``nu``."""
    mu, nu = as_index(mu), as_index(nu)
    if not mu or not nu:
        raise ValueError("both indices must be non-empty")
    return refine(signed(stuffle(mu, nu)))


def kawashima_relation(mu, nu) -> LinearRelation:
    mu, nu = as_index(mu), as_index(nu)
    element = kawashima_element(mu, nu)
    tag = "kawashima(%s,%s)" % (format_index(mu), format_index(nu))
    return LinearRelation(element, tag, mu.weight + nu.weight)


def kawashima_basis(weight: int) -> list[LinearRelation]:
    """One relation per unordered pair of non-empty indices of total ``weight``."""
    if weight < 2:
        raise ValueError("weight must be >= 2")
    out = []
    for a in range(1, weight // 2 + 1):
        b = weight - a
        for mu in all_indices(a):
            for nu in all_indices(b):
                if a == b and nu < mu:
                    continue
                out.append(kawashima_relation(mu, nu))
    return out


def duality_element(mu) -> Combination:
    """``reverse(mu) - dual(mu)``."""
    mu = as_index(mu)
    if not mu:
        raise ValueError("the index must be non-empty")
    return Combination.term(reverse(mu)) - Combination.term(dual(mu))


def duality_relation(mu) -> LinearRelation:
    mu = as_index(mu)
    return LinearRelation(duality_element(mu), "duality(%s)" % format_index(mu), mu.weight)


def verify_reversal_telescope(mu) -> bool:
    """The alternating split sum behind the duality containment.

    Splitting ``mu`` after position h, reversing the head, multiplying by
    the coarsening sum of the tail and alternating signs telescopes to zero.
    """
    mu = as_index(mu)
    if not mu:
        raise ValueError("the index must be non-empty")
    total = Combination.zero()
    for h in range(len(mu) + 1):
        head = MultiIndex(mu[:h])
        tail = MultiIndex(mu[h:])
        piece = stuffle(Combination.term(reverse(head)), coarsen(tail))
        total = total + (-1) ** h * piece
    return total.is_zero()


def ohno_relations(weight: int, r_max: int | None = None) -> list[LinearRelation]:
    """Shifted reversal--dual differences of total ``weight``.

    For each shift ``r`` and each index ``mu`` of weight ``weight - r``, the
    element is the shift of :func:`duality_element`; zero elements are
    dropped.  ``r_max`` defaults to ``weight - 2`` (beyond that the base
    index has weight < 2 and everything vanishes).
    """
    if weight < 2:
        raise ValueError("weight must be >= 2")
    if r_max is None:
        r_max = weight - 2
    out = []
    for r in range(0, min(r_max, weight - 2) + 1):
        for mu in all_indices(weight - r):
            element = ohno_u(r, duality_element(mu))
            if element.is_zero():
                continue
            tag = "ohno(%s,%d)" % (format_index(mu), r)
            out.append(LinearRelation(element, tag, weight))
    return out


def quadratic_relation(v, w, m: int) -> QuadraticRelation | LinearRelation:
    """The degree-``m`` product identity between raised evaluations.

    For combinations ``v``, ``w`` (non-empty support) and ``m >= 2``::

        sum_{k+l=m, k,l>=1} zeta(g(v) . ones(k)) * zeta(g(w) . ones(l))
            = zeta(g(stuffle(v, w)) . ones(m))

    where ``g = refine . signed`` and ``.`` fuses with the all-ones tail
    (:func:`~mzv.products.circ`).

    At ``m = 1`` the left side is an empty sum and fusing with a single one
    is just the last-part raise, so the statement collapses to the linear
    kernel statement; a :class:`LinearRelation` is returned instead.
    """
    if m < 1:
        raise ValueError("the degree m must be >= 1")
    v, w = as_combination(v), as_combination(w)
    if m == 1:
        element = refine(signed(stuffle(v, w)))
        tag = "quadratic(%s|%s|1)" % (format_combination(v), format_combination(w))
        return LinearRelation(element, tag, v.homogeneous_weight() + w.homogeneous_weight())
    gv = refine(signed(v))
    gw = refine(signed(w))
    factors = tuple(
        (circ(gv, Combination.term(ones(k))), circ(gw, Combination.term(ones(m - k))))
        for k in range(1, m)
    )
    rhs = circ(refine(signed(stuffle(v, w))), Combination.term(ones(m)))
    tag = "quadratic(%s|%s|%d)" % (format_combination(v), format_combination(w), m)
    weight = v.homogeneous_weight() + w.homogeneous_weight() + m
    return QuadraticRelation(factors, rhs, tag, weight)


def newton_series_coefficients(v, m_max: int) -> list[Combination]:
    """Zeta arguments of the interpolation expansion of the running sums.

    Entry ``m-1`` (for ``m = 1..m_max``) is the combination whose strict
    evaluation is the ``z**m`` coefficient: ``(-1)**(m-1)`` times the
    coarsening sum of the dual fused with ``ones(m)``.
    """
    v = as_combination(v)
    if not v:
        raise ValueError("the combination must be non-zero")
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    base = coarsen(dual(v))
    return [
        (-1) ** (m - 1) * circ(base, Combination.term(ones(m)))
        for m in range(1, m_max + 1)
    ]
