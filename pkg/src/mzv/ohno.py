"""Weight-raising shift operators on multi-index combinations.

For a label ``mu`` with ``p`` parts and an argument ``nu`` with ``q`` parts,
``ohno_apply(mu, nu)`` sums, over all ways to pick ``p`` of the ``q``
positions in increasing order, the index obtained by adding ``mu_1, .., mu_p``
to the chosen parts.  The empty label acts as the identity, any non-empty
label annihilates phi, and everything is extended bilinearly.  Composing two
of these operators multiplies their labels harmonically.

``ohno_bar_apply`` is the same operator conjugated by ``dual``.  For labels
that are the refinement sum of a single part (``refine((r,))``), both
operators admit closed block-splitting formulas -- sums over decompositions
of the argument into consecutive blocks -- which are implemented separately
(`ohno_ones_blocks`, `ohno_u_blocks`, `ohno_bar_u_blocks`,
`shifted_block_sum`) and used to cross-check the generic path.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .indices import (
    PHI,
    Combination,
    MultiIndex,
    as_combination,
    as_index,
    concat,
    dual,
    encode_subset,
    idx,
    merge_concat,
    ones,
    partition,
    raise_last,
    refine,
    refine_inv,
)
from .products import stuffle


@lru_cache(maxsize=None)
def _ohno_pair(label: MultiIndex, nu: MultiIndex) -> Combination:
    if not label:
        return Combination.term(nu)
    if len(label) > len(nu):
        return Combination.zero()
    out = Combination()
    data = out._terms
    for positions in itertools.combinations(range(len(nu)), len(label)):
        parts = list(nu)
        for part, pos in zip(label, positions):
            parts[pos] += part
        key = MultiIndex(parts)
        data[key] = data.get(key, 0) + 1
    return out


def ohno_apply(label, x) -> Combination:
    """Add the label's parts at increasing positions, all ways; bilinear."""
    label, x = as_combination(label), as_combination(x)
    out = Combination.zero()
    for lmu, c in label.terms():
        for nu, d in x.terms():
            out = out + (c * d) * _ohno_pair(lmu, nu)
    return out


def ohno_bar_apply(label, x) -> Combination:
    """The shift operator conjugated by ``dual`` (label untouched)."""
    return dual(ohno_apply(label, dual(x)))


def ohno_u(r: int, x) -> Combination:
    """Apply the operator labelled by all refinements of the one-part index (r).

    ``r = 0`` is the identity.
    """
    if r < 0:
        raise ValueError("the shift amount must be >= 0")
    return ohno_apply(refine(idx(r)) if r else Combination.term(PHI), x)


def ohno_bar_u(r: int, x) -> Combination:
    """Dual-conjugated :func:`ohno_u`."""
    if r < 0:
        raise ValueError("the shift amount must be >= 0")
    return dual(ohno_u(r, dual(x)))


# ---------------------------------------------------------------------------
# block-splitting formulas
#
# Splitting an index into r+1 consecutive blocks comes in two flavours.
# List splits cut only between parts; they realise plain concatenation.
# Weight splits may also cut inside a part (the two halves are then fused by
# merge_concat when reassembling); a block may be empty.  Each formula below
# prescribes which blocks may be empty and how the blocks are reassembled.


def _list_splits(q: int, r: int, allow_empty_init: bool, allow_empty_last: bool):
    """Positions 0..q splitting a q-part list into r+1 consecutive blocks."""
    if allow_empty_init:
        pool = range(0, q if not allow_empty_last else q + 1)
        return itertools.combinations_with_replacement(pool, r)
    pool = range(1, q + 1 if allow_empty_last else q)
    return itertools.combinations(pool, r)


def ohno_ones_blocks(r: int, mu) -> Combination:
    """Block formula for the label ``ones(r)``.

    Cut the part list into blocks ``b0 # b1 # .. # br`` with ``b0..b(r-1)``
    non-empty; each term glues ``b0, (1)#b1, .., (1)#br`` by merge_concat.
    """
    mu = as_index(mu)
    if r < 0:
        raise ValueError("the shift amount must be >= 0")
    if not mu:
        return Combination.zero() if r else Combination.term(PHI)
    q = len(mu)
    out = Combination.zero()
    for cuts in _list_splits(q, r, allow_empty_init=False, allow_empty_last=True):
        bounds = (0,) + cuts + (q,)
        blocks = [MultiIndex(mu[a:b]) for a, b in zip(bounds, bounds[1:])]
        term = as_combination(blocks[0])
        for block in blocks[1:]:
            term = merge_concat(term, concat(idx(1), block))
        out = out + term
    return out


def ohno_u_blocks(r: int, mu) -> Combination:
    """Block formula for the label ``refine((r,))``.

    Cut the part list into blocks, the first ``r`` possibly empty and the
    last non-empty; each term glues ``b0#(1), .., b(r-1)#(1), br`` by
    merge_concat.
    """
    mu = as_index(mu)
    if r < 0:
        raise ValueError("the shift amount must be >= 0")
    if not mu:
        return Combination.zero() if r else Combination.term(PHI)
    if r == 0:
        return Combination.term(mu)
    q = len(mu)
    out = Combination.zero()
    for cuts in _list_splits(q, r, allow_empty_init=True, allow_empty_last=False):
        bounds = (0,) + cuts + (q,)
        blocks = [MultiIndex(mu[a:b]) for a, b in zip(bounds, bounds[1:])]
        term = as_combination(concat(blocks[0], idx(1)))
        for block in blocks[1:-1]:
            term = merge_concat(term, concat(block, idx(1)))
        term = merge_concat(term, blocks[-1])
        out = out + term
    return out


def _nonboundary_cut_positions(mu: MultiIndex) -> list[int]:
    """0 and the weight positions strictly inside a part of ``mu``."""
    marks = encode_subset(mu).marks
    return [0] + [c for c in range(1, mu.weight) if c not in marks]


def ohno_bar_u_blocks(r: int, mu) -> Combination:
    """Dual-side block formula for the label ``refine((r,))``.

    Cut the weight at positions away from the part boundaries (repeats give
    empty blocks), keep the final block non-empty, raise the last part of
    every other block, and concatenate.
    """
    mu = as_index(mu)
    if r < 0:
        raise ValueError("the shift amount must be >= 0")
    if not mu:
        return Combination.zero() if r else Combination.term(PHI)
    positions = _nonboundary_cut_positions(mu)
    out = Combination.zero()
    for cuts in itertools.combinations_with_replacement(positions, r):
        bounds = (0,) + cuts + (mu.weight,)
        blocks = partition(mu, [b - a for a, b in zip(bounds, bounds[1:])])
        term = as_combination(raise_last(blocks[0])) if r else as_combination(blocks[0])
        for block in blocks[1:-1]:
            term = concat(term, raise_last(block))
        if r:
            term = concat(term, blocks[-1])
        out = out + term
    return out


def shifted_block_sum(r: int, mu) -> Combination:
    """Weight-split formula for ``refine_inv . mult(ones(r)) . refine``.

    Like :func:`ohno_bar_u_blocks` but the weight may be cut anywhere
    (including part boundaries and the very end, so the final block may be
    empty too).
    """
    mu = as_index(mu)
    if r < 0:
        raise ValueError("the shift amount must be >= 0")
    if not mu:
        return Combination.zero() if r else Combination.term(PHI)
    out = Combination.zero()
    for cuts in itertools.combinations_with_replacement(range(0, mu.weight + 1), r):
        bounds = (0,) + cuts + (mu.weight,)
        blocks = partition(mu, [b - a for a, b in zip(bounds, bounds[1:])])
        term = as_combination(raise_last(blocks[0])) if r else as_combination(blocks[0])
        for block in blocks[1:-1]:
            term = concat(term, raise_last(block))
        if r:
            term = concat(term, blocks[-1])
        out = out + term
    return out


def conjugated_ones_multiplier(r: int, x) -> Combination:
    """``refine_inv(stuffle(ones(r), refine(x)))``, the operator the block
    sums above decompose."""
    if r < 0:
        raise ValueError("the shift amount must be >= 0")
    return refine_inv(stuffle(Combination.term(ones(r)), refine(x)))


def verify_shift_factorization(r: int, mu) -> bool:
    """Check the three faces of the shifted-multiplication identity.

    The conjugated multiplier, its expansion through the shift operators,
    and the direct weight-split sum must agree.
    """
    mu = as_index(mu)
    lhs = conjugated_ones_multiplier(r, mu)
    middle = Combination.zero()
    for k in range(r + 1):
        middle = middle + ohno_bar_u(r - k, ohno_apply(Combination.term(ones(k)), mu))
    rhs = shifted_block_sum(r, mu)
    return lhs == middle == rhs


def verify_alternating_shift_sum(r: int, mu) -> bool:
    """Check the alternating resummation of the conjugated multipliers.

    ``sum((-1)**k * conjugated_ones_multiplier(r-k, ohno_u(k, mu)))`` must
    equal ``ohno_bar_u(r, mu)``.
    """
    mu = as_index(mu)
    total = Combination.zero()
    for k in range(r + 1):
        total = total + (-1) ** k * conjugated_ones_multiplier(r - k, ohno_u(k, mu))
    return total == ohno_bar_u(r, mu)
