"""Deterministic 64-bit stream generator and random monomial ideals.

The generator is a counter-based mixer: every draw advances the state by
a fixed odd constant and scrambles it through three xor-multiply rounds.
Because the state is just ``seed + (t+1)*GOLDEN`` after t draws, any
output of the stream can be computed directly without stepping, which is
what lets search trials run independently and in any order.
"""

from __future__ import annotations

from .rings import Monomial, MonomialIdeal, RingContext, minimalize

_MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Sequential view of the stream seeded at ``seed``."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + GOLDEN) & _MASK
        return _mix(self.state)

    def next_below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next() % bound


def nth_output(seed: int, t: int) -> int:
    """The t-th draw (0-based) from a stream seeded at ``seed``, in O(1)."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return _mix((seed + (t + 1) * GOLDEN) & _MASK)


def random_monomial(
    rng: SplitMix64, context: RingContext, max_exp: int, min_total: int = 1
) -> Monomial:
    """Draw exponents uniformly in 0..max_exp, resampling until the total
    degree is at least ``min_total``."""
    if max_exp < 1:
        raise ValueError("max_exp must be at least 1")
    if context.n * max_exp < min_total:
        raise ValueError(
            f"no monomial in {context.n} variables with exponents <= {max_exp} "
            f"has total degree {min_total}"
        )
    while True:
        exps = tuple(rng.next_below(max_exp + 1) for _ in range(context.n))
        if sum(exps) >= min_total:
            return Monomial(exps)


def random_ideal(
    rng: SplitMix64,
    context: RingContext,
    gens_lo: int,
    gens_hi: int,
    max_exp: int,
    force_m2: bool = False,
) -> MonomialIdeal:
    """A random proper monomial ideal with between gens_lo and gens_hi
    generator draws (the canonical form may have fewer after minimalizing).

    With ``force_m2`` every generator has total degree at least 2, so the
    result lies inside the square of the maximal ideal.
    """
    if not 1 <= gens_lo <= gens_hi:
        raise ValueError("need 1 <= gens_lo <= gens_hi")
    min_total = 2 if force_m2 else 1
    count = gens_lo + rng.next_below(gens_hi - gens_lo + 1)
    gens = [random_monomial(rng, context, max_exp, min_total) for _ in range(count)]
    return minimalize(gens, context)
