"""Shared builders for randomized checks.

Everything draws from an explicit ``random.Random`` so failures reproduce.
"""

from __future__ import annotations

import random
from fractions import Fraction

from gradedcover import (
    FiniteAbelianGroup,
    GradedSignature,
    ParityMap,
    SuperMonomial,
    SuperMorphism,
    SuperPolynomial,
    SuperRational,
    SuperSignature,
    make_group,
    root_of_unity,
)


def random_group(rng: random.Random, max_order: int = 12) -> FiniteAbelianGroup:
    factors = [rng.choice([2, 2, 3, 4])]
    order = factors[0]
    while rng.random() < 0.5:
        q = rng.choice([2, 2, 3, 4])
        if order * q > max_order:
            break
        factors.append(q)
        order *= q
    return make_group(factors)


def random_parity(rng: random.Random, group: FiniteAbelianGroup) -> ParityMap:
    bits = tuple(rng.randint(0, 1) if q % 2 == 0 else 0 for q in group.factors)
    return ParityMap(group, bits)


def random_signature(
    rng: random.Random,
    group: FiniteAbelianGroup,
    parity: ParityMap,
    max_even: int = 3,
    max_odd: int = 3,
) -> GradedSignature:
    even_weights = [chi for chi in group.characters() if parity(chi) == 0]
    odd_weights = [chi for chi in group.characters() if parity(chi) == 1]
    n_even = rng.randint(1, max_even)
    n_odd = rng.randint(0, max_odd) if odd_weights else 0
    even = [(f"x{k}", rng.choice(even_weights)) for k in range(n_even)]
    odd = [(f"s{k}", rng.choice(odd_weights)) for k in range(n_odd)]
    return GradedSignature(group, parity, even, odd)


def random_coefficient(rng: random.Random, group: FiniteAbelianGroup | None = None):
    q = Fraction(rng.randint(-4, 4), rng.choice([1, 1, 2, 3]))
    if q == 0:
        q = Fraction(1)
    if group is not None and rng.random() < 0.3:
        n = group.exponent
        return root_of_unity(n, rng.randrange(n)) * q
    return q


def random_polynomial(
    rng: random.Random,
    sig: GradedSignature,
    max_terms: int = 3,
    max_degree: int = 4,
    with_odd: bool = True,
    nonzero: bool = False,
) -> SuperPolynomial:
    group = sig.group if isinstance(sig, GradedSignature) else None
    while True:
        terms = {}
        for _ in range(rng.randint(0 if not nonzero else 1, max_terms)):
            budget = rng.randint(0, max_degree)
            evens = [0] * len(sig.even)
            for _ in range(budget):
                if not evens:
                    break
                evens[rng.randrange(len(evens))] += 1
            odd = ()
            if with_odd and sig.odd and rng.random() < 0.6:
                size = rng.randint(1, len(sig.odd))
                odd = tuple(sorted(rng.sample(range(len(sig.odd)), size)))
            mono = SuperMonomial(tuple(evens), odd)
            terms[mono] = random_coefficient(rng, group)
        poly = SuperPolynomial(sig, terms)
        if not nonzero or not poly.is_zero():
            return poly


def random_rational(
    rng: random.Random,
    sig: GradedSignature,
    max_terms: int = 3,
    max_degree: int = 4,
) -> SuperRational:
    num = random_polynomial(rng, sig, max_terms=max_terms, max_degree=max_degree)
    den = random_polynomial(
        rng, sig, max_terms=2, max_degree=2, with_odd=False, nonzero=True
    )
    return SuperRational(num, den)


def random_polynomial_morphism(
    rng: random.Random,
    source: SuperSignature,
    target: SuperSignature,
    max_degree: int = 2,
) -> SuperMorphism:
    """Polynomial images of the right parity; no invertibility promised."""
    images = {}
    for name in target.even:
        poly = _parity_poly(rng, source, 0, max_degree)
        images[name] = SuperRational(poly)
    for name in target.odd:
        poly = _parity_poly(rng, source, 1, max_degree)
        images[name] = SuperRational(poly)
    return SuperMorphism(source, target, images)


def _parity_poly(rng, sig, parity_bit, max_degree):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        evens = [0] * len(sig.even)
        for _ in range(rng.randint(0, max_degree)):
            if evens:
                evens[rng.randrange(len(evens))] += 1
        if parity_bit == 0:
            choices = [()] + (
                [tuple(sorted(rng.sample(range(len(sig.odd)), 2)))]
                if len(sig.odd) >= 2
                else []
            )
            odd = rng.choice(choices)
        else:
            if not sig.odd:
                continue
            odd = (rng.randrange(len(sig.odd)),)
        terms[SuperMonomial(tuple(evens), odd)] = random_coefficient(rng)
    return SuperPolynomial(sig, terms)


def sum_components(components, sig) -> SuperRational:
    total = SuperRational.zero(sig)
    for part in components.values():
        total = total + part
    return total
