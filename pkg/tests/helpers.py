"""Shared test utilities: signature enumeration, random multivectors,
hypothesis strategies and the prime/maximal ideal probes."""

from __future__ import annotations

from fractions import Fraction

import hypothesis.strategies as st

from cliffideals import (
    Ideal,
    Multivector,
    Signature,
    ideal_closure,
    ideal_sum,
)


def signatures_up_to(total: int, min_z: int = 0, min_total: int = 0):
    """All signatures with min_total <= p+q+z <= total and z >= min_z."""
    out = []
    for n in range(min_total, total + 1):
        for p in range(n + 1):
            for q in range(n - p + 1):
                z = n - p - q
                if z >= min_z:
                    out.append(Signature(p, q, z))
    return out


def random_multivector(sig, rng, max_terms=4, radical_only=False, coeff_range=4):
    if radical_only:
        masks = [m for m in range(sig.dim) if m & sig.null_mask]
    else:
        masks = list(range(sig.dim))
    if not masks:
        return Multivector.zero(sig)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        m = rng.choice(masks)
        c = Fraction(rng.randint(-coeff_range, coeff_range), rng.randint(1, 3))
        terms[m] = terms.get(m, 0) + c
    return Multivector(sig, {m: c for m, c in terms.items() if c})


@st.composite
def sig_and_multivector(draw, max_total=4, max_terms=4, min_z=0):
    sig = draw(st.sampled_from(signatures_up_to(max_total, min_z=min_z)))
    n_terms = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n_terms):
        mask = draw(st.integers(0, sig.dim - 1))
        num = draw(st.integers(-6, 6))
        den = draw(st.integers(1, 4))
        terms[mask] = terms.get(mask, 0) + Fraction(num, den)
    return sig, Multivector(sig, {m: c for m, c in terms.items() if c})


# -- ideal probes (the definitional tests behind the prime/maximal claims) --


def principal_blade_ideals(sig: Signature) -> list[Ideal]:
    return [ideal_closure(sig, [Multivector.blade(sig, m)]) for m in range(sig.dim)]


def is_maximal_by_probe(prime: Ideal) -> bool:
    """Adjoining any basis blade outside the ideal must hit the whole algebra."""
    sig = prime.sig
    for mask in range(sig.dim):
        blade = Multivector.blade(sig, mask)
        if prime.contains(blade):
            continue
        enlarged = ideal_sum(prime, ideal_closure(sig, [blade]))
        if not enlarged.is_whole_algebra():
            return False
    return True


def is_prime_on_principal_blades(prime: Ideal, principals: list[Ideal]) -> bool:
    """Definitional primality over all pairs of basis-blade principal ideals.

    For pairs with A or B already inside the ideal the implication holds
    vacuously-true on the consequent side; otherwise A*B must escape.
    """
    inside = [prime.contains_ideal(a) for a in principals]
    for i, a in enumerate(principals):
        for j, b in enumerate(principals):
            if inside[i] or inside[j]:
                continue
            if all(prime.contains(u * v) for u in a.basis for v in b.basis):
                return False
    return True
