"""Cyclotomic service: Phi_n, restriction to mu_n, CRT splitting and S-bar membership."""

import logging
from collections.abc import Iterable
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from sympy import QQ, Poly, Rational, Symbol, divisors, primefactors, totient

from eqloc.core.exceptions import (
    EmptySetError,
    GroupMismatchError,
    InternalError,
    InvalidEmbeddingError,
    MalformedInputError,
    PrimeNotInvertedError,
)
from eqloc.models.cyclotomic import CyclotomicImage, PhiComponent
from eqloc.models.rep_ring import RingElement
from eqloc.services.lattice import content
from eqloc.services.rep_ring import in_z_one_over_r, validate_r_coefficients

logger = logging.getLogger(__name__)

t = Symbol("t")


# ==========================================
# Polynomial plumbing
# ==========================================


def _to_poly(coeffs: Iterable[Fraction | int]) -> Poly:
    """Coefficient vector (low degree first) -> Poly over QQ."""
    values = [Rational(Fraction(c).numerator, Fraction(c).denominator) for c in coeffs]
    if not values:
        values = [Rational(0)]
    return Poly(list(reversed(values)), t, domain=QQ)


def _from_poly(poly: Poly, length: int) -> tuple[Fraction, ...]:
    """Poly -> coefficient vector of the given length (low degree first)."""
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    if len(coeffs) > length and any(coeffs[length:]):
        raise InternalError("Polynomial does not fit the requested length", {"degree": poly.degree()})
    coeffs = coeffs[:length]
    return tuple(coeffs + [Fraction(0)] * (length - len(coeffs)))


def _x_n_minus_one(n: int) -> Poly:
    return Poly(t**n - 1, t, domain=QQ)


# ==========================================
# Cyclotomic polynomials
# ==========================================


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Phi_n as integer coefficients, low degree first.

    Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d by exact division; the
    degree is cross-checked against Euler's totient.
    """
    if n < 1:
        raise MalformedInputError("Cyclotomic index must be positive", {"n": n})
    divisor_product = Poly(1, t, domain=QQ)
    for d in divisors(n)[:-1]:
        divisor_product = divisor_product * _to_poly(cyclotomic_poly(d))
    quotient, remainder = _x_n_minus_one(n).div(divisor_product)
    if not remainder.is_zero:
        raise InternalError("Cyclotomic recursion left a remainder", {"n": n})
    if quotient.degree() != int(totient(n)):
        raise InternalError(
            "Cyclotomic degree disagrees with Euler's totient",
            {"n": n, "degree": quotient.degree(), "totient": int(totient(n))},
        )
    coeffs = _from_poly(quotient, quotient.degree() + 1)
    return tuple(int(c) for c in coeffs)


def phi_degree(d: int) -> int:
    return len(cyclotomic_poly(d)) - 1


# ==========================================
# Restriction and CRT
# ==========================================


def check_primes_inverted(n: int, r: int) -> None:
    """Every prime of n must divide r for the CRT splitting to exist over Z[1/r]."""
    for p in primefactors(n):
        if r % p != 0:
            raise PrimeNotInvertedError(p, n, r)


def restrict_to_mu_n(a: RingElement, embedding: list[int] | tuple[int, ...], n: int, r: int = 1) -> CyclotomicImage:
    """Restriction R(T)_{1/r} -> Z[1/r][t]/(t^n - 1) along mu_n -> T given by ``embedding``."""
    c = [int(v) for v in embedding]
    if not a.group.is_torsion_free or len(c) != a.group.rank:
        raise GroupMismatchError(
            "Embedding length must match the torus rank",
            {"rank": a.group.rank, "embedding": c},
        )
    if n < 1 or gcd(content(c), n) != 1:
        raise InvalidEmbeddingError(c, n)
    validate_r_coefficients(a, r)
    coeffs = [Fraction(0)] * n
    for chi, coeff in a.terms.items():
        exponent = sum(x * y for x, y in zip(chi.free, c)) % n
        coeffs[exponent] += coeff
    return CyclotomicImage(n=n, r=r, coeffs=tuple(coeffs))


def crt_decompose(x: CyclotomicImage) -> list[PhiComponent]:
    """Reduce modulo each Phi_d, d | n (the CRT splitting of t^n - 1)."""
    check_primes_inverted(x.n, x.r)
    poly = _to_poly(x.coeffs)
    components = []
    for d in divisors(x.n):
        remainder = poly.rem(_to_poly(cyclotomic_poly(d)))
        components.append(PhiComponent(n=x.n, d=d, r=x.r, coeffs=_from_poly(remainder, phi_degree(d))))
    logger.debug(f"[CRT] decomposed element of Z[1/{x.r}][t]/(t^{x.n}-1) into {len(components)} components")
    return components


@lru_cache(maxsize=None)
def _idempotents(n: int) -> tuple[tuple[int, tuple[Fraction, ...]], ...]:
    """e_d = u_d G_d mod (t^n - 1) with G_d = (t^n - 1)/Phi_d and u_d G_d = 1 mod Phi_d."""
    modulus = _x_n_minus_one(n)
    result = []
    for d in divisors(n):
        phi = _to_poly(cyclotomic_poly(d))
        cofactor = modulus.quo(phi)
        _, u, h = phi.gcdex(cofactor)
        if h != Poly(1, t, domain=QQ):
            raise InternalError("Cyclotomic factors are not coprime over Q", {"n": n, "d": d})
        idempotent = (u * cofactor).rem(modulus)
        result.append((d, _from_poly(idempotent, n)))
    return tuple(result)


def bezout_idempotents(n: int, r: int) -> dict[int, tuple[Fraction, ...]]:
    """CRT idempotents, verified to have coefficients in Z[1/r]."""
    check_primes_inverted(n, r)
    idempotents = dict(_idempotents(n))
    for d, coeffs in idempotents.items():
        bad = [c for c in coeffs if not in_z_one_over_r(c, r)]
        if bad:
            raise InternalError(
                "CRT idempotent has coefficients outside Z[1/r]",
                {"n": n, "d": d, "r": r, "coefficient": str(bad[0])},
            )
    return idempotents


def crt_reconstruct(components: list[PhiComponent]) -> CyclotomicImage:
    """Inverse of ``crt_decompose``: sum of component * idempotent modulo t^n - 1."""
    if not components:
        raise MalformedInputError("No components to reconstruct")
    n, r = components[0].n, components[0].r
    by_d = {comp.d: comp for comp in components}
    if any((comp.n, comp.r) != (n, r) for comp in components) or sorted(by_d) != list(divisors(n)):
        raise MalformedInputError(
            "Components must cover every divisor of n exactly once",
            {"n": n, "divisors": sorted(by_d)},
        )
    modulus = _x_n_minus_one(n)
    total = Poly(0, t, domain=QQ)
    for d, idempotent in bezout_idempotents(n, r).items():
        total = total + _to_poly(by_d[d].coeffs) * _to_poly(idempotent)
    return CyclotomicImage(n=n, r=r, coeffs=_from_poly(total.rem(modulus), n))


def phi_n_component(x: CyclotomicImage) -> PhiComponent:
    """Projection (c): the Phi_n component."""
    check_primes_inverted(x.n, x.r)
    remainder = _to_poly(x.coeffs).rem(_to_poly(cyclotomic_poly(x.n)))
    return PhiComponent(n=x.n, d=x.n, r=x.r, coeffs=_from_poly(remainder, phi_degree(x.n)))


def in_Sbar_mu_n(s: RingElement, embedding: list[int] | tuple[int, ...], n: int, r: int) -> bool:
    """Membership in S-bar_{mu_n}: the Phi_n component of the restriction equals 1."""
    return phi_n_component(restrict_to_mu_n(s, embedding, n, r)).is_one


def compute_r(orders: Iterable[int]) -> int:
    """lcm of the stabilizer orders {n : mu_n in C(T)}."""
    values = [int(n) for n in orders]
    if not values:
        raise EmptySetError()
    if any(n < 1 for n in values):
        raise MalformedInputError("Stabilizer orders must be positive", {"orders": values})
    return lcm(*values)
