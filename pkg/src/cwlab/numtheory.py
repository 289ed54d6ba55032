"""Exact arithmetic support: factorization, Euler phi, valuations of binomials.

Everything here works on plain Python integers and is exact; no value ever
passes through floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UsageError

#: Largest value we factor by trial division.  Keeps every intermediate
#: product of two values inside 64 bits.
MAX_VALUE = 2**31 - 1

#: binomial_valuation refuses larger top arguments; the digit-carry count
#: stays cheap but callers this large are almost certainly a mistake.
MAX_BINOMIAL_TOP = 10**6


@dataclass(frozen=True)
class Factorization:
    """value == prod(p**e for p, e in factors), primes ascending, e >= 1."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def factorize(v: int) -> Factorization:
    """Trial-division factorization of v >= 1.  v == 1 gives an empty list."""
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise UsageError(f"factorize expects an integer >= 1, got {v!r}")
    if v > MAX_VALUE:
        raise UsageError(f"factorize expects v <= {MAX_VALUE}, got {v}")
    n = v
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return Factorization(v, tuple(factors))


def euler_phi(v: int) -> int:
    """Euler's totient, via the product formula over the factorization."""
    fac = factorize(v)
    result = v
    for p, _ in fac.factors:
        result = result // p * (p - 1)
    return result


def valuation(x: int, p: int) -> int:
    """Exact p-adic valuation of x >= 1."""
    if x < 1:
        raise UsageError(f"valuation expects x >= 1, got {x}")
    if p < 2:
        raise UsageError(f"valuation expects p >= 2, got {p}")
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def factor_along(k: int, n: Factorization) -> tuple[int, tuple[int, ...]]:
    """Split k >= 1 along the primes of n.

    Returns (a, betas) with k == a * prod(p_i**beta_i), beta_i the exact
    p_i-adic valuation of k (deliberately not capped at the exponent in n)
    and a coprime to every p_i.
    """
    if not isinstance(k, int) or k < 1:
        raise UsageError(f"factor_along expects k >= 1, got {k!r}; "
                         "k == 0 has no valuation")
    a = k
    betas = []
    for p, _ in n.factors:
        b = valuation(k, p)
        betas.append(b)
        a //= p**b
    return a, tuple(betas)


def _carry_count(i: int, j: int, p: int) -> int:
    """Number of carries when adding i and j in base p (both >= 0)."""
    carries = 0
    carry = 0
    while i or j or carry:
        s = i % p + j % p + carry
        carry = 1 if s >= p else 0
        carries += carry
        i //= p
        j //= p
    return carries


def binomial_valuation(top: int, j: int, base: int) -> int:
    """Largest e >= 0 with base**e dividing C(top, j).

    The p-adic valuation of C(top, j) is the number of carries when adding
    j and top - j in base p; for a composite base prod(p_i**e_i) the answer
    is min_i floor(v_{p_i} / e_i), the unique e with base**e dividing the
    coefficient but base**(e+1) not.  C(top, j) itself is never materialized.
    """
    if not (0 <= j <= top):
        raise UsageError(f"binomial_valuation expects 0 <= j <= top, "
                         f"got top={top}, j={j}")
    if top > MAX_BINOMIAL_TOP:
        raise UsageError(f"binomial_valuation expects top <= "
                         f"{MAX_BINOMIAL_TOP}, got {top}")
    if base < 2:
        raise UsageError(f"binomial_valuation expects base >= 2, got {base}")
    result = None
    for p, e in factorize(base).factors:
        v = _carry_count(j, top - j, p)
        candidate = v // e
        result = candidate if result is None else min(result, candidate)
    return result
