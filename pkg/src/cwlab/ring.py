"""Residues and 2x2 determinant-one matrices over Z/NZ.

All values are immutable and every operation is pure, so everything in this
module is safe to share between threads.  Residues are stored as least
nonnegative representatives; arbitrary integers are reduced on construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ModulusMismatchError, UsageError
from .numtheory import factorize

#: Moduli are capped so that a product of two entries plus a slack bit fits
#: comfortably in 64-bit intermediates; desk-scale N is tiny anyway.
MAX_MODULUS = 2**31 - 1


class Modulus:
    """The ring context Z/NZ for N >= 2, together with the factorization of N."""

    __slots__ = ("n", "factors")

    def __init__(self, n: int):
        if not isinstance(n, int) or isinstance(n, bool) or n < 2:
            raise UsageError(f"modulus must be an integer >= 2, got {n!r}")
        if n > MAX_MODULUS:
            raise UsageError(f"modulus must be <= {MAX_MODULUS}, got {n}")
        self.n = n
        self.factors = factorize(n).factors

    def reduce(self, x: int) -> int:
        return x % self.n

    def residue(self, x: int) -> "Residue":
        return Residue(x % self.n, self)

    def __eq__(self, other) -> bool:
        return isinstance(other, Modulus) and self.n == other.n

    def __hash__(self) -> int:
        return hash(("Modulus", self.n))

    def __repr__(self) -> str:
        return f"Modulus({self.n})"


def as_modulus(m: "Modulus | int") -> Modulus:
    """Accept either a Modulus or a raw integer N."""
    return m if isinstance(m, Modulus) else Modulus(m)


def _same_modulus(a: Modulus, b: Modulus) -> Modulus:
    if a != b:
        raise ModulusMismatchError(f"mixed moduli {a.n} and {b.n}")
    return a


@dataclass(frozen=True)
class Residue:
    """An element of Z/NZ, stored as its least nonnegative representative."""

    value: int
    modulus: Modulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.n:
            raise UsageError(
                f"residue value {self.value} outside [0, {self.modulus.n})"
            )

    def __add__(self, other: "Residue") -> "Residue":
        m = _same_modulus(self.modulus, other.modulus)
        return Residue((self.value + other.value) % m.n, m)

    def __sub__(self, other: "Residue") -> "Residue":
        m = _same_modulus(self.modulus, other.modulus)
        return Residue((self.value - other.value) % m.n, m)

    def __mul__(self, other: "Residue") -> "Residue":
        m = _same_modulus(self.modulus, other.modulus)
        return Residue((self.value * other.value) % m.n, m)

    def __neg__(self) -> "Residue":
        return Residue(-self.value % self.modulus.n, self.modulus)

    def __repr__(self) -> str:
        return f"Residue({self.value} mod {self.modulus.n})"


def as_residue(k: "Residue | int", modulus: "Modulus | int | None" = None) -> Residue:
    """Accept a Residue, or an arbitrary integer reduced into the given modulus."""
    if isinstance(k, Residue):
        if modulus is not None and as_modulus(modulus) != k.modulus:
            raise ModulusMismatchError(
                f"residue is mod {k.modulus.n}, expected mod {as_modulus(modulus).n}"
            )
        return k
    if modulus is None:
        raise UsageError("an integer residue needs an explicit modulus")
    m = as_modulus(modulus)
    return m.residue(k)


@dataclass(frozen=True)
class Mat2:
    """A 2x2 matrix over Z/NZ with determinant 1.

    Entries are least nonnegative residues sharing one modulus; construction
    rejects anything with determinant != 1, so products of matrices built by
    this module can never silently leave SL2(Z/NZ).
    """

    m11: int
    m12: int
    m21: int
    m22: int
    modulus: Modulus

    def __post_init__(self):
        n = self.modulus.n
        for entry in (self.m11, self.m12, self.m21, self.m22):
            if not 0 <= entry < n:
                raise UsageError(f"matrix entry {entry} outside [0, {n})")
        det = (self.m11 * self.m22 - self.m12 * self.m21) % n
        if det != 1 % n:
            raise UsageError(f"matrix determinant is {det}, not 1 (mod {n})")

    def entries(self) -> tuple[int, int, int, int]:
        return (self.m11, self.m12, self.m21, self.m22)

    def rows(self) -> list[list[int]]:
        return [[self.m11, self.m12], [self.m21, self.m22]]

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return mat_mul(self, other)

    def __repr__(self) -> str:
        return (f"Mat2([[{self.m11}, {self.m12}], [{self.m21}, {self.m22}]] "
                f"mod {self.modulus.n})")


def identity(modulus: "Modulus | int") -> Mat2:
    m = as_modulus(modulus)
    return Mat2(1 % m.n, 0, 0, 1 % m.n, m)


def minus_identity(modulus: "Modulus | int") -> Mat2:
    m = as_modulus(modulus)
    return Mat2(-1 % m.n, 0, 0, -1 % m.n, m)


def elementary(k: "Residue | int", modulus: "Modulus | int | None" = None) -> Mat2:
    """The matrix [[k, -1], [1, 0]]; the single letter of every word product."""
    r = as_residue(k, modulus)
    m = r.modulus
    return Mat2(r.value, -1 % m.n, 1 % m.n, 0, m)


def elementary_inverse(k: "Residue | int",
                       modulus: "Modulus | int | None" = None) -> Mat2:
    """[[0, 1], [-1, k]], the two-sided inverse of elementary(k)."""
    r = as_residue(k, modulus)
    m = r.modulus
    return Mat2(0, 1 % m.n, -1 % m.n, r.value, m)


def _mul(a: tuple[int, int, int, int], b: tuple[int, int, int, int],
         n: int) -> tuple[int, int, int, int]:
    """Raw 2x2 product mod n on plain tuples; the hot-loop workhorse."""
    a11, a12, a21, a22 = a
    b11, b12, b21, b22 = b
    return ((a11 * b11 + a12 * b21) % n,
            (a11 * b12 + a12 * b22) % n,
            (a21 * b11 + a22 * b21) % n,
            (a21 * b12 + a22 * b22) % n)


def _pm_sign(m: tuple[int, int, int, int], n: int) -> int | None:
    """Sign for +/-identity tuples, None otherwise (raw variant)."""
    if m[1] != 0 or m[2] != 0:
        return None
    one = 1 % n
    if m[0] == one and m[3] == one:
        return 1
    minus_one = -1 % n
    if m[0] == minus_one and m[3] == minus_one:
        return -1
    return None


def mat_mul(a: Mat2, b: Mat2) -> Mat2:
    m = _same_modulus(a.modulus, b.modulus)
    return Mat2(*_mul(a.entries(), b.entries(), m.n), m)


def mat_pow(a: Mat2, e: int) -> Mat2:
    """a**e for e >= 0 by square-and-multiply; mat_pow(a, 0) is the identity."""
    if not isinstance(e, int) or e < 0:
        raise UsageError(f"exponent must be an integer >= 0, got {e!r}")
    n = a.modulus.n
    result = (1 % n, 0, 0, 1 % n)
    base = a.entries()
    while e:
        if e & 1:
            result = _mul(result, base, n)
        e >>= 1
        if e:
            base = _mul(base, base, n)
    return Mat2(*result, a.modulus)


def is_pm_identity(m: Mat2) -> int | None:
    """+1 for the identity, -1 for its negative, None otherwise.

    Over N = 2 the two coincide; the identity is checked first, so the
    reported sign is +1 there.
    """
    return _pm_sign(m.entries(), m.modulus.n)
