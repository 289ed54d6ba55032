"""Minimal monomial solutions and their reducibility, with certificates.

For a residue k, the k-monomial minimal solution is the shortest all-k word
whose matrix is plus or minus the identity; its length h is the order of
E(k) = [[k, -1], [1, 0]] in SL2(Z/NZ) modulo sign, so the all-k solution
lengths are exactly the multiples of h.

Reducibility of the all-k solution of length h is decided against the only
shapes a summand can take: writing the target as a sum forces both summands
to be boundary words (x, k, ..., k, x) whose boundary satisfies
x(x - k) = 0 mod N.  The decision is certified: either a verified
decomposition or the record of every (length, root) candidate that failed.
The unstructured search in the bruteforce module cross-checks this logic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalCheckError, UsageError, VerificationError
from .ring import MAX_MODULUS, Mat2, Modulus, Residue, as_modulus, _mul, _pm_sign
from .words import Word, equivalent, is_solution, oplus, word


def _as_residue_value(k: "Residue | int", m: Modulus) -> int:
    if isinstance(k, Residue):
        if k.modulus != m:
            raise UsageError(f"residue is mod {k.modulus.n}, expected mod {m.n}")
        return k.value
    return k % m.n


def _elementary_tuple(k: int, n: int) -> tuple[int, int, int, int]:
    return (k % n, -1 % n, 1 % n, 0)


def _elementary_power_tuples(m: Modulus, k: int, jmax: int) -> list[tuple]:
    """Raw E(k)**j for j = 0..jmax, built incrementally."""
    n = m.n
    ek = _elementary_tuple(k, n)
    powers = [(1 % n, 0, 0, 1 % n)]
    for _ in range(jmax):
        powers.append(_mul(ek, powers[-1], n))
    return powers


def size_cap(modulus: "Modulus | int") -> int:
    """Iteration bound for the minimal monomial size search.

    For a prime power p**alpha the minimal size is at most 3 p**alpha.  When
    N has r distinct primes, the minimal size divides twice the least common
    multiple of the per-prime-power sizes (the factor 2 makes every component
    sign +1), and that lcm is at most prod(3 p_i**alpha_i) = 3**r * N.  The
    multi-prime bound is derived here, not taken from a sharper known result,
    so it is deliberately generous; exceeding it signals a bug, never bad
    input.
    """
    m = as_modulus(modulus)
    return 2 * 3 ** len(m.factors) * m.n


def minimal_monomial_size(modulus: "Modulus | int",
                          k: "Residue | int") -> tuple[int, int]:
    """Smallest h >= 1 with E(k)**h = +/-Id, and the sign attained there."""
    m = as_modulus(modulus)
    n = m.n
    kv = _as_residue_value(k, m)
    ek = _elementary_tuple(kv, n)
    cap = size_cap(m)
    acc = ek
    for j in range(1, cap + 1):
        sign = _pm_sign(acc, n)
        if sign is not None:
            return j, sign
        acc = _mul(ek, acc, n)
    raise InternalCheckError(
        f"no power of E({kv}) mod {n} reached +/-identity within {cap} steps")


def closed_form_size(modulus: "Modulus | int", k: int) -> int | None:
    """Minimal monomial size by formula, when every prime of N divides k.

    With N = prod(p_i**alpha_i) and beta_i the p_i-adic valuation of k
    (capped at alpha_i, which picks the representative of the class of k
    with the smallest valuations), the size is
    2 * prod(p_i**(alpha_i - beta_i)) provided every beta_i >= 1.  When some
    prime of N does not divide k the formula does not apply and None is
    returned; the iterative search still works there.
    """
    m = as_modulus(modulus)
    kv = k % m.n
    if kv == 0:
        return 2
    result = 2
    for p, alpha in m.factors:
        if kv % p != 0:
            return None
        beta = 0
        x = kv
        while x % p == 0 and beta < alpha:
            x //= p
            beta += 1
        result *= p ** (alpha - beta)
    return result


@dataclass(frozen=True)
class QuadraticRoots:
    """All x in Z/NZ with x(x - k) = 0; always contains 0 and k and is
    closed under x -> k - x."""

    modulus: Modulus
    k: int
    roots: tuple[int, ...]

    def __post_init__(self):
        n = self.modulus.n
        rs = set(self.roots)
        if 0 not in rs or self.k % n not in rs:
            raise InternalCheckError(f"root set {self.roots} misses 0 or k")
        if any((self.k - x) % n not in rs for x in rs):
            raise InternalCheckError(
                f"root set {self.roots} not closed under x -> k - x")


def quadratic_roots(modulus: "Modulus | int",
                    k: "Residue | int") -> QuadraticRoots:
    """Brute-force scan of all x in [0, N) for x(x - k) = 0 mod N."""
    m = as_modulus(modulus)
    n = m.n
    kv = _as_residue_value(k, m)
    roots = tuple(x for x in range(n) if x * (x - kv) % n == 0)
    return QuadraticRoots(m, kv, roots)


def _checked_solution_word(values, modulus, what: str) -> Word:
    w = word(values, modulus)
    if is_solution(w) is None:
        raise InternalCheckError(f"{what} failed to produce a solution: {w!r}")
    return w


def power_monomial_word(l: int, n: int, m: int, a: int) -> Word:
    """All-(a l**m) word of length 2 l**(n-m) over N = l**n; a solution for
    every integer a.  Requires l, n >= 2 and 1 <= m <= n - 1."""
    if l < 2 or n < 2 or not 1 <= m <= n - 1:
        raise UsageError(
            f"power_monomial_word needs l, n >= 2 and 1 <= m <= n - 1; "
            f"got l={l}, n={n}, m={m}")
    modulus = Modulus(l ** n)
    k = a * l ** m % modulus.n
    return _checked_solution_word([k] * (2 * l ** (n - m)), modulus,
                                  "power monomial family")


def odd_boundary_word(l: int, n: int, m: int, a: int) -> Word:
    """(2a l**(n-1), a l**m, ..., a l**m, 2a l**(n-1)) of length
    2 l**(n-m) - 4 l**(n-m-1) + 2 over N = l**n; a solution for every
    integer a.  Requires l > 2, n >= 3 and 1 <= m <= n - 2."""
    if l <= 2 or n < 3 or not 1 <= m <= n - 2:
        raise UsageError(
            f"odd_boundary_word needs l > 2, n >= 3 and 1 <= m <= n - 2; "
            f"got l={l}, n={n}, m={m}")
    modulus = Modulus(l ** n)
    boundary = 2 * a * l ** (n - 1) % modulus.n
    k = a * l ** m % modulus.n
    length = 2 * l ** (n - m) - 4 * l ** (n - m - 1) + 2
    return _checked_solution_word(
        [boundary] + [k] * (length - 2) + [boundary], modulus,
        "odd boundary family")


def two_boundary_word(n: int, m: int, a: int) -> Word:
    """(a 2**(n-1), a 2**m, ..., a 2**m, a 2**(n-1)) of length 2**(n-m) + 2
    over N = 2**n; a solution for every integer a.  Requires n >= 4 and
    2 <= m <= n - 2."""
    if n < 4 or not 2 <= m <= n - 2:
        raise UsageError(
            f"two_boundary_word needs n >= 4 and 2 <= m <= n - 2; "
            f"got n={n}, m={m}")
    modulus = Modulus(2 ** n)
    boundary = a * 2 ** (n - 1) % modulus.n
    k = a * 2 ** m % modulus.n
    length = 2 ** (n - m) + 2
    return _checked_solution_word(
        [boundary] + [k] * (length - 2) + [boundary], modulus,
        "two boundary family")


FAMILY_KINDS = ("power_monomial", "odd_boundary", "two_boundary")


def family_word(kind: str, **params) -> Word:
    """Dispatch to one of the named solution-family generators."""
    try:
        builder = {"power_monomial": power_monomial_word,
                   "odd_boundary": odd_boundary_word,
                   "two_boundary": two_boundary_word}[kind]
    except KeyError:
        raise UsageError(f"unknown family kind {kind!r}; "
                         f"expected one of {FAMILY_KINDS}") from None
    try:
        return builder(**params)
    except TypeError as exc:
        raise UsageError(f"bad parameters for {kind}: {exc}") from None


def power_matrix_identity(n: int, a: int) -> Mat2:
    """The product of 2**n copies of E(2a) over N = 2**(n+1), for odd a.

    Computes the product by repeated multiplication and checks it equals
    [[1 + 2**n a**2, 2**n a], [-2**n a, 1 + 2**n a**2]] before returning it.
    Requires n >= 3; note the product is not +/-identity, which is what
    pins the minimal all-(2a) solution length over 2**(n+1) to 2**(n+1).
    """
    if n < 3:
        raise UsageError(f"power_matrix_identity needs n >= 3, got {n}")
    if a % 2 == 0:
        raise UsageError(f"power_matrix_identity needs odd a, got {a}")
    if 2 ** (n + 1) > MAX_MODULUS:
        raise UsageError(f"2**{n + 1} exceeds the modulus cap")
    modulus = Modulus(2 ** (n + 1))
    big = modulus.n
    k = 2 * a % big
    ek = _elementary_tuple(k, big)
    acc = (1, 0, 0, 1)
    for _ in range(2 ** n):
        acc = _mul(ek, acc, big)
    diag = (1 + 2 ** n * a * a) % big
    off = 2 ** n * a % big
    expected = (diag, off, -off % big, diag)
    if acc != expected:
        raise InternalCheckError(
            f"product of 2**{n} copies of E({k}) mod {big} is {acc}, "
            f"expected {expected}")
    return Mat2(*acc, modulus)


@dataclass(frozen=True)
class Decomposition:
    """A verified split of the target into left (+) right.

    Construction re-checks everything the split claims: both summands have
    length >= 3, the right summand is a solution, and the sum is equivalent
    to the target.  A certificate therefore cannot exist unverified.
    """

    target: Word
    left: Word
    right: Word
    rotation_note: str

    variant = "decomposition"

    def __post_init__(self):
        if len(self.left) < 3 or len(self.right) < 3:
            raise InternalCheckError("decomposition summand shorter than 3")
        if is_solution(self.right) is None:
            raise InternalCheckError(
                f"right summand {self.right!r} is not a solution")
        if not equivalent(self.target, oplus(self.left, self.right)):
            raise InternalCheckError(
                f"{self.left!r} (+) {self.right!r} is not equivalent "
                f"to {self.target!r}")

    def summary(self) -> str:
        return (f"splits as {len(self.left)}+{len(self.right)} with "
                f"boundaries {self.left[0]}/{self.right[0]}")


@dataclass(frozen=True)
class ExaminedSplit:
    """One rejected candidate: right summand length and boundary root."""

    right_length: int
    root: int
    reason: str  # "right-not-solution" or "left-not-solution"


@dataclass(frozen=True)
class Exhausted:
    """Every admissible (length, root) candidate failed; the list is the
    proof of irreducibility relative to the forced summand shape."""

    examined: tuple[ExaminedSplit, ...]

    variant = "exhausted"

    def summary(self) -> str:
        return f"exhausted {len(self.examined)} split candidates"


@dataclass(frozen=True)
class ZeroExcluded:
    """Sentinel for k = 0: the minimal solution is the pair (0, 0), which by
    convention is not counted as irreducible (and is too short for the
    reducibility definition to apply)."""

    note: str = "minimal solution is (0, 0); excluded from irreducibility"

    variant = "zero-excluded"

    def summary(self) -> str:
        return self.note


ReducibilityCertificate = Decomposition | Exhausted | ZeroExcluded


def is_reducible_monomial(modulus: "Modulus | int", k: "Residue | int"
                          ) -> tuple[bool, ReducibilityCertificate]:
    """Decide reducibility of the minimal all-k solution, with certificate.

    The target of length h is reducible exactly when some right summand
    (x, k, ..., k, x) of length l in [3, h-1] with x a root of X(X - k) and
    the matching left summand (k-x, k, ..., k, k-x) of length h + 2 - l are
    both solutions.  Candidates are scanned with l ascending and x ascending,
    so certificates are reproducible.  For k = 0 the minimal solution is the
    pair (0, 0), reported as not irreducible with a sentinel certificate.
    """
    m = as_modulus(modulus)
    n = m.n
    kv = _as_residue_value(k, m)
    h, _ = minimal_monomial_size(m, kv)
    if kv == 0:
        return True, ZeroExcluded()
    target = word([kv] * h, m)
    powers = _elementary_power_tuples(m, kv, max(h - 2, 0))
    roots = quadratic_roots(m, kv).roots
    examined = []
    for right_len in range(3, h):
        left_len = h + 2 - right_len
        for x in roots:
            ex = _elementary_tuple(x, n)
            right_mat = _mul(ex, _mul(powers[right_len - 2], ex, n), n)
            if _pm_sign(right_mat, n) is None:
                examined.append(ExaminedSplit(right_len, x,
                                              "right-not-solution"))
                continue
            y = (kv - x) % n
            ey = _elementary_tuple(y, n)
            left_mat = _mul(ey, _mul(powers[left_len - 2], ey, n), n)
            if _pm_sign(left_mat, n) is None:
                examined.append(ExaminedSplit(right_len, x,
                                              "left-not-solution"))
                continue
            left = word([y] + [kv] * (left_len - 2) + [y], m)
            right = word([x] + [kv] * (right_len - 2) + [x], m)
            note = ("left (+) right reproduces the all-k target exactly"
                    if oplus(left, right).values == target.values
                    else "left (+) right is an arrangement of the target")
            return True, Decomposition(target, left, right, note)
    return False, Exhausted(tuple(examined))


@dataclass(frozen=True)
class MonomialReport:
    """Per-k record: minimal size, sign there, verdict and certificate."""

    modulus: Modulus
    k: int
    size: int
    sign: int
    irreducible: bool
    certificate: ReducibilityCertificate


def _prime_power_irreducible(p: int, exponent: int, k: int) -> bool:
    """Closed-form irreducibility rule over N = p**exponent.

    Odd p: irreducible exactly when p does not divide k.  p = 2: exactly
    when k is odd, or k = 2**(exponent-1), or exponent >= 2 and k = 2a with
    a odd.  k is the least nonnegative representative.
    """
    if p != 2:
        return k % p != 0
    if k % 2 == 1:
        return True
    if k == 2 ** (exponent - 1):
        return True
    return exponent >= 2 and k % 2 == 0 and (k // 2) % 2 == 1


def classify_monomials(modulus: "Modulus | int") -> list[MonomialReport]:
    """One report per k in [0, N), ordered by k.

    Over a prime power the computed verdicts are cross-checked against the
    closed-form irreducibility rule; any disagreement raises, since it would
    mean either the decider or the rule is wrong.
    """
    m = as_modulus(modulus)
    reports = []
    for k in range(m.n):
        h, sign = minimal_monomial_size(m, k)
        reducible, certificate = is_reducible_monomial(m, k)
        reports.append(MonomialReport(m, k, h, sign, not reducible,
                                      certificate))
    if len(m.factors) == 1:
        p, exponent = m.factors[0]
        for report in reports:
            expected = _prime_power_irreducible(p, exponent, report.k)
            if expected != report.irreducible:
                raise VerificationError(
                    f"N={m.n}, k={report.k}: computed "
                    f"irreducible={report.irreducible} but the prime-power "
                    f"rule says {expected}")
    return reports
