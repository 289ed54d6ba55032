"""Deterministic check suites behind the `verify` command.

Every check enumerates a finite statement exactly (no randomness, no
timing), reports one outcome line, and names a concrete counterexample on
failure.  Output is therefore byte-identical across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bruteforce import EnumerationQuery, enumerate_solutions, is_reducible_oracle
from .errors import InternalCheckError, VerificationError
from .monomial import (
    Decomposition,
    ZeroExcluded,
    _elementary_power_tuples,
    _elementary_tuple,
    classify_monomials,
    closed_form_size,
    is_reducible_monomial,
    minimal_monomial_size,
    odd_boundary_word,
    power_matrix_identity,
    power_monomial_word,
    quadratic_roots,
    two_boundary_word,
)
from .numtheory import binomial_valuation, factorize
from .ring import Modulus, _mul, _pm_sign
from .words import Word, equivalent, is_solution, oplus, rotations_and_reversals, word

#: Moduli exercised by the prime-powers preset.
PRIME_POWER_MODULI = (4, 8, 9, 16, 25, 27, 32, 49, 64, 81)

PRESETS = ("small", "prime-powers", "sizes")


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    detail: str


def _outcome(name: str, failures: list[str], ok_detail: str) -> CheckOutcome:
    if failures:
        extra = f" (+{len(failures) - 1} more)" if len(failures) > 1 else ""
        return CheckOutcome(name, False, failures[0] + extra)
    return CheckOutcome(name, True, ok_detail)


def _census_set(n: int, size: int) -> set[tuple[int, ...]]:
    census = enumerate_solutions(EnumerationQuery(Modulus(n), size))
    return {w.values for w in census.words}


def check_catalog_size_2(n: int) -> CheckOutcome:
    got = _census_set(n, 2)
    failures = [] if got == {(0, 0)} else [f"N={n}: size-2 solutions {sorted(got)}"]
    return _outcome(f"catalog-size-2 N={n}", failures, "only (0,0)")


def check_catalog_size_3(n: int) -> CheckOutcome:
    expected = {(1 % n,) * 3, (-1 % n,) * 3}
    got = _census_set(n, 3)
    failures = [] if got == expected else [
        f"N={n}: size-3 solutions {sorted(got)} != {sorted(expected)}"]
    return _outcome(f"catalog-size-3 N={n}", failures,
                    f"{len(expected)} constant words")


def _size_4_families(n: int) -> set[tuple[int, ...]]:
    expected = set()
    for a in range(n):
        for b in range(n):
            if a * b % n == 0:
                expected.add((-a % n, b, a, -b % n))
            if a * b % n == 2 % n:
                expected.add((a, b, a, b))
    return expected


def check_catalog_size_4(n: int) -> CheckOutcome:
    expected = _size_4_families(n)
    got = _census_set(n, 4)
    failures = []
    if got != expected:
        missing = sorted(expected - got)
        surplus = sorted(got - expected)
        failures.append(f"N={n}: size-4 mismatch, missing={missing[:3]}, "
                        f"surplus={surplus[:3]}")
    return _outcome(f"catalog-size-4 N={n}", failures,
                    f"{len(expected)} words from the two families")


def check_census_symmetry(n: int) -> CheckOutcome:
    got = _census_set(n, 4)
    failures = []
    for values in sorted(got):
        w = Word(values, Modulus(n))
        for t in rotations_and_reversals(w):
            if t.values not in got:
                failures.append(f"N={n}: {values} in census but arrangement "
                                f"{t.values} is not")
    return _outcome(f"census-symmetry N={n}", failures,
                    f"{len(got)} size-4 solutions closed under arrangement")


def check_boundary_rigidity(n: int) -> CheckOutcome:
    """Solutions shaped (a, k, ..., k, b) force a = b and a(a-k) = 0."""
    m = Modulus(n)
    failures = []
    for k in range(n):
        powers = _elementary_power_tuples(m, k, 6)
        for length in range(3, 9):
            mid = powers[length - 2]
            for a in range(n):
                base = _mul(mid, _elementary_tuple(a, n), n)
                for b in range(n):
                    if _pm_sign(_mul(_elementary_tuple(b, n), base, n),
                                n) is None:
                        continue
                    if a != b or a * (a - k) % n != 0:
                        failures.append(
                            f"N={n}, k={k}, length={length}: boundary "
                            f"pair a={a}, b={b}")
    return _outcome(f"boundary-rigidity N={n}", failures,
                    "lengths 3..8, all boundary pairs scanned")


def check_monomial_run_triple(n: int) -> CheckOutcome:
    """Around each multiple of the minimal size h, boundary solutions
    (a, k, ..., k, b) are pinned: at length h*m they force a = b = k, at
    h*m + 1 they do not exist, at h*m + 2 they force a = b = 0."""
    m = Modulus(n)
    failures = []
    for k in range(n):
        h, _ = minimal_monomial_size(m, k)
        powers = _elementary_power_tuples(m, k, 12)

        def boundary_sign(a: int, b: int, length: int):
            mid = powers[length - 2]
            return _pm_sign(
                _mul(_elementary_tuple(b, n),
                     _mul(mid, _elementary_tuple(a, n), n), n), n)

        mult = 1
        while h * mult <= 12:
            base = h * mult
            for a in range(n):
                for b in range(n):
                    if base >= 2 and boundary_sign(a, b, base) is not None:
                        if a != b or a != k:
                            failures.append(f"N={n}, k={k}, length={base}: "
                                            f"a={a}, b={b} not forced to k")
                    if base + 1 <= 12 and base + 1 >= 2 and \
                            boundary_sign(a, b, base + 1) is not None:
                        failures.append(f"N={n}, k={k}, length={base + 1}: "
                                        f"unexpected solution a={a}, b={b}")
                    if base + 2 <= 12 and boundary_sign(a, b, base + 2) \
                            is not None:
                        if a != b or a != 0:
                            failures.append(f"N={n}, k={k}, length={base + 2}: "
                                            f"a={a}, b={b} not forced to 0")
            mult += 1
    return _outcome(f"monomial-run-triple N={n}", failures,
                    "all k, lengths up to 12")


def check_root_symmetry(n: int) -> CheckOutcome:
    m = Modulus(n)
    failures = []
    for k in range(n):
        roots = set(quadratic_roots(m, k).roots)
        if 0 not in roots or k not in roots:
            failures.append(f"N={n}, k={k}: 0 or k missing from {sorted(roots)}")
        for x in roots:
            if (k - x) % n not in roots:
                failures.append(f"N={n}, k={k}: root {x} without partner "
                                f"{(k - x) % n}")
    return _outcome(f"quadratic-root-symmetry N={n}", failures,
                    "root sets closed under x -> k - x")


def check_prime_power_roots(n: int) -> CheckOutcome:
    """Over a prime power, units k have exactly the roots {0, k}."""
    m = Modulus(n)
    p = m.factors[0][0]
    failures = []
    for k in range(n):
        if k % p == 0:
            continue
        roots = quadratic_roots(m, k).roots
        if set(roots) != {0, k}:
            failures.append(f"N={n}, k={k}: roots {roots}")
    return _outcome(f"unit-root-pair N={n}", failures,
                    "units have root set {0, k}")


def check_size_divisibility(n: int) -> CheckOutcome:
    """All-k solution lengths are exactly the multiples of the minimal h."""
    m = Modulus(n)
    failures = []
    for k in range(n):
        h, _ = minimal_monomial_size(m, k)
        ek = _elementary_tuple(k, n)
        acc = (1 % n, 0, 0, 1 % n)
        for j in range(1, 3 * h + 1):
            acc = _mul(ek, acc, n)
            present = _pm_sign(acc, n) is not None
            if present != (j % h == 0):
                failures.append(f"N={n}, k={k}: length {j} solution "
                                f"presence {present}, h={h}")
    return _outcome(f"size-divisibility N={n}", failures,
                    "solution lengths = multiples of h, scanned to 3h")


def check_prime_power_size_bound(n: int) -> CheckOutcome:
    m = Modulus(n)
    failures = []
    for k in range(n):
        h, _ = minimal_monomial_size(m, k)
        if h > 3 * n:
            failures.append(f"N={n}, k={k}: h={h} exceeds 3N={3 * n}")
    return _outcome(f"size-bound N={n}", failures, "h <= 3N for all k")


def check_monomial_classification(n: int) -> CheckOutcome:
    """Build every per-k report (certificates re-verify themselves); over a
    prime power this includes the closed-form irreducibility cross-check."""
    try:
        reports = classify_monomials(n)
    except (VerificationError, InternalCheckError) as exc:
        return CheckOutcome(f"monomial-classification N={n}", False, str(exc))
    count = sum(r.irreducible for r in reports)
    return CheckOutcome(f"monomial-classification N={n}", True,
                        f"{count} irreducible of {n}")


def check_oracle_agreement(n: int) -> CheckOutcome:
    """The literal search agrees with the structured decider for every k;
    witnesses are re-validated from scratch."""
    m = Modulus(n)
    failures = []
    for k in range(n):
        reducible, certificate = is_reducible_monomial(m, k)
        if k == 0:
            if not isinstance(certificate, ZeroExcluded):
                failures.append(f"N={n}, k=0: expected the zero sentinel")
            continue
        h, _ = minimal_monomial_size(m, k)
        target = word([k] * h, m)
        oracle_reducible, witness = is_reducible_oracle(target)
        if oracle_reducible != reducible:
            failures.append(f"N={n}, k={k}: oracle says {oracle_reducible}, "
                            f"structured decider says {reducible}")
            continue
        if oracle_reducible:
            left, right, _arrangement = witness
            if (len(left) < 3 or len(right) < 3
                    or is_solution(right) is None
                    or is_solution(left) is None
                    or not equivalent(target, oplus(left, right))):
                failures.append(f"N={n}, k={k}: invalid oracle witness "
                                f"{left!r} (+) {right!r}")
            if not isinstance(certificate, Decomposition):
                failures.append(f"N={n}, k={k}: reducible without a "
                                f"decomposition certificate")
    return _outcome(f"oracle-agreement N={n}", failures,
                    "structured decider matches the literal search")


def check_sum_stability(n: int) -> CheckOutcome:
    """With b a solution, a (+) b is a solution exactly when a is."""
    m = Modulus(n)
    solutions = []
    for size in (2, 3, 4):
        census = enumerate_solutions(EnumerationQuery(m, size))
        solutions.extend(census.words)
    failures = []
    for b in solutions:
        for length in (2, 3):
            for index in range(n ** length):
                values = []
                rest = index
                for _ in range(length):
                    values.append(rest % n)
                    rest //= n
                a = Word(tuple(values), m)
                if (is_solution(oplus(a, b)) is None) != (is_solution(a) is None):
                    failures.append(f"N={n}: a={a.values}, b={b.values}")
    return _outcome(f"sum-stability N={n}", failures,
                    f"{len(solutions)} solutions against all words of "
                    f"length 2..3")


def check_arrangement_stability(n: int) -> CheckOutcome:
    """Rotations and reversals preserve solutionhood."""
    m = Modulus(n)
    failures = []
    for length in (3, 4):
        for index in range(n ** length):
            values = []
            rest = index
            for _ in range(length):
                values.append(rest % n)
                rest //= n
            w = Word(tuple(values), m)
            present = is_solution(w) is not None
            for t in rotations_and_reversals(w):
                if (is_solution(t) is not None) != present:
                    failures.append(f"N={n}: {w.values} vs arrangement "
                                    f"{t.values}")
    return _outcome(f"arrangement-stability N={n}", failures,
                    "lengths 3..4, all words")


def check_noncommutativity() -> CheckOutcome:
    m = Modulus(7)
    a = word([3, 2, 1], m)
    b = word([1, 2, 3], m)
    left = oplus(a, b).values
    right = oplus(b, a).values
    failures = [] if left != right else [
        f"(3,2,1) (+) (1,2,3) == (1,2,3) (+) (3,2,1) == {left}"]
    return _outcome("sum-noncommutativity", failures,
                    f"{left} != {right} over N=7")


def check_size_table() -> CheckOutcome:
    """Minimal monomial sizes on the documented grid of moduli."""
    failures = []

    def expect(n: int, k: int, size: int):
        h, _ = minimal_monomial_size(Modulus(n), k)
        if h != size:
            failures.append(f"N={n}, k={k}: h={h}, expected {size}")

    for n, k, size in ((10, 3, 15), (30, 6, 12), (9, 3, 6), (8, 4, 4),
                       (6, 3, 6)):
        expect(n, k, size)
    for exponent in range(2, 7):  # N = 2**exponent, k = 2a with a odd
        n = 2 ** exponent
        for a in range(1, n // 2, 2):
            expect(n, 2 * a, n)
    for p in (3, 5, 7):  # N = p**exponent, k with p-adic valuation m
        for exponent in range(1, 4):
            n = p ** exponent
            expect(n, 0, 2)
            for m_val in range(1, exponent):
                for k in range(p ** m_val, n, p ** m_val):
                    if (k // p ** m_val) % p == 0:
                        continue
                    expect(n, k, 2 * p ** (exponent - m_val))
    for base in (2, 3, 4, 5):  # N = base**exponent, k = base
        for exponent in (2, 3):
            expect(base ** exponent, base, 2 * base ** (exponent - 1))
    return _outcome("size-table", failures, "all tabulated sizes match")


def check_closed_form_agreement(max_modulus: int = 200) -> CheckOutcome:
    failures = []
    checked = 0
    for n in range(2, max_modulus + 1):
        m = Modulus(n)
        for k in range(n):
            formula = closed_form_size(m, k)
            if formula is None:
                continue
            checked += 1
            h, _ = minimal_monomial_size(m, k)
            if formula != h:
                failures.append(f"N={n}, k={k}: formula {formula}, "
                                f"iterative {h}")
    return _outcome("closed-form-agreement", failures,
                    f"{checked} (N, k) pairs up to N={max_modulus}")


def _family_instances(max_modulus: int):
    """Every family instance with modulus <= max_modulus; the multiplier a
    runs over one period of distinct words, plus a = -1 as a spot check."""
    for base in range(2, max_modulus + 1):
        exponent = 2
        while base ** exponent <= max_modulus:
            for m_val in range(1, exponent):
                period = base ** (exponent - m_val)
                for a in list(range(period)) + [-1]:
                    yield ("power_monomial",
                           dict(l=base, n=exponent, m=m_val, a=a))
            if base > 2 and exponent >= 3:
                for m_val in range(1, exponent - 1):
                    period = base ** (exponent - m_val)
                    for a in list(range(period)) + [-1]:
                        yield ("odd_boundary",
                               dict(l=base, n=exponent, m=m_val, a=a))
            if base == 2 and exponent >= 4:
                for m_val in range(2, exponent - 1):
                    period = 2 ** (exponent - m_val)
                    for a in list(range(period)) + [-1]:
                        yield ("two_boundary",
                               dict(n=exponent, m=m_val, a=a))
            exponent += 1


def check_family_soundness(max_modulus: int = 256) -> CheckOutcome:
    builders = {"power_monomial": power_monomial_word,
                "odd_boundary": odd_boundary_word,
                "two_boundary": two_boundary_word}
    failures = []
    count = 0
    for kind, params in _family_instances(max_modulus):
        count += 1
        try:
            builders[kind](**params)  # raises unless it built a solution
        except InternalCheckError as exc:
            failures.append(f"{kind} {params}: {exc}")
    return _outcome("family-soundness", failures,
                    f"{count} family words, all solutions")


def check_power_matrix_identity() -> CheckOutcome:
    failures = []
    for exponent in (3, 4, 5):
        for a in (1, 3, 5, 7):
            n = 2 ** (exponent + 1)
            try:
                got = power_matrix_identity(exponent, a).entries()
            except InternalCheckError as exc:
                failures.append(str(exc))
                continue
            diag = (1 + 2 ** exponent * a * a) % n
            off = 2 ** exponent * a % n
            if got != (diag, off, -off % n, diag):
                failures.append(f"n={exponent}, a={a}: got {got}")
    return _outcome("power-matrix-identity", failures,
                    "2**n-fold products match the closed form, n=3..5")


def check_binomial_lemmas() -> CheckOutcome:
    failures = []
    for l in range(2, 7):
        for n in range(2, 7):
            for j in range(1, n):
                if binomial_valuation(l ** (n - 1), j, l) < n - j:
                    failures.append(f"C({l}**{n - 1}, {j}) lacks {l}**{n - j}")
        for n in range(3, 7):
            for j in range(2, n):
                if binomial_valuation(2 * l ** (n - 2), j, l) < n - j:
                    failures.append(f"C(2*{l}**{n - 2}, {j}) lacks {l}**{n - j}")
    for n in range(1, 201):
        for k in range(1, n + 1):
            if math.comb(n, k) % (n // math.gcd(n, k)) != 0:
                failures.append(f"n/gcd(n,k) does not divide C({n},{k})")
    for n in range(3, 13):
        for j in range(3, n + 1):
            if binomial_valuation(2 ** (n - 1), j, 2) < n + 1 - j:
                failures.append(f"C(2**{n - 1}, {j}) lacks 2**{n + 1 - j}")
    for top in range(0, 61):
        for j in range(top + 1):
            value = math.comb(top, j)
            for base in (2, 3, 4, 5, 6, 12):
                exact = 0
                rest = value
                while rest % base == 0:
                    rest //= base
                    exact += 1
                if binomial_valuation(top, j, base) != exact:
                    failures.append(f"valuation mismatch at C({top},{j}) "
                                    f"base {base}")
    return _outcome("binomial-divisibility", failures,
                    "all divisibility ranges and the exact oracle to 60")


def _per_modulus_checks(n: int) -> list[CheckOutcome]:
    out = [
        check_catalog_size_2(n),
        check_catalog_size_3(n),
        check_catalog_size_4(n),
        check_census_symmetry(n),
        check_boundary_rigidity(n),
        check_monomial_run_triple(n),
        check_root_symmetry(n),
        check_size_divisibility(n),
        check_monomial_classification(n),
    ]
    if len(factorize(n).factors) == 1:
        out.append(check_prime_power_roots(n))
        out.append(check_prime_power_size_bound(n))
    if n <= 10:
        out.append(check_oracle_agreement(n))
    if n <= 6:
        out.append(check_sum_stability(n))
    if n <= 5:
        out.append(check_arrangement_stability(n))
    return out


def run_moduli(moduli) -> list[CheckOutcome]:
    outcomes = []
    for n in moduli:
        outcomes.extend(_per_modulus_checks(n))
    return outcomes


def run_preset(name: str) -> list[CheckOutcome]:
    if name == "small":
        outcomes = run_moduli(range(2, 11))
        outcomes.append(check_noncommutativity())
        return outcomes
    if name == "prime-powers":
        outcomes = []
        for n in PRIME_POWER_MODULI:
            outcomes.append(check_monomial_classification(n))
            outcomes.append(check_prime_power_roots(n))
            outcomes.append(check_prime_power_size_bound(n))
            outcomes.append(check_size_divisibility(n))
        outcomes.append(check_power_matrix_identity())
        outcomes.append(check_family_soundness())
        outcomes.append(check_binomial_lemmas())
        return outcomes
    if name == "sizes":
        return [check_size_table(), check_closed_form_agreement()]
    raise VerificationError(f"unknown preset {name!r}; expected one of "
                            f"{PRESETS}")


def render_report(outcomes: list[CheckOutcome]) -> tuple[bool, str]:
    lines = []
    for outcome in outcomes:
        tag = "ok  " if outcome.passed else "FAIL"
        lines.append(f"{tag} {outcome.name}: {outcome.detail}")
    passed = sum(outcome.passed for outcome in outcomes)
    failed = len(outcomes) - passed
    lines.append(f"verify: {len(outcomes)} checks, {passed} passed, "
                 f"{failed} failed")
    return failed == 0, "\n".join(lines) + "\n"
