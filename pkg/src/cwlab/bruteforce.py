"""Brute-force ground truth: exhaustive enumeration of solutions at small
N and n, and an unstructured reducibility oracle that searches every
arrangement, split and boundary pair instead of trusting any structure.

The enumeration scans all N**n words depth-first, carrying the running
matrix product so each extension costs one multiplication; membership in
{+Id, -Id} can only be tested at full length, so there is no pruning.  Both
the scan order and the oracle's search order are fixed, which makes output
and witnesses reproducible byte for byte.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from .errors import BudgetExceededError, InternalCheckError, UsageError
from .ring import Modulus, _mul, _pm_sign
from .words import Word, canonical_form, is_solution, rotations_and_reversals

#: Default enumeration budget, in matrix multiplications.  The CLI lets the
#: environment override it (CWL_BUDGET).
DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class EnumerationQuery:
    """A request to enumerate all solutions of a given size.

    dedup collapses the output by canonical form; count_only keeps only the
    total.  The budget is checked before scanning: the scan needs about
    N**size multiplications.
    """

    modulus: Modulus
    size: int
    dedup: bool = False
    count_only: bool = False
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.size < 1:
            raise UsageError(f"size must be >= 1, got {self.size}")
        if self.budget < 1:
            raise UsageError(f"budget must be >= 1, got {self.budget}")


@dataclass(frozen=True)
class Census:
    """Result of an enumeration: the raw solution count and, unless
    count_only was set, the solution words (canonical representatives,
    pairwise inequivalent, when dedup was set; otherwise every solution in
    scan order)."""

    modulus: Modulus
    size: int
    total: int
    dedup: bool
    words: tuple[Word, ...] = field(default=())


def enumerate_solutions(query: EnumerationQuery) -> Census:
    """Scan all N**size words and collect those whose matrix is +/-Id."""
    m = query.modulus
    n = m.n
    size = query.size
    needed = n**size
    if needed > query.budget:
        raise BudgetExceededError(needed, query.budget)

    one = 1 % n
    prefix = [(one, 0, 0, one)] * (size + 1)
    digits = [0] * size
    total = 0
    raw: list[tuple[int, ...]] = []
    pos = 0
    while True:
        while pos < size:
            k = digits[pos]
            a, b, c, d = prefix[pos]
            # E(k) . [[a, b], [c, d]]
            prefix[pos + 1] = ((k * a - c) % n, (k * b - d) % n, a, b)
            pos += 1
        if _pm_sign(prefix[size], n) is not None:
            total += 1
            if not query.count_only:
                raw.append(tuple(digits))
        pos = size - 1
        while pos >= 0 and digits[pos] == n - 1:
            digits[pos] = 0
            pos -= 1
        if pos < 0:
            break
        digits[pos] += 1

    if query.count_only:
        words: tuple[Word, ...] = ()
    elif query.dedup:
        classes = sorted({canonical_form(Word(v, m)).values for v in raw})
        words = tuple(Word(v, m) for v in classes)
    else:
        words = tuple(Word(v, m) for v in raw)
    return Census(m, size, total, query.dedup, words)


def census_json_dict(census: Census) -> dict:
    """The documented JSON shape: {N, n, total, dedup, representatives}."""
    return {
        "N": census.modulus.n,
        "n": census.size,
        "total": census.total,
        "dedup": census.dedup,
        "representatives": [list(w.values) for w in census.words],
    }


def census_csv(census: Census) -> str:
    """CSV with one word per row and a header a1..an."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([f"a{i + 1}" for i in range(census.size)])
    for w in census.words:
        writer.writerow(list(w.values))
    return out.getvalue()


def is_reducible_oracle(w: Word):
    """Literal reducibility search for any solution word of length >= 3.

    For every arrangement t of w (rotations, then rotations of the
    reversal), every split with right-summand length l in [3, n-1] (left
    length n + 2 - l is then automatically >= 3), and every boundary pair
    (b_1, b_l) in row-major order, the split fixes the summand interiors
    from t; the candidate is accepted as soon as the right summand is a
    solution.  The left summand is then a solution too (the sum equals t,
    which is a solution), and that is double-checked rather than assumed.

    Returns (True, (left, right, arrangement)) for the first witness in
    scan order, or (False, None) after an exhaustive search.
    """
    if is_solution(w) is None:
        raise UsageError(f"oracle expects a solution word, got {w!r}")
    n = len(w)
    if n < 3:
        raise UsageError(f"oracle expects length >= 3, got {n}")
    big = w.modulus.n
    letters = [(v, -1 % big, 1 % big, 0) for v in range(big)]
    for t in rotations_and_reversals(w):
        tv = t.values
        for right_len in range(3, n):
            left_len = n + 2 - right_len
            interior = tv[left_len:]
            prod = (1 % big, 0, 0, 1 % big)
            for v in interior:
                prod = _mul(letters[v], prod, big)
            for b_first in range(big):
                base = _mul(prod, letters[b_first], big)
                for b_last in range(big):
                    if _pm_sign(_mul(letters[b_last], base, big), big) is None:
                        continue
                    left = Word(((tv[0] - b_last) % big,) + tv[1:left_len - 1]
                                + ((tv[left_len - 1] - b_first) % big,),
                                w.modulus)
                    right = Word((b_first,) + interior + (b_last,), w.modulus)
                    if is_solution(left) is None:
                        raise InternalCheckError(
                            f"left summand {left!r} of a found split is not "
                            f"a solution")
                    return True, (left, right, t)
    return False, None
