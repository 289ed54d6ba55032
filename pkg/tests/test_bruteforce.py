import json

import pytest

from cwlab.bruteforce import (
    EnumerationQuery,
    census_csv,
    census_json_dict,
    enumerate_solutions,
    is_reducible_oracle,
)
from cwlab.errors import BudgetExceededError, UsageError
from cwlab.monomial import is_reducible_monomial, minimal_monomial_size
from cwlab.ring import Modulus
from cwlab.words import (
    canonical_form,
    equivalent,
    is_solution,
    oplus,
    rotations_and_reversals,
    word,
)


def test_census_examples():
    census = enumerate_solutions(EnumerationQuery(Modulus(5), 3))
    assert census.total == 2
    assert {w.values for w in census.words} == {(1, 1, 1), (4, 4, 4)}

    census = enumerate_solutions(EnumerationQuery(Modulus(4), 2))
    assert census.total == 1
    assert [w.values for w in census.words] == [(0, 0)]


def test_census_matches_parametric_families_mod_six():
    expected = set()
    for a in range(6):
        for b in range(6):
            if a * b % 6 == 0:
                expected.add((-a % 6, b, a, -b % 6))
            if a * b % 6 == 2:
                expected.add((a, b, a, b))
    census = enumerate_solutions(EnumerationQuery(Modulus(6), 4))
    assert {w.values for w in census.words} == expected


def test_census_scan_order_is_lexicographic():
    census = enumerate_solutions(EnumerationQuery(Modulus(6), 4))
    values = [w.values for w in census.words]
    assert values == sorted(values)


def test_census_dedup():
    census = enumerate_solutions(EnumerationQuery(Modulus(6), 4, dedup=True))
    reps = list(census.words)
    for w in reps:
        assert canonical_form(w).values == w.values
    for i, u in enumerate(reps):
        for v in reps[i + 1:]:
            assert not equivalent(u, v)
    # dedup keeps the raw total
    raw = enumerate_solutions(EnumerationQuery(Modulus(6), 4))
    assert census.total == raw.total
    assert len(reps) < raw.total


def test_census_count_only():
    census = enumerate_solutions(EnumerationQuery(Modulus(6), 4,
                                                  count_only=True))
    full = enumerate_solutions(EnumerationQuery(Modulus(6), 4))
    assert census.total == full.total == len(full.words)
    assert census.words == ()


def test_census_symmetry():
    census = enumerate_solutions(EnumerationQuery(Modulus(6), 4))
    got = {w.values for w in census.words}
    for values in got:
        for t in rotations_and_reversals(word(values, 6)):
            assert t.values in got


def test_census_determinism():
    query = EnumerationQuery(Modulus(7), 4, dedup=True)
    first = enumerate_solutions(query)
    second = enumerate_solutions(query)
    assert first == second
    assert json.dumps(census_json_dict(first), sort_keys=True) == \
        json.dumps(census_json_dict(second), sort_keys=True)


def test_budget_enforced():
    with pytest.raises(BudgetExceededError) as exc_info:
        enumerate_solutions(EnumerationQuery(Modulus(10), 9))
    assert "100000000" in str(exc_info.value)
    with pytest.raises(BudgetExceededError):
        enumerate_solutions(EnumerationQuery(Modulus(5), 3, budget=100))


def test_query_validation():
    with pytest.raises(UsageError):
        EnumerationQuery(Modulus(5), 0)
    with pytest.raises(UsageError):
        EnumerationQuery(Modulus(5), 3, budget=0)


def test_census_serialization():
    census = enumerate_solutions(EnumerationQuery(Modulus(5), 3))
    payload = census_json_dict(census)
    assert payload == {"N": 5, "n": 3, "total": 2, "dedup": False,
                       "representatives": [[1, 1, 1], [4, 4, 4]]}
    text = census_csv(census)
    assert text.splitlines()[0] == "a1,a2,a3"
    assert text.splitlines()[1:] == ["1,1,1", "4,4,4"]


def test_oracle_reducible_monomial_mod_ten():
    target = word([3] * 15, 10)
    reducible, witness = is_reducible_oracle(target)
    assert reducible
    left, right, arrangement = witness
    assert len(left) >= 3 and len(right) >= 3
    assert is_solution(right) is not None
    assert is_solution(left) is not None
    assert equivalent(target, oplus(left, right))
    assert arrangement.values in \
        {t.values for t in rotations_and_reversals(target)}


def test_oracle_irreducible_cases():
    assert is_reducible_oracle(word([2] * 8, 8)) == (False, None)
    assert is_reducible_oracle(word([1, 1, 1], 5)) == (False, None)


def test_oracle_preconditions():
    with pytest.raises(UsageError):
        is_reducible_oracle(word([1, 2], 5))  # not a solution
    with pytest.raises(UsageError):
        is_reducible_oracle(word([0, 0], 5))  # solution but too short


def test_oracle_on_general_solution_words():
    # the oracle accepts any solution, not only constant ones
    target = word([8, 3, 3, 3, 8], 10)
    reducible, witness = is_reducible_oracle(target)
    if reducible:
        left, right, _ = witness
        assert equivalent(target, oplus(left, right))
        assert is_solution(right) is not None


def test_oracle_agrees_with_structured_decider():
    for n in range(2, 11):
        m = Modulus(n)
        for k in range(1, n):
            h, _ = minimal_monomial_size(m, k)
            structured, certificate = is_reducible_monomial(m, k)
            oracle, witness = is_reducible_oracle(word([k] * h, m))
            assert structured == oracle, (n, k)
            if oracle:
                left, right, _ = witness
                assert equivalent(word([k] * h, m), oplus(left, right))
