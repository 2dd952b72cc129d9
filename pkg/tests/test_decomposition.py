import pytest

from zeckgame.decomposition import (
    EMPTY,
    Decomposition,
    enumerate_legal,
    greedy_decompose,
    is_legal,
    summand_count,
    value_of,
)
from zeckgame.sequence import term


def test_worked_example_33():
    assert greedy_decompose(33).coeffs == (1, 0, 3, 1)


def test_greedy_single_term():
    assert greedy_decompose(1).coeffs == (1,)


def test_greedy_72():
    # frozen from the enumeration oracle: the only legal vector summing to 72
    assert greedy_decompose(72).coeffs == (0, 2, 0, 4)


def test_greedy_rejects_nonpositive():
    with pytest.raises(ValueError):
        greedy_decompose(0)
    with pytest.raises(ValueError):
        greedy_decompose(-3)


def test_is_legal_examples():
    assert is_legal((1, 0, 3, 1))
    assert not is_legal((0, 2, 3))  # s_3 = 3 saturated but s_2 = 2
    assert not is_legal((2, 0))  # s_1 = 2 > 1
    assert not is_legal((-1,))
    assert is_legal(())


def test_value_of_examples():
    assert value_of((1, 0, 3, 1)) == 33
    assert value_of(()) == 0
    assert value_of((0, 0, 3, 1)) == 32


def test_summand_count_examples():
    assert summand_count(greedy_decompose(33)) == 5
    assert summand_count(greedy_decompose(1)) == 1
    assert summand_count(EMPTY) == 0


def test_enumerate_max_index_1():
    got = {d.coeffs for d in enumerate_legal(1)}
    assert got == {(), (1,)}


def test_enumerate_max_value_is_next_term_minus_one():
    # largest integer decomposable by a_1..a_n is a_{n+1} - 1
    for n in range(1, 9):
        assert max(d.value for d in enumerate_legal(n)) == term(n + 1) - 1


def test_enumerate_values_cover_range_exactly_once():
    values = sorted(d.value for d in enumerate_legal(4))
    assert values == list(range(73))


def test_uniqueness_and_greedy_agreement_small():
    by_value = {}
    for d in enumerate_legal(5):
        assert d.value not in by_value, f"two decompositions of {d.value}"
        by_value[d.value] = d.coeffs
    assert sorted(by_value) == list(range(term(6)))
    for x in range(1, term(6)):
        assert by_value[x] == greedy_decompose(x).coeffs


def test_round_trip_value():
    for x in list(range(1, 2000)) + [10**9, 10**18, 10**40]:
        d = greedy_decompose(x)
        assert value_of(d.coeffs) == x
        assert d.value == x


def test_greedy_step_law():
    # leading coefficient is floor(x / a_n), never exceeds n, and a
    # saturated leading coefficient forces a zero below it
    for x in range(1, 3000):
        d = greedy_decompose(x)
        n = d.top_index
        lead = d.coeffs[-1]
        assert lead == x // term(n)
        assert lead <= n
        if lead == n and n >= 2:
            assert d.coeffs[-2] == 0


def test_every_enumerated_vector_is_legal_and_canonical():
    for d in enumerate_legal(6):
        assert is_legal(d.coeffs)
        assert not d.coeffs or d.coeffs[-1] >= 1


def test_decomposition_rejects_illegal_vectors():
    with pytest.raises(ValueError):
        Decomposition((2,))  # s_1 > 1
    with pytest.raises(ValueError):
        Decomposition((1, 2))  # s_2 saturated, s_1 nonzero
    with pytest.raises(ValueError):
        Decomposition((1, 0))  # trailing zero
    with pytest.raises(ValueError):
        Decomposition((0, 1), value=5)  # wrong cached value


def test_str_rendering():
    assert str(greedy_decompose(33)) == "33 = 1*a4 + 3*a3 + 1*a1"
    assert str(EMPTY) == "0"
