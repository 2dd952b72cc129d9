import pytest

from zeckgame.sequence import SequenceTable, index_of_floor, term, terms


def test_initial_conditions():
    assert term(1) == 1
    assert term(2) == 2


def test_first_five_terms():
    assert terms(5) == (1, 2, 5, 17, 73)


def test_known_larger_terms():
    assert term(8) == 16937
    # one recurrence step past a_8: 8*16937 + 2365
    assert term(9) == 137861


def test_recurrence_identity_holds_exactly():
    ts = terms(60)
    for i in range(2, 60):
        assert ts[i] == (i) * ts[i - 1] + ts[i - 2]


def test_strictly_increasing():
    ts = terms(40)
    assert all(a < b for a, b in zip(ts, ts[1:]))


def test_extend_is_idempotent_and_lazy():
    t = SequenceTable()
    t.extend_to_index(10)
    first = t.terms(10)
    t.extend_to_index(4)
    assert t.terms(10) == first


@pytest.mark.parametrize("i", [0, -1, -100])
def test_term_rejects_nonpositive_index(i):
    with pytest.raises(ValueError):
        term(i)


def test_index_of_floor_examples():
    assert index_of_floor(33) == 4
    assert index_of_floor(1) == 1
    assert index_of_floor(73) == 5  # exact boundary


def test_index_of_floor_round_trip():
    for i in range(1, 30):
        assert index_of_floor(term(i)) == i


def test_index_of_floor_brackets_value():
    for x in list(range(1, 500)) + [10**6, 10**12, 10**30]:
        n = index_of_floor(x)
        assert term(n) <= x < term(n + 1)


def test_index_of_floor_monotone():
    prev = 0
    for x in range(1, 400):
        cur = index_of_floor(x)
        assert cur >= prev
        prev = cur


def test_index_of_floor_rejects_small_values():
    with pytest.raises(ValueError):
        index_of_floor(0)
    with pytest.raises(ValueError):
        index_of_floor(-5)
