import pytest

from crystal_atoms.tableau import (
    Tableau,
    enumerate_ssyt,
    highest_weight_tableau,
    lower,
    raise_,
    string_stats,
    weight,
)

from corpus import SMALL_CORPUS, hook_content


def T(*rows):
    return Tableau(tuple(tuple(r) for r in rows))


def test_weight_examples():
    assert weight(highest_weight_tableau((3, 2, 0)), 3) == (3, 2, 0)
    assert weight(T((1, 1, 2), (2, 4)), 4) == (2, 2, 0, 1)
    assert weight(T((2, 2, 2), (3, 3)), 3) == (0, 3, 2)


def test_semistandard_examples():
    assert T((1, 1, 2), (3, 4)).is_semistandard()
    assert not T((1, 3, 2), (3, 4)).is_semistandard()
    assert not T((1, 1, 2), (1, 4)).is_semistandard()
    assert T((1, 1, 2), (2, 4)).is_semistandard(4)
    assert not T((1, 1, 2), (2, 4)).is_semistandard(3)


def test_lower_examples():
    b = T((1, 1, 1), (2, 2))
    assert lower(1, b, 3) == T((1, 1, 2), (2, 2))
    assert lower(2, b, 3) == T((1, 1, 1), (2, 3))
    assert lower(1, T((1, 2), (2,)), 3) is None


def test_raise_examples():
    for i in (1, 2):
        assert raise_(i, T((1, 1, 1), (2, 2)), 3) is None
    assert raise_(1, T((1, 1, 2), (2, 2)), 3) == T((1, 1, 1), (2, 2))
    x = T((1, 2, 3, 3), (2, 3, 4, 4), (3, 4, 5), (5, 6))
    assert raise_(2, x, 6) == T((1, 2, 2, 3), (2, 3, 4, 4), (3, 4, 5), (5, 6))


def test_string_stats_examples():
    b = highest_weight_tableau((3, 2, 0))
    assert string_stats(1, b, 3) == (0, 1)
    assert string_stats(2, b, 3) == (0, 2)


def test_invalid_input():
    with pytest.raises(ValueError):
        lower(1, T((2, 1),), 3)
    with pytest.raises(ValueError):
        lower(3, T((1,),), 3)
    with pytest.raises(ValueError):
        raise_(1, T((1, 4),), 3)


def test_empty_tableau():
    e = highest_weight_tableau((0, 0, 0))
    assert weight(e, 3) == (0, 0, 0)
    assert all(lower(i, e, 3) is None and raise_(i, e, 3) is None for i in (1, 2))


@pytest.mark.parametrize(
    "lam, n, count", [((3, 2, 0), 3, 15), ((1, 1, 1), 3, 1), ((3, 1, 1, 0, 0, 0), 6, 336)]
)
def test_enumerate_ssyt_counts(lam, n, count):
    tabs = enumerate_ssyt(lam, n)
    assert len(tabs) == len(set(tabs)) == count == hook_content(lam, n)
    assert all(t.is_semistandard(n) for t in tabs)


def row_reading_ops(i, t, n):
    """f_i and e_i by bracketing the row reading word (top row first, each row
    left to right): a second, independent reading of the pairing rule."""
    word = [(x, (r, c)) for r in range(len(t.rows) - 1, -1, -1) for c, x in enumerate(t.rows[r])]
    opens, free_i = [], []
    for x, pos in word:
        if x == i + 1:
            opens.append(pos)
        elif x == i:
            if opens:
                opens.pop()
            else:
                free_i.append(pos)
    f = t.replace(free_i[-1], i + 1) if free_i else None
    e = t.replace(opens[0], i) if opens else None
    return f, e


@pytest.mark.parametrize("lam, n", SMALL_CORPUS, ids=str)
def test_axioms_and_pairing(lam, n):
    for t in enumerate_ssyt(lam, n):
        wt = weight(t, n)
        for i in range(1, n):
            u = lower(i, t, n)
            eps, phi = string_stats(i, t, n)
            # A3
            assert phi - eps == wt[i - 1] - wt[i]
            # A2 by iteration
            k, y = 0, t
            while (y := lower(i, y, n)) is not None:
                k += 1
            assert k == phi
            if u is not None:
                # A1 and validity
                assert u.is_semistandard(n)
                assert raise_(i, u, n) == t
                uw = weight(u, n)
                assert uw[i - 1] == wt[i - 1] - 1 and uw[i] == wt[i] + 1
            d = raise_(i, t, n)
            if d is not None:
                assert d.is_semistandard(n) and lower(i, d, n) == t
            assert (u, d) == row_reading_ops(i, t, n)


def test_json_roundtrip():
    t = T((1, 1, 2), (2, 4))
    data = t.to_json(4)
    assert data == {"shape": [3, 2, 0, 0], "rows": [[1, 1, 2], [2, 4]]}
    assert Tableau.from_json(data) == t
    with pytest.raises(ValueError):
        Tableau.from_json({"shape": [2, 2], "rows": [[1, 1, 2], [2, 4]]})
