import pytest

from crystal_atoms import weyl
from crystal_atoms.crystal import character, generate
from crystal_atoms.demazure import (
    E_set,
    F_set,
    atom_decomposition,
    atom_via_difference,
    atom_via_operators,
    atomic_operator,
    atoms_by_word,
    demazure_by_word,
    demazure_crystal,
    extremal_weight_element,
    key_path,
    right_key,
    schubert_crystal,
)
from crystal_atoms.extremal import is_extremal
from crystal_atoms.golden import FIGURE1_ATOMS, T
from crystal_atoms.poly import atom_polynomial, key_polynomial
from crystal_atoms.weyl import LowerOrderIdeal

from corpus import SMALL_CORPUS

G320 = generate((3, 2, 0))
b = G320.highest


def W(word, n=3):
    return weyl.from_word(word, n)


def tabs(X):
    return set(X.ambient.tableaux_of(X))


def test_F_set_examples():
    X = G320.subset([b])
    assert tabs(F_set(1, X)) == {T((1, 1, 1), (2, 2)), T((1, 1, 2), (2, 2))}
    assert len(F_set(2, X)) == 3
    assert len(F_set(1, G320.subset([]))) == 0
    assert E_set(2, F_set(2, X)) == F_set(2, X)


def test_demazure_examples():
    assert demazure_crystal(G320, weyl.identity(3)).members == {b}
    fig = {t for ts in FIGURE1_ATOMS.values() for t in ts}
    assert tabs(demazure_crystal(G320, W((2, 1)))) == fig
    assert demazure_crystal(G320, weyl.longest_element(3)) == G320.full()


def test_demazure_depends_only_on_coset():
    G = generate((2, 1, 1, 0))
    lam = G.shape
    for w in weyl.all_elements(4):
        r = weyl.min_rep(w, lam)
        words = weyl.reduced_words(w)
        assert all(demazure_by_word(G, wd) == demazure_crystal(G, r) for wd in words)


def test_atom_examples():
    assert atom_via_difference(G320, weyl.identity(3)).members == {b}
    assert tabs(atom_via_difference(G320, W((2, 1)))) == set(FIGURE1_ATOMS[(2, 1)])
    assert tabs(atom_via_difference(G320, W((2,)))) == set(FIGURE1_ATOMS[(2,)])
    with pytest.raises(ValueError):
        atom_via_difference(generate((2, 2, 0)), W((1,)))


def test_atomic_operator_examples():
    X = G320.subset([b])
    assert tabs(atomic_operator(1, X)) == set(FIGURE1_ATOMS[(1,)])
    assert len(atomic_operator(2, G320.subset([]))) == 0
    assert tabs(atomic_operator(1, atomic_operator(2, X))) == set(FIGURE1_ATOMS[(2, 1)])


def test_atom_via_operators_examples():
    assert atom_via_operators(G320, W((2,))) == atom_via_difference(G320, W((2,)))
    G = generate((3, 2, 0, 0))
    assert len(atom_via_operators(G, W((3,), 4))) == 0
    # s1 s2 s1 = s2 s1 s2
    a, c = atoms_by_word(G320, (1, 2, 1)), atoms_by_word(G320, (2, 1, 2))
    assert a == c and len(a) == 3


def test_atom_via_operators_outside_coset_reps_is_empty():
    G = generate((2, 2, 0, 0))
    for w in weyl.all_elements(4):
        if not weyl.is_min_rep(w, G.shape):
            for word in weyl.reduced_words(w):
                assert len(atoms_by_word(G, word)) == 0


def test_right_key_examples():
    assert right_key(G320, T((1, 1, 1), (2, 2))).is_identity()
    assert right_key(G320, T((2, 2, 2), (3, 3))) == W((2, 1))
    assert right_key(G320, T((1, 1, 1), (3, 3))) == W((2,))


@pytest.mark.parametrize(
    "lam, sizes",
    [((3, 2, 0), [1, 1, 2, 3, 3, 5]), ((1, 1, 1), [1])],
)
def test_atom_decomposition_sizes(lam, sizes):
    D = atom_decomposition(generate(lam))
    assert sorted(len(a) for a in D.values()) == sizes


def test_atom_decomposition_rank4():
    D = atom_decomposition(generate((3, 2, 0, 0)))
    assert len(D) == 12 and sum(len(a) for a in D.values()) == 60


def test_schubert_examples():
    assert schubert_crystal(G320, LowerOrderIdeal(frozenset({weyl.identity(3)}))).members == {b}
    ideal = LowerOrderIdeal(frozenset({W((2, 1)), W((1, 2))}))
    X = schubert_crystal(G320, ideal)
    below = [v for v in weyl.min_coset_reps((3, 2, 0)) if any(weyl.bruhat_leq(v, g) for g in ideal.generators)]
    assert len(below) == 5
    union = G320.subset([])
    for v in below:
        union = union | atom_via_difference(G320, v)
    assert X == union
    assert schubert_crystal(G320, LowerOrderIdeal(frozenset({weyl.longest_element(3)}))) == G320.full()
    with pytest.raises(ValueError):
        schubert_crystal(generate((2, 2, 0)), LowerOrderIdeal(frozenset({W((1,))})))


@pytest.mark.parametrize("lam, n", SMALL_CORPUS, ids=str)
def test_demazure_theorems(lam, n):
    G = generate(lam, n)
    reps = weyl.min_coset_reps(lam)
    for w in reps:
        B = demazure_crystal(G, w)
        # E-closure and extremality
        for i in G.index_set:
            assert E_set(i, B) == B
        assert is_extremal(B)
        # the extremal weight element is the unique vertex of weight w.lambda
        wl = weyl.act_on_weight(w, lam)
        for word in weyl.reduced_words(w):
            x = extremal_weight_element(G, word)
            assert G.weights[x] == wl
        assert [v for v in G.vertices() if G.weights[v] == wl] == [x]
        for v in reps:
            assert (demazure_crystal(G, v) <= B) == weyl.bruhat_leq(v, w)
    # words through non-minimal elements give the coset's crystal
    for w in weyl.all_elements(n):
        for word in weyl.reduced_words(w):
            assert demazure_by_word(G, word) == demazure_crystal(G, weyl.min_rep(w, lam))


@pytest.mark.parametrize("lam, n", SMALL_CORPUS, ids=str)
def test_F_of_atoms(lam, n):
    G = generate(lam, n)
    for w in weyl.min_coset_reps(lam):
        A = atom_via_difference(G, w)
        for i in G.index_set:
            siw = w.times_simple_left(i)
            if weyl.bruhat_lt(siw, w) or not weyl.is_min_rep(siw, lam):
                assert F_set(i, A) == A
            else:
                other = atom_via_difference(G, siw)
                assert A.isdisjoint(other)
                assert F_set(i, A) == A | other


@pytest.mark.parametrize("lam, n", SMALL_CORPUS, ids=str)
def test_recursive_witness_paths(lam, n):
    G = generate(lam, n)
    for w in weyl.min_coset_reps(lam):
        A = atom_via_difference(G, w)
        for word in weyl.reduced_words(w):
            for x in A:
                ds = key_path(G, x, word)
                assert ds is not None and all(d > 0 for d in ds)
                y = G.highest
                for i, d in zip(word, ds):
                    assert G.e(i, y) is None
                    for _ in range(d):
                        y = G.f(i, y)
                assert y == x


@pytest.mark.parametrize("lam, n", SMALL_CORPUS, ids=str)
def test_characters_match_polynomials(lam, n):
    G = generate(lam, n)
    for w in weyl.min_coset_reps(lam):
        beta = weyl.act_on_weight(w, lam)
        assert character(demazure_crystal(G, w)) == key_polynomial(beta)
        assert character(atom_via_operators(G, w)) == atom_polynomial(beta)
