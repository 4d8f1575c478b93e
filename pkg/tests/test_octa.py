import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burnt.errors import NotCanonical
from burnt.graph import order, unrank
from burnt.octa import (
    CanonicalForm,
    canonical_letters,
    canonical_words,
    canonicalize,
    classify,
    count_8cycles,
    count_through_vertex,
    enumerate_8cycles,
    family_instances,
    form_to_word,
    forms_table,
    readings,
    symmetry_factor,
)
from burnt.oracle import build_graph, iter_cycles_of_length
from burnt.perm import CycleWitness, GenWord, SignedPerm, cycle_facts, identity, walk

# brute-force 8-cycle counts from the oracle, frozen as regression values
FROZEN_COUNTS = {2: 1, 3: 36, 4: 864}


def digits(w):
    return "".join(map(str, w.letters))


def test_form_examples():
    assert digits(form_to_word(CanonicalForm("F4", (2,), 2))) == "21212121"
    assert form_to_word(CanonicalForm("F1", (1, 2, 3), 3)).letters == (3, 2, 1, 2, 3, 2, 1, 2)
    assert form_to_word(CanonicalForm("F3", (2, 3), 3)).letters == (3, 2, 3, 1, 3, 2, 3, 1)
    for bad in (CanonicalForm("F4", (1,), 3), CanonicalForm("F2", (2, 3, 4), 4), CanonicalForm("F9", (2,), 3)):
        with pytest.raises(ValueError):
            form_to_word(bad)


def test_instance_counts():
    got = {n: (len(family_instances(n)), len(canonical_words(n))) for n in range(2, 10)}
    assert got == {2: (1, 1), 3: (4, 4), 4: (11, 10), 5: (24, 20), 6: (45, 35), 7: (76, 56), 8: (119, 84), 9: (176, 120)}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_family_words_walk_from_every_vertex(n):
    for form in family_instances(n):
        w = form_to_word(form).letters
        for r in range(order(n)):
            closed, simple, _ = cycle_facts(unrank(n, r), w)
            assert simple


def test_family_words_sampled_n5():
    rng = random.Random(5)
    for form in family_instances(5):
        w = form_to_word(form).letters
        for _ in range(50):
            assert cycle_facts(unrank(5, rng.randrange(order(5))), w)[1]


def test_canonicalize_bp2():
    cyc = canonicalize(CycleWitness(2, identity(2), GenWord((1, 2) * 4, 2)))
    assert digits(cyc.word) == "21212121"
    assert cyc.fingerprint == tuple(range(8))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10), st.integers(0, 383), st.integers(0, 15))
def test_canonicalize_invariant_under_readings(which, r, t):
    words = canonical_words(4)
    w = words[which % len(words)].letters
    start = unrank(4, r)
    base = canonicalize(CycleWitness(4, start, GenWord(w, 4)))
    # walk the same cycle from another vertex and direction
    verts = walk(start, GenWord(w, 4)).vertices[:8]
    letters = readings(w)[t]
    origin = verts[t % 8]
    other = canonicalize(CycleWitness(4, origin, GenWord(letters, 4)))
    assert other == base


def test_classify_examples():
    assert classify(GenWord((2, 1) * 4, 2)) == CanonicalForm("F4", (2,), 2)
    assert classify(GenWord((4, 2) * 4, 4)) == CanonicalForm("F2", (2, 2, 4), 4)
    with pytest.raises(NotCanonical):
        classify(GenWord((1, 2) * 4, 2))
    with pytest.raises(NotCanonical):
        classify(GenWord((3, 1) * 3, 3))
    with pytest.raises(NotCanonical):
        classify(GenWord((3, 2) * 4, 3))


@pytest.mark.parametrize("n", range(2, 10))
def test_classify_inverts_form_to_word(n):
    for w in canonical_words(n):
        form = classify(w)
        assert form_to_word(form) == w


def test_duplicate_parameter_classes():
    # (i, j, k) and (i, k-j+i, k) read as the same F1 cycle
    a = form_to_word(CanonicalForm("F1", (1, 2, 4), 4)).letters
    b = form_to_word(CanonicalForm("F1", (1, 3, 4), 4)).letters
    assert a != b and canonical_letters(a) == canonical_letters(b)
    a = form_to_word(CanonicalForm("F2", (2, 3, 5), 5)).letters
    b = form_to_word(CanonicalForm("F2", (3, 2, 5), 5)).letters
    assert canonical_letters(a) == canonical_letters(b)


def test_symmetry_factors():
    assert symmetry_factor((2, 1) * 4) == 8
    assert symmetry_factor((3, 2, 3, 1) * 2) == 4
    assert symmetry_factor(canonical_letters((3, 2, 1, 2, 3, 2, 1, 2))) == 4


def brute_canonical(n):
    g = build_graph(n)
    out = Counter()
    for cyc in iter_cycles_of_length(g, 8):
        letters = [g.labels[u][g.adj[u].index(v)] for u, v in zip(cyc, cyc[1:] + cyc[:1])]
        w = CycleWitness(n, SignedPerm(g.vertices[cyc[0]]), GenWord(letters, n))
        out[canonicalize(w).word.letters] += 1
    return out


@pytest.mark.parametrize("n", [2, 3, 4])
def test_completeness_against_brute_force(n):
    brute = brute_canonical(n)
    fam = Counter(c.word.letters for c in enumerate_8cycles(n))
    assert brute == fam
    assert set(brute) == {w.letters for w in canonical_words(n)}
    assert sum(brute.values()) == count_8cycles(n) == FROZEN_COUNTS[n]


def test_enumeration_is_distinct_and_ordered():
    cycles = list(enumerate_8cycles(3))
    assert len({c.fingerprint for c in cycles}) == len(cycles) == 36
    assert cycles == list(enumerate_8cycles(3))


def test_count_relations():
    for n in range(2, 9):
        assert count_8cycles(n) * 8 == count_through_vertex(n) * order(n)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_vertex_transitive_count(n):
    rng = random.Random(n)
    expected = count_through_vertex(n)
    for _ in range(100 if n < 6 else 20):
        assert count_through_vertex(n, unrank(n, rng.randrange(order(n)))) == expected


def test_forms_table():
    rows = {r.family: r for r in forms_table(4)}
    assert (rows["F1"].instances, rows["F1"].canonical_words) == (4, 3)
    assert sum(r.canonical_words for r in rows.values()) == len(canonical_words(4))
