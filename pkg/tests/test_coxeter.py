import json

import pytest
from hypothesis import given, settings, strategies as st

import oracle
from klcells import (
    WeightFunction,
    ball,
    bruhat_leq,
    descents,
    element_from_word,
    g2_affine,
    interval,
    is_reduced_product,
    load_group,
    lower_cone,
    parse_word,
    weighted_length,
)
from klcells.coxeter import IDENTITY_KEY, GroupElement


def power_order(x, cap=40):
    acc = x
    for n in range(1, cap + 1):
        if acc.is_identity():
            return n
        acc = acc * x
    raise AssertionError("order not found")


def test_coxeter_matrix_orders(W):
    gens = W.generators()
    for i in range(3):
        for j in range(3):
            expected = W.coxeter_matrix[i][j]
            assert power_order(gens[i] * gens[j]) == (1 if i == j else expected)


def test_generator_walls_and_classes(W):
    assert W.affine_node == 3
    assert W.gen_classes == (frozenset({1}), frozenset({2, 3}))
    # the affine wall sits at level 1 of the highest coroot direction
    ri, level = W.gen_wall[2]
    assert level == 1
    # all other generator walls pass through the origin
    assert W.gen_wall[0][1] == 0 and W.gen_wall[1][1] == 0


def test_ball_sizes_match_bfs(W):
    dist, _ = oracle.cayley_bfs(W, 6)
    for L in range(7):
        expected = sum(1 for d in dist.values() if d <= L)
        assert len(ball(W, L)) == expected
    assert len(ball(W, 2)) == 9


def test_length_equals_cayley_distance(W):
    dist, _ = oracle.cayley_bfs(W, 6)
    for key, d in dist.items():
        assert W.length_key(key) == d


def test_descents_against_length_drop(W):
    dist, _ = oracle.cayley_bfs(W, 5)
    inner = [k for k, d in dist.items() if d <= 4]
    for key in inner:
        w = GroupElement(W, key)
        for s in (1, 2, 3):
            left_drop = dist[W.lmul_gen(s, key)] < dist[key]
            right_drop = dist[W.rmul_gen(key, s)] < dist[key]
            assert (s in descents(w, "left")) == left_drop
            assert (s in descents(w, "right")) == right_drop


def all_reduced_words(W, key):
    if key == IDENTITY_KEY:
        yield ()
        return
    for s in W.left_descents_key(key):
        for rest in all_reduced_words(W, W.lmul_gen(s, key)):
            yield (s,) + rest


def test_canonical_word_is_lex_least_reduced(W):
    for w in ball(W, 4):
        words = sorted(all_reduced_words(W, w.key))
        assert w.word == words[0]
        assert element_from_word(W, w.word) == w
        assert len(w.word) == w.length


def test_bruhat_against_subword_oracle(W):
    elems = sorted(ball(W, 5), key=lambda w: (w.length, w.word))
    _, parent = oracle.cayley_bfs(W, 5)
    for w in elems:
        wword = oracle.word_from_parents(parent, w.key)
        cone = oracle.subword_cone(W, wword)
        for y in elems:
            assert bruhat_leq(y, w) == (y.key in cone)


def test_lower_cone_matches_oracle(W):
    _, parent = oracle.cayley_bfs(W, 4)
    for w in ball(W, 4):
        wword = oracle.word_from_parents(parent, w.key)
        assert {z.key for z in lower_cone(w)} == oracle.subword_cone(W, wword)


def test_interval_is_filtered_cone(W):
    elems = sorted(ball(W, 5), key=lambda w: (w.length, w.word))
    tops = [w for w in elems if w.length in (4, 5)]
    for w in tops[::2]:
        cone = lower_cone(w)
        for y in elems[::3]:
            expected = {z for z in cone if bruhat_leq(y, z)}
            if not bruhat_leq(y, w):
                expected = set()
            assert interval(y, w) == expected


def test_interval_examples(W):
    e = W.identity()
    top = element_from_word(W, (2, 1))
    assert {z.word_str for z in interval(e, top)} == {"e", "1", "2", "21"}
    s1 = element_from_word(W, (1,))
    s2 = element_from_word(W, (2,))
    assert interval(s1, s2) == set()
    assert interval(s1, s1) == {s1}


def test_words_parse_and_canonicalize(W):
    assert parse_word("1213") == (1, 2, 1, 3)
    assert parse_word("e") == () == parse_word("")
    assert element_from_word(W, (3, 3)).is_identity()
    assert element_from_word(W, (1, 1, 2)) == element_from_word(W, (2,))
    with pytest.raises(ValueError):
        element_from_word(W, (0,))
    with pytest.raises(ValueError):
        element_from_word(W, (4,))


def test_translation_u1(W):
    u1 = element_from_word(W, (1, 2, 1, 2, 3, 1, 2, 1, 2, 3))
    assert u1.length == 10
    assert u1.linear == ((1, 0), (0, 1))
    assert (u1 * u1).length == 20
    assert is_reduced_product(u1, u1)
    assert (u1 * u1).translation == tuple(2 * t for t in u1.translation)


def test_inverse_properties(W):
    for w in ball(W, 5):
        wi = w.inverse()
        assert (w * wi).is_identity()
        assert wi.inverse() == w
        assert wi.length == w.length
        assert descents(wi, "right") == descents(w, "left")


def test_weighted_length_sums_letter_weights(W):
    _, parent = oracle.cayley_bfs(W, 5)
    wf = WeightFunction(3, 2)
    for w in ball(W, 5):
        word = oracle.word_from_parents(parent, w.key)
        expected = sum(3 if s == 1 else 2 for s in word)
        assert weighted_length(w, wf) == expected
    assert weighted_length(W.identity(), wf) == 0


def test_weight_function_validation():
    with pytest.raises(ValueError):
        WeightFunction(0, 1)
    assert WeightFunction(5, 2).ratio == pytest.approx(2.5)


def test_load_group_round_trip(tmp_path, W):
    cfg = W.to_config()
    W2 = load_group(cfg)
    assert W2.positive_roots == W.positive_roots
    assert W2.gen_maps == W.gen_maps
    path = tmp_path / "group.json"
    path.write_text(json.dumps(cfg))
    W3 = load_group(str(path))
    assert W3.coroot_forms == W.coroot_forms
    assert load_group("g2").x0_num == W.x0_num


def test_load_group_rejects_bad_configs(W):
    cfg = W.to_config()
    bad = dict(cfg, affine_node=1)
    with pytest.raises(ValueError):
        load_group(bad)
    bad = dict(cfg, weights=[1, 1, 2])  # splits a conjugacy class
    with pytest.raises(ValueError):
        load_group(bad)


def test_alcove_geometry(W):
    e = W.identity()
    assert e.alcove_address() == (0, 0, 0, 0, 0, 0)
    assert set(e.alcove_vertices()) == set(W.fundamental_vertices)
    # alcoves of distinct elements are distinct
    seen = {}
    for w in ball(W, 4):
        vs = frozenset(w.alcove_vertices())
        assert vs not in seen.values()
        seen[w] = vs


words = st.lists(st.integers(1, 3), max_size=12)


@given(words)
@settings(max_examples=60, deadline=None)
def test_length_bounded_by_word_length(word):
    W = g2_affine()
    w = element_from_word(W, word)
    assert w.length <= len(word)
    assert (w.length - len(word)) % 2 == 0


@given(words, st.lists(st.booleans(), max_size=12))
@settings(max_examples=60, deadline=None)
def test_subwords_are_bruhat_below(word, mask):
    W = g2_affine()
    w = element_from_word(W, word)
    sub = [s for s, keep in zip(word, mask) if keep]
    y = element_from_word(W, sub)
    if len(word) == w.length:  # only reduced words witness subwords
        assert bruhat_leq(y, w)
