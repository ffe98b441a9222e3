"""Cell-decomposition tests: preorder edges, SCCs, sweeps, the campaign.

The frozen values here were produced by independent oracle runs: edge sets
re-derived from raw C-basis products, sweep chains recomputed step by step
with explicit orders, the suffix-test census cross-checked against a
brute-force factorization search, and the campaign report checked entry by
entry.  The equal-parameter B-side vanishing is asserted as the computed
truth: both B-interval length gaps are even, so their M-coefficients vanish
at a = b for parity reasons while every other sampled weight passes.
"""

import io
import json
from fractions import Fraction

import networkx as nx
import pytest

from klcells import (
    Fixtures,
    KLContext,
    OrderSpec,
    WeightFunction,
    ball,
    bruhat_leq,
    c_product,
    chamber_index,
    decompose,
    element_from_word,
    interval,
    left_edges,
    lower_cone,
    lowest_cell_member,
    m_poly,
    parse_word,
    ratio_sweep,
    specialize,
    translation_vector,
    verify_section6,
)


def elt(W, text):
    return element_from_word(W, parse_word(text))


@pytest.fixture(scope="module")
def fx(W):
    return Fixtures.build(W)


@pytest.fixture(scope="module")
def ratio11_ctx(W):
    return KLContext.single(W, WeightFunction(1, 1))


# ---------------------------------------------------------------------------
# Fixtures: words, closure, identities, intervals, families
# ---------------------------------------------------------------------------


def test_fixture_inventory(W, fx):
    assert fx.u1.length == 10 and translation_vector(fx.u1) == (2, 3)
    assert fx.u.length == 6 and translation_vector(fx.u) == (1, 2)
    assert fx.y.length == 10
    assert fx.w0.length == 6 and fx.w0 * fx.w0 == W.identity()
    assert len(fx.pi) == 12 and len(fx.w1) == len(fx.w2) == 6
    assert fx.y == fx.pi[-1]
    # stripping one generator off the front lands on another member
    members = set(fx.pi)
    for z in fx.pi:
        if z.length == 0:
            continue
        assert any(
            (W.generator(s) * z).length == z.length - 1
            and W.generator(s) * z in members
            for s in (1, 2, 3)
        )


def test_fixture_chain_identities(W, fx):
    assert fx.y * elt(W, "12123") == elt(W, "32123") * fx.u1
    assert elt(W, "23") * fx.u == elt(W, "23212123")
    assert elt(W, "3") * fx.u == elt(W, "3212123")
    assert fx.u1 == elt(W, "12123") ** 2


def test_interval_bounds_are_reduced_products(W, fx):
    u6 = fx.u1**6
    assert fx.interval_bounds(1, 1, 1, 6) == (elt(W, "3") * u6, fx.y * u6)
    lo, hi = fx.interval_bounds(1, 2, 4, 6)
    w4 = fx.w1[3]
    assert lo == elt(W, "312123") * u6 * w4
    assert lo.length == 6 + 60 + 3
    assert hi == fx.y * elt(W, "12123") * u6 * w4
    assert hi.length == 15 + 60 + 3
    # the second B-interval pairs exponent r below with r+1 above
    lo, hi = fx.interval_bounds(2, 2, 1, 6)
    assert lo == elt(W, "32123") * fx.u**6
    assert hi == elt(W, "3212123") * fx.u**7


def test_interval_sizes(W, fx):
    sizes = {}
    for campaign, k in ((1, 1), (2, 1), (2, 2)):
        lo, hi = fx.interval_bounds(campaign, k, 1, 6)
        sizes[(campaign, k)] = len(interval(lo, hi))
    assert sizes == {(1, 1): 166, (2, 1): 108, (2, 2): 100}


def test_link_bounds(W, fx):
    s, lo, hi = fx.link_bounds(1, 1, 1)
    assert (s, lo, hi) == (1, elt(W, "123") * fx.u, elt(W, "23212123") * fx.u)
    s, lo, hi = fx.link_bounds(2, 2, 1)
    assert s == 2
    assert lo == elt(W, "23") * fx.u * fx.w2[1]
    assert hi == elt(W, "3") * fx.u**2 * fx.w2[1]


def test_stability_of_shifted_families(W, fx):
    ctx = KLContext(W, OrderSpec.lex_Q_dominant())
    rep = fx.stability(1, 1, 1, 6, ctx)
    assert rep.verdict == "equal"
    # the exponent-mixed B-interval exercises the absorbed extra power
    rep2 = fx.stability(2, 2, 1, 6, KLContext(W, OrderSpec.lex_Q_dominant()))
    assert rep2.verdict == "equal"


def test_family_set_and_membership(W, fx):
    members = fx.family_set("C", 3, (7, 8))
    assert len(members) == 24
    for w in members:
        tag = fx.family_membership(w)
        assert tag is not None
        assert (tag.kind, tag.index) == ("C", 3)
        assert tag.exponent in (7, 8)
        assert elt(W, tag.prefix) in set(fx.pi)
    b_member = fx.pi[5] * fx.u**9 * fx.w2[1]
    tag = fx.family_membership(b_member)
    assert tag is not None and tag.to_json() == {
        "kind": "B",
        "index": 2,
        "exponent": 9,
        "prefix": "32123",
    }
    # exponent 6 sits below the default threshold
    assert fx.family_membership(fx.pi[1] * fx.u1**6) is None
    assert fx.family_membership(fx.pi[1] * fx.u1**6, min_exponent=6) is not None
    assert fx.family_membership(W.identity()) is None
    assert fx.family_membership(fx.w0) is None


# ---------------------------------------------------------------------------
# Left preorder edges
# ---------------------------------------------------------------------------


def test_left_edges_identity(W, ratio11_ctx):
    edges, truncated = left_edges(ratio11_ctx, W.identity(), ball(W, 1))
    assert not truncated
    assert [(e.target.word_str, e.gen) for e in edges] == [
        ("1", 1),
        ("2", 2),
        ("3", 3),
    ]
    assert all(bool(e.coefficient) for e in edges)


def test_left_edges_order_dependence(W, ratio11_ctx):
    """The edge 1 <- 21 exists at equal weights but not generically."""
    w = elt(W, "21")
    cone = ball(W, 3)
    edges, _ = left_edges(ratio11_ctx, w, cone)
    assert {(e.target.word_str, e.gen) for e in edges} == {
        ("121", 1),
        ("1", 1),
        ("321", 3),
    }
    generic = KLContext(W, OrderSpec.lex_q_dominant())
    edges, _ = left_edges(generic, w, cone)
    assert {(e.target.word_str, e.gen) for e in edges} == {
        ("121", 1),
        ("321", 3),
    }


def test_left_edges_truncation_flag(W, ratio11_ctx):
    edges, truncated = left_edges(ratio11_ctx, elt(W, "21"), ball(W, 2))
    assert truncated
    assert {e.target.word_str for e in edges} <= {"1"}


def test_left_edges_sound_against_products(W, ratio11_ctx):
    """Every reported coefficient re-verifies by a fresh C-basis product."""
    elems = ball(W, 4)
    wide = ball(W, 5)
    for w in sorted(elems, key=lambda v: (v.length, v.word)):
        edges, _ = left_edges(ratio11_ctx, w, elems)
        for e in edges:
            table = c_product(ratio11_ctx, e.gen, w, wide)
            assert table[e.target] == e.coefficient
            assert bool(e.coefficient)


def test_pi_chain_edges_upward(W, fx):
    """Each prefix-family member generates its one-letter extensions: the
    tree edges that keep the families connected from above."""
    ctx = KLContext(W, OrderSpec.lex_Q_dominant())
    members = set(fx.pi)
    checked = 0
    for child in fx.pi:
        for s in (1, 2, 3):
            parent = W.generator(s) * child
            if parent.length != child.length - 1 or parent not in members:
                continue
            edges, _ = left_edges(ctx, parent, lower_cone(child) | {child})
            assert (child, s) in {(e.target, e.gen) for e in edges}
            checked += 1
    assert checked >= 11


# ---------------------------------------------------------------------------
# Decomposition on balls
# ---------------------------------------------------------------------------


def test_decompose_radius_zero(W):
    dec = decompose(W, OrderSpec.lex_Q_dominant(), 0)
    assert dec.cells == (frozenset({W.identity()}),)
    assert W.identity() in dec.provisional


@pytest.mark.parametrize(
    "order", [OrderSpec.lex_Q_dominant(), OrderSpec.ratio(1, 1)]
)
def test_decompose_identity_is_isolated(W, order):
    """No product ever feeds back into the identity, under any order."""
    dec = decompose(W, order, 2)
    assert len(dec.graph.vertices) == 9
    cell = dec.cells[dec.cell_id(W.identity())]
    assert cell == frozenset({W.identity()})
    assert W.identity() in dec.provisional


def test_decompose_partition_and_acyclic(W):
    dec = decompose(W, OrderSpec.ratio(1, 1), 5)
    vertices = set(dec.graph.vertices)
    assert set().union(*dec.cells) == vertices
    assert sum(len(c) for c in dec.cells) == len(vertices)
    graph = nx.DiGraph()
    graph.add_nodes_from(dec.graph.vertices)
    graph.add_edges_from((e.source, e.target) for e in dec.graph.edges)
    assert nx.is_directed_acyclic_graph(nx.condensation(graph))
    for e in dec.graph.edges:
        assert bool(e.coefficient)
    # cells listed by their least member: the first is always {e}
    assert dec.cell_id(W.identity()) == 0


def test_decompose_csv_and_json(W):
    dec = decompose(W, OrderSpec.lex_Q_dominant(), 2)
    buf = io.StringIO()
    dec.write_csv(buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "element,cell,provisional"
    assert len(lines) == 1 + len(dec.graph.vertices)
    assert lines[1] == "e,0,1"  # identity row, provisional
    json.dumps(dec.to_json())


# ---------------------------------------------------------------------------
# Ratio sweep
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def link1_sweep(W, fx):
    s, lo, hi = fx.link_bounds(1, 1, 1)
    return ratio_sweep(lo, hi, s)


def test_sweep_chain_and_verdicts(link1_sweep):
    res = link1_sweep
    assert res.variable == "a/b"
    assert not res.capped
    assert res.covers()
    assert [str(c) for c in res.critical_chain] == ["3", "2", "3/2", "1"]
    assert all(r.certified for r in res.regions)
    assert [r.m_nonzero for r in res.regions] == [True, True, False, False]
    assert [c.m_nonzero for c in res.criticals] == [True, False, False, False]
    json.dumps(res.to_json())


def test_sweep_critical_weights(link1_sweep):
    assert [c.weights for c in link1_sweep.criticals] == [
        (3, 1),
        (2, 1),
        (3, 2),
        (1, 1),
    ]


def test_sweep_mirror_covers(W, fx):
    s, lo, hi = fx.link_bounds(1, 1, 1)
    res = ratio_sweep(lo, hi, s, mirror=True)
    assert res.variable == "b/a"
    assert res.covers()
    assert all(r.certified for r in res.regions)
    # mirrored criticals evaluate at swapped weight pairs: b/a = ratio
    for crit in res.criticals:
        a, b = crit.weights
        assert Fraction(b, a) == crit.ratio


def test_sweep_sound_against_single_engine(W, fx, link1_sweep):
    """In each certified region the transported generic M specializes to
    the direct one-parameter computation at a sampled interior weight."""
    s, lo, hi = fx.link_bounds(1, 1, 1)
    for region in link1_sweep.regions:
        if region.high is None:
            sample = region.low + 1
        else:
            sample = (region.low + region.high) / 2
        a, b = sample.numerator, sample.denominator
        direct = m_poly(
            KLContext.single(W, WeightFunction(a, b)), s, lo, hi
        )
        assert specialize(region.m, WeightFunction(a, b)) == direct


# ---------------------------------------------------------------------------
# Lowest two-sided cell membership and chambers
# ---------------------------------------------------------------------------


def test_lowest_cell_member_examples(W, fx):
    assert lowest_cell_member(fx.w0)
    assert not lowest_cell_member(W.identity())
    assert not lowest_cell_member(elt(W, "3"))
    assert lowest_cell_member(elt(W, "3121212"))
    assert lowest_cell_member(elt(W, "31212123"))


def brute_force_member(W, w0, suffixes, w):
    for z in suffixes:
        if z.length > w.length - w0.length:
            continue
        head = w * z.inverse()
        if head.length != w.length - z.length:
            continue
        if (head * w0).length == head.length - w0.length:
            return True
    return False


def test_lowest_cell_member_against_brute_force(W, fx):
    suffixes = sorted(ball(W, 4), key=lambda v: v.length)
    for w in ball(W, 10):
        expected = brute_force_member(W, fx.w0, suffixes, w)
        assert lowest_cell_member(w) == expected, w.word_str


def test_chamber_index_labels_finite_alcoves(W):
    finite = sorted(
        (w for w in ball(W, 6) if set(w.word) <= {1, 2}),
        key=lambda v: (v.length, v.word),
    )
    assert len(finite) == 12
    assert [chamber_index(v) for v in finite] == list(range(1, 13))


def test_chamber_index_total(W):
    for w in ball(W, 4):
        assert 1 <= chamber_index(w) <= 12


def test_census_oracle(W):
    """Ball-14 suffix-test census, frozen from a brute-force oracle run."""
    counts = {}
    members = 0
    for w in ball(W, 14):
        if lowest_cell_member(w):
            members += 1
            idx = chamber_index(w)
            counts[idx] = counts.get(idx, 0) + 1
    assert members == 59
    assert counts == {
        2: 11, 3: 4, 4: 9, 5: 3, 6: 7, 7: 2, 8: 5, 9: 1, 10: 4, 12: 13
    }


# ---------------------------------------------------------------------------
# The bundled campaign
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def campaign(W):
    return verify_section6(
        W,
        weights=((1, 1), (3, 1)),
        indices=(1,),
        census_bound=8,
    )


@pytest.mark.slow
def test_campaign_stability_and_sweeps(campaign):
    assert len(campaign.stability) == 4
    assert all(s["verdict"] == "equal" for s in campaign.stability)
    sweeps = {s["label"]: s for s in campaign.sweeps}
    assert set(sweeps) == {
        "C-intervals k=1 i=1",
        "C-intervals k=1 i=1 mirrored",
        "B-intervals k=1 i=1",
        "B-intervals k=1 i=1 mirrored",
        "B-link-1 i=1",
        "B-link-2 i=1",
        "B-link-3 i=1",
    }
    assert sweeps["C-intervals k=1 i=1"]["chain"] == [
        "3", "2", "3/2", "4/3", "5/4", "1"
    ]
    assert sweeps["C-intervals k=1 i=1"]["all_nonzero"]
    assert sweeps["C-intervals k=1 i=1 mirrored"]["chain"] == [
        "4", "3", "2", "3/2", "4/3", "1"
    ]
    assert sweeps["C-intervals k=1 i=1 mirrored"]["all_nonzero"]
    assert sweeps["B-intervals k=1 i=1"]["chain"] == [
        "5", "4", "3", "5/2", "2", "5/3", "3/2", "1"
    ]
    assert all(s["covers"] for s in campaign.sweeps)


@pytest.mark.slow
def test_campaign_equal_parameter_boundary(campaign):
    """The only failures are the computed equal-parameter vanishings: both
    B-interval length gaps are even, so their M-coefficients are zero at
    a = b while every other sampled weight chains the families."""
    assert not campaign.ok
    assert sorted(campaign.failures) == [
        "certificate B1 at (1,1): some M vanishes",
        "sweep B-intervals k=1 i=1 mirrored: M vanishes at critical 1",
        "sweep B-intervals k=1 i=1: M vanishes at critical 1",
    ]
    chained = {
        (c["family"], tuple(c["weights"])): c["chained"]
        for c in campaign.certificates
    }
    assert chained == {
        ("C", (1, 1)): True,
        ("C", (3, 1)): True,
        ("B", (1, 1)): False,
        ("B", (3, 1)): True,
    }
    b_pairs = next(
        c["pairs"]
        for c in campaign.certificates
        if c["family"] == "B" and c["weights"] == [1, 1]
    )
    assert [p["m_nonzero"] for p in b_pairs] == [False, False]
    # ratio 3 > 2: the B certificate switches to the three link pairs
    b31 = next(
        c["pairs"]
        for c in campaign.certificates
        if c["family"] == "B" and c["weights"] == [3, 1]
    )
    assert [p["pair"] for p in b31] == ["link-1", "link-2", "link-3"]
    assert all(p["m_nonzero"] for p in b31)


@pytest.mark.slow
def test_campaign_census_and_serialization(W, campaign, fx):
    assert campaign.census["bound"] == 8
    expected = sum(1 for w in ball(W, 8) if lowest_cell_member(w))
    assert campaign.census["total"] == expected
    assert sum(campaign.census["chambers"].values()) == expected
    summary = campaign.summary()
    assert "stability: 4/4" in summary
    assert "families chained into one cell at (a,b)=(1,1): C 1/1, B 0/1" in summary
    assert "families chained into one cell at (a,b)=(3,1): C 1/1, B 1/1" in summary
    json.dumps(campaign.to_json())
