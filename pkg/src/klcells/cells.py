"""Left cells of the affine Weyl group of type $\\tilde G_2$.

The left preorder is generated by $y \\leftarrow_L w$ whenever $C_y$ appears
with nonzero coefficient in some product $C_sC_w$; left cells are the
strongly connected components of the resulting graph.  On a finite length
ball the graph is necessarily truncated, so :func:`decompose` labels
vertices near the boundary *provisional* instead of pretending the
partition is final.

Away from the origin the group is dominated by translation families: with
$u_1 = s_1s_2s_1s_2s_3s_1s_2s_1s_2s_3$, $u = s_2s_1s_2s_1s_2s_3$ and the
twelve-element prefix set $\\Pi$, the sets $C_i = \\{z\\,u_1^r\\,w_i\\}$ and
$B_i = \\{z\\,u^r\\,w_i\\}$ ($z \\in \\Pi$, $r \\ge 7$, $w_i$ ranging over a
copy of the dihedral group generated by one finite pair) each sit inside a
single left cell.  The certificate is a short list of explicit nonzero
$M^s_{x,y}$ coefficients: the free edges $sw \\leftarrow_L w$ climb each
prefix chain, and those few $M$-coefficients close the loops.

Which $M$-coefficients are nonzero depends on the weight ratio $a/b$ only
through finitely many critical values.  :func:`ratio_sweep` replays the
descent that discovers them: compute $\\Gamma_+^s(I)$ under the
$Q$-dominant order, certify the containment that transports the generic
$M$ to every $a/b$ above the largest ratio in the exponent set $E$, then
repeat under ``OrderSpec.ratio`` at each successive critical value until
reaching $1$, finally evaluating the one-variable engine at every critical
ratio itself.

The remaining elements near the long diagonal form
$W_T = \\{z'w_0z : \\ell(z'w_0z) = \\ell(z') + \\ell(w_0) + \\ell(z)\\}$ with
$w_0$ the longest element of $\\langle s_1, s_2\\rangle$;
:func:`lowest_cell_member` decides membership by suffix stripping and
:func:`chamber_index` files each member into one of the twelve open cones
cut out by the reflection lines through the origin.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import networkx as nx

from .coxeter import (
    GroupData,
    GroupElement,
    WeightFunction,
    ball,
    bruhat_leq,
    element_from_word,
    lower_cone,
    parse_word,
)
from .laurent import GammaPoly, OrderSpec, gamma_to_json, single_to_json
from .hecke import (
    KLContext,
    c_product,
    check_star,
    critical_ratios,
    gamma_plus_set,
    m_poly,
)
from .geometry import (
    OrbitData,
    StabilityReport,
    alcove_point,
    omega_orbit,
    translation_vector,
    verify_stability,
)

__all__ = [
    "CellDecomposition",
    "CellEdge",
    "CellGraph",
    "FamilyTag",
    "Fixtures",
    "Section6Report",
    "SweepCritical",
    "SweepRegion",
    "SweepResult",
    "chamber_index",
    "decompose",
    "left_edges",
    "lowest_cell_member",
    "ratio_sweep",
    "verify_section6",
]


def _sort_key(w: GroupElement) -> tuple:
    return (w.length, w.word)


def _elt(data: GroupData, text: str) -> GroupElement:
    return element_from_word(data, parse_word(text))


# ---------------------------------------------------------------------------
# Translation-family fixtures
# ---------------------------------------------------------------------------

U1_WORD = "1212312123"
U_WORD = "212123"
Y_WORD = "3212312123"
W0_WORD = "121212"
PI_WORDS = (
    "e",
    "3",
    "23",
    "123",
    "2123",
    "32123",
    "12123",
    "312123",
    "2312123",
    "12312123",
    "212312123",
    "3212312123",
)
W1_WORDS = ("e", "1", "12", "121", "1212", "12121")
W2_WORDS = ("e", "2", "21", "212", "2121", "21212")

# Interval corners, encoded as the prefix words of the lower and upper
# endpoints together with the extra power of the translation absorbed into
# the upper endpoint: the interval with index (campaign, k, i) at exponent
# r is [z_lo * u^r * w_i, z_hi * u^(r+shift) * w_i].
_CORNERS = {
    (1, 1): ("3", Y_WORD, 0),
    (1, 2): ("312123", Y_WORD + "12123", 0),
    (2, 1): ("23", Y_WORD, 0),
    (2, 2): ("32123", "3212123", 1),
}

# The three M-families that keep each B_i chained when a/b > 2, as
# (generator, lower prefix, upper prefix, extra power upstairs).
_LINK_PAIRS = (
    (1, "123", "23212123", 0),
    (2, "23", "3", 1),
    (1, "123", "32123", 0),
)


@dataclass(frozen=True)
class FamilyTag:
    """Membership witness: ``w = prefix * u^exponent * w_index`` exactly,
    with ``kind`` naming which translation drives the family."""

    kind: str  # "C" (powers of u1) or "B" (powers of u)
    index: int  # 1-based index into the finite dihedral factor
    exponent: int
    prefix: str

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "index": self.index,
            "exponent": self.exponent,
            "prefix": self.prefix,
        }


@dataclass(frozen=True)
class Fixtures:
    """The bundled data of the translation-family analysis.

    ``pi`` is closed under dropping the first letter, so each member is a
    free edge away from its parent; ``orbit1``/``orbit2`` enumerate the
    conjugate translations $u_i = w_i^{-1} u w_i$ in the order of the
    conjugators, which makes $u^r w_i = w_i u_i^r$ hold index by index.
    """

    group: GroupData = field(compare=False)
    u1: GroupElement
    u: GroupElement
    y: GroupElement
    w0: GroupElement
    pi: tuple[GroupElement, ...]
    w1: tuple[GroupElement, ...]
    w2: tuple[GroupElement, ...]
    orbit1: OrbitData = field(compare=False)
    orbit2: OrbitData = field(compare=False)

    @classmethod
    def build(cls, data: GroupData) -> "Fixtures":
        u1 = _elt(data, U1_WORD)
        u = _elt(data, U_WORD)
        y = _elt(data, Y_WORD)
        w0 = _elt(data, W0_WORD)
        pi = tuple(_elt(data, t) for t in PI_WORDS)
        w1 = tuple(_elt(data, t) for t in W1_WORDS)
        w2 = tuple(_elt(data, t) for t in W2_WORDS)
        fx = cls(
            group=data,
            u1=u1,
            u=u,
            y=y,
            w0=w0,
            pi=pi,
            w1=w1,
            w2=w2,
            orbit1=omega_orbit(data, u1, conjugators=w1),
            orbit2=omega_orbit(data, u, conjugators=w2),
        )
        fx._validate()
        return fx

    def _validate(self) -> None:
        if len(self.pi) != 12 or len(self.w1) != 6 or len(self.w2) != 6:
            raise AssertionError("fixture sets have the wrong sizes")
        for t, e in zip(PI_WORDS, self.pi):
            if e.length != (0 if t == "e" else len(t)):
                raise AssertionError(f"prefix word {t!r} is not reduced")
        keys = {e.key for e in self.pi}
        for t, e in zip(PI_WORDS, self.pi):
            parent = "e" if len(t) <= 1 else t[1:]
            if t != "e" and _elt(self.group, parent).key not in keys:
                raise AssertionError(f"{t!r} has no parent prefix in the set")
        if self.w0.length != 6 or not (self.w0 * self.w0).is_identity():
            raise AssertionError("w0 must be a length-6 involution")
        if (self.u1.length, self.u.length, self.y.length) != (10, 6, 10):
            raise AssertionError("translation or top words are not reduced")
        if self.y.key != self.pi[-1].key:
            raise AssertionError("the top prefix must close the chain")
        # The upper corner of the second interval family rides one power
        # higher: y * 12123 = 32123 * u1 and 3 * u = 3212123.
        if (self.y * _elt(self.group, "12123")).key != (
            _elt(self.group, "32123") * self.u1
        ).key:
            raise AssertionError("chain identity y*12123 = 32123*u1 fails")
        if (_elt(self.group, "3") * self.u).key != _elt(self.group, "3212123").key:
            raise AssertionError("chain identity 3*u = 3212123 fails")
        for campaign, k in _CORNERS:
            for i in range(1, 7):
                lo, hi = self.interval_bounds(campaign, k, i, 6)
                if not bruhat_leq(lo, hi):
                    raise AssertionError(
                        f"interval ({campaign},{k},{i}) has incomparable corners"
                    )

    def _campaign(self, campaign: int) -> tuple[GroupElement, tuple, OrbitData]:
        if campaign == 1:
            return self.u1, self.w1, self.orbit1
        if campaign == 2:
            return self.u, self.w2, self.orbit2
        raise ValueError(f"campaign must be 1 or 2, got {campaign}")

    def shift_factors(
        self, campaign: int, k: int, i: int
    ) -> tuple[GroupElement, GroupElement]:
        """The pair $(z, z')$ with interval corners $z\\,u_i^r$ and
        $z'\\,u_i^r$: the fixed extra power of the upper corner is absorbed
        into $z'$ so both corners carry the same exponent."""
        base, ws, _ = self._campaign(campaign)
        try:
            lo_t, hi_t, shift = _CORNERS[(campaign, k)]
        except KeyError:
            raise ValueError(f"k must be 1 or 2, got {k}") from None
        wi = ws[i - 1]
        z = _elt(self.group, lo_t) * wi
        z_prime = _elt(self.group, hi_t) * base**shift * wi
        return z, z_prime

    def interval_bounds(
        self, campaign: int, k: int, i: int, r: int
    ) -> tuple[GroupElement, GroupElement]:
        """Corners of the interval with index $(k, i)$ at exponent $r$,
        as reduced products (their lengths are checked to add up)."""
        _, _, orbit = self._campaign(campaign)
        z, z_prime = self.shift_factors(campaign, k, i)
        lo = z * orbit.power(i, r)
        hi = z_prime * orbit.power(i, r)
        if lo.length != z.length + r * orbit.length:
            raise ValueError(f"lower corner not reduced at r={r}")
        if hi.length != z_prime.length + r * orbit.length:
            raise ValueError(f"upper corner not reduced at r={r}")
        return lo, hi

    def stability(
        self, campaign: int, k: int, i: int, r: int, ctx: KLContext
    ) -> StabilityReport:
        """Compare the $(k, i)$ interval at exponents $r$ and $r+1$ under
        the exponent-shift bijection; see :func:`verify_stability`."""
        _, _, orbit = self._campaign(campaign)
        z, z_prime = self.shift_factors(campaign, k, i)
        return verify_stability(z, z_prime, orbit, i, i, r, 1, ctx)

    def link_bounds(
        self, link: int, i: int, r: int
    ) -> tuple[int, GroupElement, GroupElement]:
        """The ``link``-th auxiliary M-family for the $B_i$ chains at
        $a/b > 2$: returns (generator, lower element, upper element)."""
        s, lo_t, hi_t, shift = _LINK_PAIRS[link - 1]
        wi = self.w2[i - 1]
        lo = _elt(self.group, lo_t) * self.u**r * wi
        hi = _elt(self.group, hi_t) * self.u ** (r + shift) * wi
        return s, lo, hi

    def family_set(
        self, kind: str, i: int, exponents: Iterable[int]
    ) -> frozenset[GroupElement]:
        """The finite slice $\\{z\\,u^r\\,w_i : z \\in \\Pi,\\ r \\in
        exponents\\}$ of the family ``kind`` ("C" uses $u_1$, "B" uses
        $u$)."""
        base, ws = (self.u1, self.w1) if kind == "C" else (self.u, self.w2)
        wi = ws[i - 1]
        return frozenset(
            z * base**r * wi for r in exponents for z in self.pi
        )

    def family_membership(
        self, w: GroupElement, min_exponent: int = 7
    ) -> Optional[FamilyTag]:
        """The unique factorization ``w = z * u^r * w_i`` with ``z`` in the
        prefix set and ``r >= min_exponent``, or None."""
        for kind, base, ws in (("C", self.u1, self.w1), ("B", self.u, self.w2)):
            bvec = base.translation
            for i, wi in enumerate(ws, start=1):
                wtail = w * wi.inverse()
                for z, word in zip(self.pi, PI_WORDS):
                    t = z.inverse() * wtail
                    vec = translation_vector(t)
                    if vec is None:
                        continue
                    if vec[0] % bvec[0] or vec[1] % bvec[1]:
                        continue
                    r = vec[0] // bvec[0]
                    if r < min_exponent or vec[1] != r * bvec[1]:
                        continue
                    if t.key == (base**r).key:
                        return FamilyTag(kind, i, r, word)
        return None


# ---------------------------------------------------------------------------
# Left preorder edges and cell decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CellEdge:
    """One generation step $target \\leftarrow_L source$: $C_{target}$
    appears in $C_{gen}C_{source}$ with the recorded nonzero coefficient
    (either the leading 1 of $C_{s\\cdot source}$ or an $M$-polynomial)."""

    target: GroupElement
    source: GroupElement
    gen: int
    coefficient: object

    def to_json(self) -> dict:
        c = self.coefficient
        return {
            "target": self.target.word_str,
            "source": self.source.word_str,
            "gen": self.gen,
            "coefficient": gamma_to_json(c)
            if isinstance(c, GammaPoly)
            else single_to_json(c),
        }


def left_edges(
    ctx: KLContext, w: GroupElement, ball_elems: Iterable[GroupElement]
) -> tuple[list[CellEdge], bool]:
    """All edges out of ``w`` that stay inside ``ball_elems``, plus a flag.

    For each generator with $sw > w$ the product $C_sC_w$ contributes the
    edge $sw \\leftarrow w$ and one edge $z \\leftarrow w$ per nonzero
    $M^s_{z,w}$; the branch $sw < w$ only multiplies $C_w$ by a scalar, so
    it yields nothing but a self-loop and is dropped.  Edges whose target
    lies outside the supplied set are omitted and the flag comes back True:
    the vertex's edge set is truncated by the ball, not an error.
    """
    G = ctx.group
    ball_keys = {z.key for z in ball_elems}
    cone = lower_cone(w)
    edges: list[CellEdge] = []
    truncated = False
    for s in range(1, G.rank + 1):
        sw = GroupElement(G, G.lmul_gen(s, w.key))
        if sw.length < w.length:
            continue
        for tgt, coeff in c_product(ctx, s, w, cone | {sw}).items():
            if tgt.key == w.key:
                continue
            if tgt.key not in ball_keys:
                truncated = True
                continue
            edges.append(CellEdge(tgt, w, s, coeff))
    edges.sort(key=lambda e: (e.gen, _sort_key(e.target)))
    return edges, truncated


@dataclass(frozen=True)
class CellGraph:
    """The left-preorder generation graph on a vertex set, with the set of
    vertices whose out-edges were truncated by the ball."""

    vertices: tuple[GroupElement, ...]
    edges: tuple[CellEdge, ...]
    truncated: frozenset[GroupElement]

    def to_json(self) -> dict:
        return {
            "vertices": [v.word_str for v in self.vertices],
            "edges": [e.to_json() for e in self.edges],
            "truncated": sorted(v.word_str for v in self.truncated),
        }


@dataclass(frozen=True)
class CellDecomposition:
    """Strongly connected components of the left-preorder graph on a ball.

    ``provisional`` marks vertices whose component could still change if
    the ball grew: those whose length plus the widest observed edge span
    exceeds the bound, those with no incoming edge from a strictly longer
    source, and those with truncated out-edges.
    """

    group: GroupData = field(compare=False)
    order: OrderSpec
    bound: int
    graph: CellGraph
    cells: tuple[frozenset[GroupElement], ...]
    provisional: frozenset[GroupElement]

    def cell_id(self, w: GroupElement) -> int:
        for idx, cell in enumerate(self.cells):
            if w in cell:
                return idx
        raise KeyError(f"{w.word_str!r} is not a vertex of the decomposition")

    def rows(self) -> list[tuple[str, int, bool]]:
        return [
            (w.word_str, self.cell_id(w), w in self.provisional)
            for w in self.graph.vertices
        ]

    def write_csv(self, target: Union[str, io.TextIOBase]) -> None:
        """Emit one row per element: word, cell id, provisional flag."""
        own = isinstance(target, (str, bytes))
        fh = open(target, "w", newline="") if own else target
        try:
            writer = csv.writer(fh)
            writer.writerow(["element", "cell", "provisional"])
            for word, cid, prov in self.rows():
                writer.writerow([word, cid, int(prov)])
        finally:
            if own:
                fh.close()

    def to_json(self) -> dict:
        return {
            "order": str(self.order),
            "bound": self.bound,
            "cells": [
                sorted(w.word_str for w in sorted(cell, key=_sort_key))
                for cell in self.cells
            ],
            "provisional": sorted(w.word_str for w in self.provisional),
            "graph": self.graph.to_json(),
        }


def _context_for(data: GroupData, order: OrderSpec) -> KLContext:
    if order.kind == "weight":
        return KLContext.single(data, WeightFunction(order.c, order.d))
    return KLContext(data, order)


def decompose(data: GroupData, order: OrderSpec, L: int) -> CellDecomposition:
    """Left cells of the ball of radius ``L`` as SCCs of the edge graph.

    Weight orders run on the one-variable engine at $(a, b)$; every other
    order runs the two-variable engine.  Cells are sorted by their
    (length, word)-least member.
    """
    ctx = _context_for(data, order)
    vertices = sorted(ball(data, L), key=_sort_key)
    all_edges: list[CellEdge] = []
    truncated: set[GroupElement] = set()
    for w in vertices:
        edges, flagged = left_edges(ctx, w, vertices)
        all_edges.extend(edges)
        if flagged:
            truncated.add(w)
    graph = nx.DiGraph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from((e.source, e.target) for e in all_edges)
    cells = sorted(
        (frozenset(c) for c in nx.strongly_connected_components(graph)),
        key=lambda c: min(_sort_key(w) for w in c),
    )
    span = max((e.source.length - e.target.length for e in all_edges), default=1)
    fed_from_above = {
        e.target for e in all_edges if e.source.length > e.target.length
    }
    provisional = truncated | {
        w
        for w in vertices
        if w.length + span > L or w not in fed_from_above
    }
    return CellDecomposition(
        group=data,
        order=order,
        bound=L,
        graph=CellGraph(tuple(vertices), tuple(all_edges), frozenset(truncated)),
        cells=tuple(cells),
        provisional=frozenset(provisional),
    )


# ---------------------------------------------------------------------------
# Parameter-ratio sweep
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepRegion:
    """One open ratio region with the order that certified it.

    ``certified`` is the containment test transporting the generic
    $M^s_{lo,hi}$ computed under ``order`` to every weight ratio in the
    open interval (low, high); ``high`` is None for the unbounded first
    region.  When the certificate fails the region is still reported, with
    the offending exponent as ``witness`` and no transported verdict.
    """

    low: Fraction
    high: Optional[Fraction]
    order: OrderSpec
    certified: bool
    witness: Optional[tuple[int, int]]
    m: GammaPoly
    exponents: frozenset

    @property
    def m_nonzero(self) -> bool:
        return bool(self.m)

    def to_json(self) -> dict:
        return {
            "low": str(self.low),
            "high": None if self.high is None else str(self.high),
            "order": str(self.order),
            "certified": self.certified,
            "witness": list(self.witness) if self.witness else None,
            "m": gamma_to_json(self.m),
            "m_nonzero": self.m_nonzero,
            "exponents": sorted(map(list, self.exponents)),
        }


@dataclass(frozen=True)
class SweepCritical:
    """The one-variable evaluation at a critical ratio itself."""

    ratio: Fraction
    weights: tuple[int, int]
    m: object

    @property
    def m_nonzero(self) -> bool:
        return bool(self.m)

    def to_json(self) -> dict:
        return {
            "ratio": str(self.ratio),
            "weights": list(self.weights),
            "m": single_to_json(self.m),
            "m_nonzero": self.m_nonzero,
        }


@dataclass(frozen=True)
class SweepResult:
    """The full descent for one interval and generator.

    ``variable`` records which ratio the sweep walks: "a/b" for the
    $Q$-dominant side, "b/a" for the mirrored side.  Regions are listed
    from the unbounded one downward; their low endpoints, which are
    exactly the critical ratios, each get a one-variable evaluation.
    ``capped`` reports that the iteration limit stopped the descent before
    it reached 1 — a diagnostic, never silently absorbed.
    """

    lo: GroupElement
    hi: GroupElement
    s: int
    variable: str
    regions: tuple[SweepRegion, ...]
    criticals: tuple[SweepCritical, ...]
    capped: bool

    @property
    def critical_chain(self) -> tuple[Fraction, ...]:
        return tuple(r.low for r in self.regions)

    def covers(self) -> bool:
        """True when regions and criticals tile $[1, \\infty)$: the first
        region is unbounded, consecutive bounds meet, the last low is 1."""
        if self.capped or not self.regions:
            return False
        if self.regions[0].high is not None:
            return False
        for prev, cur in zip(self.regions, self.regions[1:]):
            if cur.high != prev.low:
                return False
        if self.regions[-1].low != 1:
            return False
        return tuple(c.ratio for c in self.criticals) == self.critical_chain

    def all_nonzero(self) -> bool:
        return (
            all(r.certified and r.m_nonzero for r in self.regions)
            and all(c.m_nonzero for c in self.criticals)
            and self.covers()
        )

    def to_json(self) -> dict:
        return {
            "lo": self.lo.word_str,
            "hi": self.hi.word_str,
            "s": self.s,
            "variable": self.variable,
            "regions": [r.to_json() for r in self.regions],
            "criticals": [c.to_json() for c in self.criticals],
            "capped": self.capped,
            "covers": self.covers(),
        }


def ratio_sweep(
    lo: GroupElement,
    hi: GroupElement,
    s: int,
    mirror: bool = False,
    max_steps: int = 64,
) -> SweepResult:
    """Partition the weight-ratio half-line $[1, \\infty)$ for one interval.

    Starting from the dominant order, each step computes
    $\\Gamma_+^s([lo, hi])$ and the generic $M^s_{lo,hi}$, certifies the
    containment that makes the generic value govern the current open
    region, and descends to the largest ratio of the exponent set below
    the previous critical value, stopping at 1.  With ``mirror`` the roles
    of the two variables swap, so the walked ratio is $b/a$.

    Every critical ratio (each region's low endpoint) is then evaluated
    directly by the one-variable engine at that exact weight pair.
    """
    data = lo.group
    first_order = (
        OrderSpec.lex_q_dominant() if mirror else OrderSpec.lex_Q_dominant()
    )
    make_ratio = OrderSpec.ratio_mirror if mirror else OrderSpec.ratio
    orient = (
        (lambda exps: frozenset((j, i) for (i, j) in exps))
        if mirror
        else (lambda exps: frozenset(exps))
    )
    regions: list[SweepRegion] = []
    order = first_order
    current: Optional[Fraction] = None  # the ratio the current order pins
    prev: Optional[Fraction] = None  # upper bound of the current region
    capped = True
    for _ in range(max_steps):
        ctx = KLContext(data, order)
        exps = orient(gamma_plus_set(ctx, lo, hi, s).union())
        m = m_poly(ctx, s, lo, hi)
        ratios = critical_ratios(exps)
        if current is None:
            low = ratios[0] if ratios and ratios[0] > 1 else Fraction(1)
            ok, witness = check_star(exps, 1, low.numerator, low.denominator)
        else:
            low = current
            ok, witness = check_star(
                exps, 2, current.numerator, current.denominator, prev
            )
        regions.append(
            SweepRegion(
                low=low,
                high=prev,
                order=order,
                certified=ok,
                witness=witness,
                m=m,
                exponents=frozenset(exps),
            )
        )
        prev = low
        if low == 1:
            capped = False
            break
        below = [x for x in ratios if x < prev]
        current = below[0] if below and below[0] > 1 else Fraction(1)
        order = make_ratio(current.numerator, current.denominator)
    criticals = []
    for region in regions:
        ratio = region.low
        a, b = ratio.numerator, ratio.denominator
        if mirror:
            a, b = b, a
        ctx1 = KLContext.single(data, WeightFunction(a, b))
        criticals.append(
            SweepCritical(
                ratio=ratio, weights=(a, b), m=m_poly(ctx1, s, lo, hi)
            )
        )
    return SweepResult(
        lo=lo,
        hi=hi,
        s=s,
        variable="b/a" if mirror else "a/b",
        regions=tuple(regions),
        criticals=tuple(criticals),
        capped=capped,
    )


# ---------------------------------------------------------------------------
# Lowest two-sided cell: membership and chamber census
# ---------------------------------------------------------------------------


def lowest_cell_member(w: GroupElement) -> bool:
    """Whether $w = z'\\,w_0\\,z$ with all three lengths adding up.

    Strips reduced right factors breadth-first and tests at each stage
    whether the remaining part ends in $w_0$, i.e. whether multiplying by
    $w_0$ drops the length by $\\ell(w_0) = 6$.
    """
    data = w.group
    w0 = _elt(data, W0_WORD)
    seen = {w.key}
    frontier = [w]
    while frontier:
        next_frontier = []
        for v in frontier:
            if v.length < w0.length:
                continue
            if (v * w0).length == v.length - w0.length:
                return True
            for s in v.inverse().left_descents():
                shorter = v * data.generator(s)
                if shorter.key not in seen:
                    seen.add(shorter.key)
                    next_frontier.append(shorter)
        frontier = next_frontier
    return False


_CHAMBER_CACHE: dict[int, tuple] = {}


def _chamber_data(data: GroupData) -> tuple:
    """The twelve finite-group elements in (length, word) order and the two
    wall forms of the fundamental chamber, sign-normalized to be positive
    on the base alcove."""
    cached = _CHAMBER_CACHE.get(id(data))
    if cached is not None:
        return cached
    finite = sorted(
        (w for w in ball(data, 6) if set(w.word) <= {1, 2}), key=_sort_key
    )
    base = alcove_point(data.identity())
    walls = []
    for s in (1, 2):
        (a, b), (c, d) = data.generator(s).linear
        fixed = [
            f
            for f in data.coroot_forms
            if (f[0] * a + f[1] * c, f[0] * b + f[1] * d) == (-f[0], -f[1])
        ]
        if len(fixed) != 1:
            raise AssertionError(f"generator {s} must fix exactly one wall")
        f = fixed[0]
        if f[0] * base[0] + f[1] * base[1] < 0:
            f = (-f[0], -f[1])
        walls.append(f)
    result = (tuple(finite), tuple(walls))
    _CHAMBER_CACHE[id(data)] = result
    return result


def chamber_index(w: GroupElement) -> int:
    """Which of the twelve open cones at the origin contains $w$'s alcove.

    The cones are the images of the fundamental chamber under the finite
    group generated by $s_1, s_2$, numbered 1–12 in (length, word) order
    of those elements; the base alcove itself sits in cone 1.  Alcoves
    never meet the cutting lines, so the test is exact sign evaluation at
    an interior point.
    """
    data = w.group
    finite, walls = _chamber_data(data)
    p = alcove_point(w)
    for idx, v in enumerate(finite, start=1):
        (a, b), (c, d) = v.inverse().linear
        q = (a * p[0] + b * p[1], c * p[0] + d * p[1])
        if all(f[0] * q[0] + f[1] * q[1] > 0 for f in walls):
            return idx
    raise ValueError(f"alcove of {w.word_str!r} lies on a chamber wall")


# ---------------------------------------------------------------------------
# The full campaign
# ---------------------------------------------------------------------------


@dataclass
class Section6Report:
    """Everything the translation-family campaign establishes, bundled.

    ``stability`` carries one exponent-shift comparison per interval
    family; ``sweeps`` the ratio descents (intervals and auxiliary link
    pairs); ``certificates`` the per-family, per-weight chain closures;
    ``census`` the chamber counts of the suffix-test members of a ball.
    Failures are collected as strings, never raised.
    """

    r: int
    order: str
    stability: list[dict] = field(default_factory=list)
    sweeps: list[dict] = field(default_factory=list)
    certificates: list[dict] = field(default_factory=list)
    census: dict = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "order": self.order,
            "stability": self.stability,
            "sweeps": self.sweeps,
            "certificates": self.certificates,
            "census": self.census,
            "failures": self.failures,
            "ok": self.ok,
        }

    def summary(self) -> str:
        lines = [
            f"translation-family campaign at r={self.r} (order {self.order})"
        ]
        eq = sum(1 for s in self.stability if s["verdict"] == "equal")
        lines.append(
            f"  stability: {eq}/{len(self.stability)} interval families"
            f" agree between r={self.r} and r={self.r + 1}"
        )
        for sw in self.sweeps:
            verdict = (
                "M nonzero everywhere"
                if sw["all_nonzero"]
                else "M vanishes somewhere"
            )
            lines.append(
                f"  sweep {sw['label']} ({sw['variable']}, s={sw['s']}):"
                f" criticals {', '.join(sw['chain'])}; {verdict}"
            )
        by_weight: dict[tuple[int, int], dict[str, list[bool]]] = {}
        for cert in self.certificates:
            slot = by_weight.setdefault(
                tuple(cert["weights"]), {"C": [], "B": []}
            )
            slot[cert["family"]].append(cert["chained"])
        for (a, b), slot in sorted(by_weight.items()):
            parts = [
                f"{kind} {sum(slot[kind])}/{len(slot[kind])}"
                for kind in ("C", "B")
                if slot[kind]
            ]
            lines.append(
                f"  families chained into one cell at (a,b)=({a},{b}): "
                + ", ".join(parts)
            )
        if self.census:
            lines.append(
                f"  lowest-cell census (ball {self.census['bound']}):"
                f" {self.census['total']} members, all in chambers"
                f" {sorted(int(k) for k in self.census['chambers'])}"
            )
        lines.append("  failures: " + (
            "none" if self.ok else "; ".join(self.failures)
        ))
        return "\n".join(lines)


def _certificate_pairs(
    fx: Fixtures, kind: str, i: int, ratio: Fraction, r: int
) -> list[tuple[str, int, GroupElement, GroupElement]]:
    """The labeled M-pairs whose nonvanishing chains family ``kind``-``i``
    at weight ratio ``ratio``: both interval corners for the C side and
    for the B side at a/b <= 2, the three link pairs otherwise."""
    if kind == "C":
        out = []
        for k in (1, 2):
            lo, hi = fx.interval_bounds(1, k, i, r)
            out.append((f"interval-{k}", 1, lo, hi))
        return out
    if ratio <= 2:
        out = []
        for k in (1, 2):
            lo, hi = fx.interval_bounds(2, k, i, r)
            out.append((f"interval-{k}", 2, lo, hi))
        return out
    out = []
    for link in (1, 2, 3):
        s, lo, hi = fx.link_bounds(link, i, r)
        out.append((f"link-{link}", s, lo, hi))
    return out


def verify_section6(
    data: GroupData,
    r: int = 6,
    order: Optional[OrderSpec] = None,
    weights: Sequence[tuple[int, int]] = ((1, 1), (3, 1), (1, 3), (5, 2)),
    indices: Sequence[int] = (1, 2, 3, 4, 5, 6),
    sweep_indices: Sequence[int] = (1,),
    sweep_ks: Sequence[int] = (1,),
    census_bound: int = 14,
    max_steps: int = 64,
) -> Section6Report:
    """Run the whole translation-family campaign and report every verdict.

    Parts: (1) exponent-shift stability of each interval family between
    ``r`` and ``r+1``; (2) ratio sweeps over both translation families and
    the three auxiliary link pairs, walking both $a/b$ and $b/a$ where the
    claim spans both sides; (3) chain certificates at each sampled weight
    pair — the named $M$-coefficients that close each family into a single
    left cell; (4) a chamber census of the suffix-test members of a ball.
    Sub-check failures are recorded in the report, not raised.
    """
    fx = Fixtures.build(data)
    order = order or OrderSpec.lex_Q_dominant()
    report = Section6Report(r=r, order=str(order))

    for campaign in (1, 2):
        for k in (1, 2):
            for i in indices:
                try:
                    # A fresh context per family keeps the memoized tables
                    # of disjoint intervals from accumulating.
                    sr = fx.stability(campaign, k, i, r, _context_for(data, order))
                    entry = sr.to_json()
                    entry.update(campaign=campaign, k=k, i=i)
                    report.stability.append(entry)
                    if sr.verdict != "equal":
                        report.failures.append(
                            f"stability ({campaign},{k},{i}): tables differ"
                            f" at {sr.counterexample}"
                        )
                except ValueError as exc:
                    report.failures.append(
                        f"stability ({campaign},{k},{i}): {exc}"
                    )

    def run_sweep(label, lo, hi, s, mirror, need_region, need_critical):
        """The predicates say where the claim requires M to be nonzero:
        ``need_region(low, high)`` over the open region, ``need_critical``
        at the critical ratio itself."""
        try:
            res = ratio_sweep(lo, hi, s, mirror=mirror, max_steps=max_steps)
        except ValueError as exc:
            report.failures.append(f"sweep {label}: {exc}")
            return
        entry = res.to_json()
        entry.update(
            label=label,
            chain=[str(c) for c in res.critical_chain],
            all_nonzero=res.all_nonzero(),
        )
        report.sweeps.append(entry)
        if res.capped or not res.covers():
            report.failures.append(f"sweep {label}: descent did not close")
        for region in res.regions:
            if not need_region(region.low, region.high):
                continue
            if not region.certified:
                report.failures.append(
                    f"sweep {label}: region above {region.low} uncertified"
                )
            elif not region.m_nonzero:
                report.failures.append(
                    f"sweep {label}: M vanishes on region above {region.low}"
                )
        for crit in res.criticals:
            if need_critical(crit.ratio) and not crit.m_nonzero:
                report.failures.append(
                    f"sweep {label}: M vanishes at critical {crit.ratio}"
                )

    everywhere = lambda low, high: True
    always = lambda x: True
    # The direct M for the B side is claimed nonzero only up to ratio 2
    # (inclusive); above that the link pairs take over (exclusive).
    b_region = lambda low, high: high is not None and high <= 2
    b_critical = lambda x: x <= 2
    link_region = lambda low, high: low >= 2
    link_critical = lambda x: x > 2
    for i in sweep_indices:
        for k in sweep_ks:
            lo, hi = fx.interval_bounds(1, k, i, r)
            run_sweep(
                f"C-intervals k={k} i={i}", lo, hi, 1, False, everywhere, always
            )
            run_sweep(
                f"C-intervals k={k} i={i} mirrored",
                lo, hi, 1, True, everywhere, always,
            )
            lo, hi = fx.interval_bounds(2, k, i, r)
            run_sweep(
                f"B-intervals k={k} i={i}", lo, hi, 2, False, b_region, b_critical
            )
            run_sweep(
                f"B-intervals k={k} i={i} mirrored",
                lo, hi, 2, True, everywhere, always,
            )
        for link in (1, 2, 3):
            s, lo, hi = fx.link_bounds(link, i, r)
            run_sweep(
                f"B-link-{link} i={i}",
                lo, hi, s, False, link_region, link_critical,
            )

    for i in indices:
        for a, b in weights:
            ratio = Fraction(a, b)
            ctx1 = KLContext.single(data, WeightFunction(a, b))
            for kind in ("C", "B"):
                pairs = []
                chained = True
                for label, s, lo, hi in _certificate_pairs(
                    fx, kind, i, ratio, r
                ):
                    try:
                        m = m_poly(ctx1, s, lo, hi)
                    except ValueError as exc:
                        report.failures.append(
                            f"certificate {kind}{i} at ({a},{b}) {label}:"
                            f" {exc}"
                        )
                        chained = False
                        continue
                    pairs.append(
                        {
                            "pair": label,
                            "s": s,
                            "lo": lo.word_str,
                            "hi": hi.word_str,
                            "m": single_to_json(m),
                            "m_nonzero": bool(m),
                        }
                    )
                    chained = chained and bool(m)
                report.certificates.append(
                    {
                        "family": kind,
                        "index": i,
                        "weights": [a, b],
                        "pairs": pairs,
                        "chained": chained,
                    }
                )
                if not chained:
                    report.failures.append(
                        f"certificate {kind}{i} at ({a},{b}): some M vanishes"
                    )

    counts: dict[int, int] = {}
    total = 0
    for w in sorted(ball(data, census_bound), key=_sort_key):
        if not lowest_cell_member(w):
            continue
        total += 1
        try:
            chamber = chamber_index(w)
        except ValueError as exc:
            report.failures.append(f"census: {exc}")
            continue
        counts[chamber] = counts.get(chamber, 0) + 1
    report.census = {
        "bound": census_bound,
        "total": total,
        "chambers": {str(k): v for k, v in sorted(counts.items())},
    }
    return report
