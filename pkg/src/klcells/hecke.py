r"""Kazhdan-Lusztig polynomials of the Hecke algebra with unequal parameters.

For a weight function $L$ on $(W, S)$ with values in a totally ordered
abelian group $\Gamma$ (multiplicative), the Hecke algebra has standard
basis $T_w$ with $T_s^2 = 1 + \xi_s T_s$, $\xi_s = v_s - v_s^{-1}$.  Three
families of polynomials in $\mathbb{Z}[\Gamma]$ drive everything here:

* $\mathbf{r}_{y,w}$ — coefficients of $\overline{T_w}$ on $T_y$; computed
  by the left-descent recursion
  $\mathbf{r}_{y,w} = \mathbf{r}_{sy,sw} + \xi_s\,\mathbf{r}_{y,sw}$
  (second term only when $sy > y$); order-independent.
* $\mathbf{P}_{y,w}$ — C-basis coefficients, the unique solution of the
  bar-invariance relation with $\mathbf{P}_{y,w}$ strictly order-negative
  for $y < w$; computed by descending induction inside $[y,w]$.
* $\mathbf{M}^s_{y,w}$ — the bar-invariant correction terms of
  $C_sC_w$, defined when $sy<y<w<sw$; these *depend on the total order*,
  which is the phenomenon the rest of the package investigates.

All computations are interval-local: a ``_Workspace`` holds one Bruhat
interval's member list and comparability bitmasks, and every table entry is
a pure function of (group, order, endpoints), memoized in the context.

The same recursions run over two coefficient domains: Laurent polynomials
in $(Q, q)$ with an :class:`~klcells.laurent.OrderSpec` deciding signs, or
one-variable Laurent polynomials in $v$ with $v_s = v^{L(s)}$ (the
specialization $\sigma_{a,b}$).  The one-variable mode recomputes from
scratch — it never peeks at two-variable tables — so it doubles as the
independent check for specialization consistency.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .coxeter import GroupData, GroupElement, WeightFunction, bruhat_leq
from .coxeter import interval as bruhat_interval
from .laurent import (
    GammaPoly,
    OrderSpec,
    SingleLaurent,
    add_into2,
    clean,
    gamma_to_json,
    mul_into1,
    mul_into2,
    single_to_json,
)

__all__ = [
    "KLContext",
    "GammaPartition",
    "IntervalReport",
    "r_poly",
    "p_poly",
    "m_poly",
    "mu_defect",
    "gamma_plus_set",
    "check_star",
    "critical_ratios",
    "c_product",
    "interval_report",
    "KLTables",
    "kl_tables",
]


class KLContext:
    """Memoized Kazhdan-Lusztig tables for one (group, order) pair.

    ``r_table``/``p_table`` are keyed by element-key pairs, ``m_table`` by
    (s, y, w) triples; values are raw exponent->coefficient dicts (wrapped
    into :class:`GammaPoly`/:class:`SingleLaurent` at the public surface).
    Single-writer during fill; entries are pure functions of the inputs, so
    tables built in separate contexts can be merged.
    """

    def __init__(self, group: GroupData, order: OrderSpec):
        self.group = group
        self.order = order
        self.variables = 2
        self.r_table: dict = {}
        self.p_table: dict = {}
        self.m_table: dict = {}
        self.intervals: dict = {}
        self._workspaces: dict = {}
        cls1 = next(c for c in group.gen_classes if 1 in c)
        self._vexp = tuple(
            (1, 0) if s in cls1 else (0, 1) for s in range(1, group.rank + 1)
        )
        self._zero_exp = (0, 0)
        self._sign = order.sign
        self._mul_into = mul_into2
        self._sort_exps = order.sort_ascending

    @classmethod
    def single(cls, group: GroupData, wf: WeightFunction) -> "KLContext":
        """A one-variable context at weights (a, b): $v_s = v^{L(s)}$,
        monomial signs decided by the exponent's sign."""
        ctx = cls.__new__(cls)
        ctx.group = group
        ctx.order = OrderSpec.weight(wf.a, wf.b)
        ctx.variables = 1
        ctx.r_table = {}
        ctx.p_table = {}
        ctx.m_table = {}
        ctx.intervals = {}
        ctx._workspaces = {}
        ctx._vexp = group.gen_weights(wf)
        ctx._zero_exp = 0
        ctx._sign = lambda e: (e > 0) - (e < 0)
        ctx._mul_into = mul_into1
        ctx._sort_exps = sorted
        return ctx

    # -- coefficient-domain helpers -------------------------------------------

    def one(self) -> dict:
        return {self._zero_exp: 1}

    def xi(self, s: int) -> dict:
        e = self._vexp[s - 1]
        return {e: 1, self._neg(e): -1}

    def vs(self, s: int, power: int = 1) -> dict:
        e = self._vexp[s - 1]
        if self.variables == 2:
            return {(power * e[0], power * e[1]): 1}
        return {power * e: 1}

    def _neg(self, e):
        if self.variables == 2:
            return (-e[0], -e[1])
        return -e

    def bar(self, p: Mapping) -> dict:
        neg = self._neg
        return {neg(e): c for e, c in p.items()}

    def wrap(self, p: Mapping):
        if self.variables == 2:
            return GammaPoly(dict(p))
        return SingleLaurent(dict(p))

    def poly_json(self, p: Mapping):
        return gamma_to_json(self.wrap(p)) if self.variables == 2 \
            else single_to_json(self.wrap(p))


# ---------------------------------------------------------------------------
# r-polynomials
# ---------------------------------------------------------------------------


def _r_raw(ctx: KLContext, ky, kw) -> dict:
    """r_{y,w} as a raw dict.  Tail-iterates the common-descent case, so the
    Python recursion depth is bounded by the length defect, not by length."""
    G = ctx.group
    tab = ctx.r_table
    trail = []
    while True:
        res = tab.get((ky, kw))
        if res is not None:
            break
        if ky == kw:
            res = ctx.one()
            break
        ly, lw = G.length_key(ky), G.length_key(kw)
        if lw <= ly:
            res = {}
            break
        s = G.left_descents_key(kw)[0]
        ksy = G.lmul_gen(s, ky)
        ksw = G.lmul_gen(s, kw)
        if G.length_key(ksy) < ly:
            trail.append((ky, kw))
            ky, kw = ksy, ksw
            continue
        res = dict(_r_raw(ctx, ksy, ksw))
        tmp: dict = {}
        ctx._mul_into(tmp, ctx.xi(s), _r_raw(ctx, ky, ksw))
        add_into2(res, tmp)
        res = clean(res)
        break
    tab[(ky, kw)] = res
    for pair in trail:
        tab[pair] = res
    return res


def r_poly(ctx: KLContext, y: GroupElement, w: GroupElement):
    """$\\mathbf{r}_{y,w}$; zero unless $y \\le w$, one at $y = w$.
    Order-independent."""
    return ctx.wrap(_r_raw(ctx, y.key, w.key))


# ---------------------------------------------------------------------------
# interval workspaces
# ---------------------------------------------------------------------------


class _Workspace:
    """One Bruhat interval, ordered and comparability-indexed.

    ``members`` ascend by (length, canonical word); ``up[i]`` is the bitmask
    of j with $z_i \\le z_j$ (so bit i is always set).
    """

    __slots__ = ("members", "index", "up", "lengths")

    def __init__(self, members: Sequence[GroupElement]):
        self.members = tuple(members)
        self.index = {z.key: i for i, z in enumerate(self.members)}
        self.lengths = tuple(z.length for z in self.members)
        n = len(self.members)
        up = []
        for i in range(n):
            mask = 1 << i
            zi = self.members[i]
            for j in range(i + 1, n):
                if self.lengths[j] > self.lengths[i] and bruhat_leq(zi, self.members[j]):
                    mask |= 1 << j
            up.append(mask)
        self.up = tuple(up)


def _workspace(ctx: KLContext, y: GroupElement, w: GroupElement) -> _Workspace:
    key = (y.key, w.key)
    ws = ctx._workspaces.get(key)
    if ws is None:
        members = ctx.intervals.get(key)
        if members is None:
            found = bruhat_interval(y, w)
            members = tuple(sorted(found, key=lambda z: (z.length, z.word)))
            ctx.intervals[key] = members
        ws = _Workspace(members)
        ctx._workspaces[key] = ws
    return ws


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# P-polynomials
# ---------------------------------------------------------------------------


def _p_pair(ctx: KLContext, ws: _Workspace, i: int, j: int) -> dict:
    """P_{z_i, z_j} within the workspace, by descending induction on i."""
    ki, kj = ws.members[i].key, ws.members[j].key
    tab = ctx.p_table
    res = tab.get((ki, kj))
    if res is not None:
        return res
    if i == j:
        res = ctx.one()
        tab[(ki, kj)] = res
        return res
    F: dict = {}
    between = ws.up[i] & ((1 << (j + 1)) - 1)
    for k in _bits(between):
        if k == i or not (ws.up[k] >> j) & 1:
            continue
        ctx._mul_into(F, _r_raw(ctx, ki, ws.members[k].key), _p_pair(ctx, ws, k, j))
    F = clean(F)
    if F.get(ctx._zero_exp, 0) != 0:
        raise ArithmeticError(
            f"bar-invariance failed: unit term {F[ctx._zero_exp]} in F for "
            f"P_{{{ws.members[i].word_str},{ws.members[j].word_str}}}"
        )
    neg = ctx._neg
    for e, c in F.items():
        if F.get(neg(e), 0) != -c:
            raise ArithmeticError(
                f"bar-antisymmetry failed at exponent {e} for "
                f"P_{{{ws.members[i].word_str},{ws.members[j].word_str}}}"
            )
    sign = ctx._sign
    res = {e: -c for e, c in F.items() if sign(e) < 0}
    tab[(ki, kj)] = res
    return res


def p_poly(ctx: KLContext, y: GroupElement, w: GroupElement):
    """$\\mathbf{P}_{y,w}$: 1 at $y=w$, 0 unless $y \\le w$, else the unique
    strictly order-negative solution of the (3.1) relation on $[y,w]$."""
    if y.key == w.key:
        return ctx.wrap(ctx.one())
    if not bruhat_leq(y, w):
        return ctx.wrap({})
    ws = _workspace(ctx, y, w)
    return ctx.wrap(_p_pair(ctx, ws, 0, len(ws.members) - 1))


# ---------------------------------------------------------------------------
# M-polynomials
# ---------------------------------------------------------------------------


def _m_check_pre(ctx: KLContext, s: int, y: GroupElement, w: GroupElement) -> None:
    G = ctx.group
    if s not in G.left_descents_key(y.key):
        raise ValueError(f"m_poly needs sy < y; s={s}, y={y.word_str}")
    if s in G.left_descents_key(w.key):
        raise ValueError(f"m_poly needs w < sw; s={s}, w={w.word_str}")
    if y.key == w.key or not bruhat_leq(y, w):
        raise ValueError(
            f"m_poly needs y < w; y={y.word_str}, w={w.word_str}"
        )


def _m_pair(ctx: KLContext, ws: _Workspace, s: int, i: int, j: int) -> dict:
    """M^s_{z_i, z_j} within the workspace; z_j fixed, descending on i."""
    ki, kj = ws.members[i].key, ws.members[j].key
    tab = ctx.m_table
    res = tab.get((s, ki, kj))
    if res is not None:
        return res
    G = ctx.group
    E: dict = {}
    ctx._mul_into(E, ctx.vs(s), _p_pair(ctx, ws, i, j))
    between = ws.up[i] & ((1 << j) - 1)
    for k in _bits(between):
        if k == i or not (ws.up[k] >> j) & 1:
            continue
        if s not in G.left_descents_key(ws.members[k].key):
            continue
        ctx._mul_into(E, {e: -c for e, c in _p_pair(ctx, ws, i, k).items()},
                      _m_pair(ctx, ws, s, k, j))
    E = clean(E)
    sign = ctx._sign
    res = {}
    for e, c in E.items():
        sg = sign(e)
        if sg >= 0:
            res[e] = res.get(e, 0) + c
        if sg > 0:  # bar(E_+) added back keeps M bar-invariant
            ne = ctx._neg(e)
            res[ne] = res.get(ne, 0) + c
    res = clean(res)
    tab[(s, ki, kj)] = res
    return res


def m_poly(ctx: KLContext, s: int, y: GroupElement, w: GroupElement):
    """$\\mathbf{M}^s_{y,w}$ for $sy<y<w<sw$: the unique bar-invariant
    element with $M - E \\in \\mathbb{Z}[\\Gamma_-]$ where
    $E = v_s P_{y,w} - \\sum_{y<z<w,\\,sz<z} P_{y,z} M^s_{z,w}$."""
    _m_check_pre(ctx, s, y, w)
    ws = _workspace(ctx, y, w)
    return ctx.wrap(_m_pair(ctx, ws, s, 0, len(ws.members) - 1))


def mu_defect(ctx: KLContext, s: int, y: GroupElement, w: GroupElement):
    """$\\bigl(\\sum_{y\\le z<w,\\,sz<z} P_{y,z}M^s_{z,w}\\bigr) - v_sP_{y,w}$,
    always strictly order-negative (it equals $\\overline{E_+} - E_-$)."""
    _m_check_pre(ctx, s, y, w)
    ws = _workspace(ctx, y, w)
    j = len(ws.members) - 1
    G = ctx.group
    acc: dict = {}
    for k in _bits(ws.up[0] & ((1 << j) - 1)):
        if (ws.up[k] >> j) & 1 and s in G.left_descents_key(ws.members[k].key):
            ctx._mul_into(acc, _p_pair(ctx, ws, 0, k), _m_pair(ctx, ws, s, k, j))
    ctx._mul_into(acc, ctx.vs(s),
                  {e: -c for e, c in _p_pair(ctx, ws, 0, j).items()})
    acc = clean(acc)
    sign = ctx._sign
    for e in acc:
        if sign(e) >= 0:
            raise ArithmeticError(
                f"mu defect not strictly negative at {e} for "
                f"({s}, {y.word_str}, {w.word_str})"
            )
    return ctx.wrap(acc)


# ---------------------------------------------------------------------------
# Gamma_+^s(I) and the Lemma 6.1 containment checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GammaPartition:
    """The positive-monomial set attached to an interval and generator,
    split by provenance: inverses of P-monomials (a), consecutive ratios of
    M-monomials (b), inverses of defect monomials (c)."""

    part_a: frozenset
    part_b: frozenset
    part_c: frozenset

    def union(self) -> frozenset:
        return self.part_a | self.part_b | self.part_c

    def to_json(self) -> dict:
        return {
            "a": [list(e) for e in sorted(self.part_a)],
            "b": [list(e) for e in sorted(self.part_b)],
            "c": [list(e) for e in sorted(self.part_c)],
        }


def gamma_plus_set(
    ctx: KLContext, y: GroupElement, w: GroupElement, s: int
) -> GammaPartition:
    """$\\Gamma_+^s(I)$ for $I = [y, w]$, computed from every P-, M- and
    defect polynomial of pairs inside the interval."""
    if y.key == w.key or not bruhat_leq(y, w):
        return GammaPartition(frozenset(), frozenset(), frozenset())
    ws = _workspace(ctx, y, w)
    n = len(ws.members)
    G = ctx.group
    neg = ctx._neg
    descent = [s in G.left_descents_key(z.key) for z in ws.members]
    part_a, part_b, part_c = set(), set(), set()
    for i in range(n):
        for j in _bits(ws.up[i]):
            if j == i:
                continue
            for e in _p_pair(ctx, ws, i, j):
                part_a.add(neg(e))
            if descent[i] and not descent[j]:
                m = _m_pair(ctx, ws, s, i, j)
                if m:
                    exps = ctx._sort_exps(list(m))
                    for lo, hi in zip(exps, exps[1:]):
                        part_b.add(_exp_sub(hi, lo, ctx.variables))
                dif: dict = {}
                for k in _bits(ws.up[i] & ((1 << j) - 1)):
                    if (ws.up[k] >> j) & 1 and descent[k]:
                        ctx._mul_into(dif, _p_pair(ctx, ws, i, k),
                                      _m_pair(ctx, ws, s, k, j))
                ctx._mul_into(dif, ctx.vs(s),
                              {e: -c for e, c in _p_pair(ctx, ws, i, j).items()})
                for e in clean(dif):
                    part_c.add(neg(e))
    return GammaPartition(frozenset(part_a), frozenset(part_b), frozenset(part_c))


def _exp_sub(hi, lo, variables: int):
    if variables == 2:
        return (hi[0] - lo[0], hi[1] - lo[1])
    return hi - lo


def check_star(
    exponents: Iterable[tuple[int, int]],
    variant: int,
    c: int,
    d: int,
    e: Union[Fraction, int, None] = None,
) -> tuple[bool, Optional[tuple[int, int]]]:
    """Containment tests of Lemma 6.1, exact.

    Variant 1 (set computed under LexQDominant): every (i, j) must satisfy
    i=0, j>0 or i>0 with ci+dj >= 0; then condition (*) holds for every
    weight order with a/b > c/d.

    Variant 2 (set computed under Ratio(c, d), needs c >= d >= 1 and a
    previous critical e > c/d): every (i, j) must lie in one of
    {i=0, j>0}, {i>0, i+j>=0}, {j>-i>0, -j/i>=e}, {-j>i>0, -j/i<=c/d};
    then (*) holds for e > a/b > c/d.

    Returns (ok, witness); the witness is the smallest failing exponent.
    """
    if variant not in (1, 2):
        raise ValueError(f"variant must be 1 or 2, got {variant}")
    if variant == 2:
        if e is None:
            raise ValueError("variant 2 needs the previous critical ratio e")
        e = Fraction(e)
        if not (c >= d >= 1):
            raise ValueError(f"variant 2 needs c >= d >= 1, got ({c}, {d})")
        if e <= Fraction(c, d):
            raise ValueError(f"variant 2 needs e > c/d, got e={e}, c/d={c}/{d}")
    bad = []
    for (i, j) in exponents:
        if i == 0:
            ok = j > 0
        elif variant == 1:
            ok = i > 0 and c * i + d * j >= 0
        else:
            if i > 0:
                # either inside the cone i+j>=0, or below it with the
                # critical ratio -j/i not exceeding c/d
                ok = i + j >= 0 or (-j) * d <= c * i
            else:
                # i<0: need j > -i and -j/i = j/(-i) >= e
                ok = j > -i and j * e.denominator >= e.numerator * (-i)
        if not ok:
            bad.append((i, j))
    if bad:
        return False, min(bad)
    return True, None


def critical_ratios(exponents: Iterable[tuple[int, int]]) -> list[Fraction]:
    """$E = \\{x \\in \\mathbb{Q}_{>0}\\,:\\, x = \\pm j/i,\\ j<0,\\ i\\ne 0\\}$
    over the given exponents, deduplicated, descending."""
    out = {Fraction(-j, abs(i)) for (i, j) in exponents if j < 0 and i != 0}
    return sorted(out, reverse=True)


# ---------------------------------------------------------------------------
# C-basis products and reports
# ---------------------------------------------------------------------------


def c_product(
    ctx: KLContext, s: int, w: GroupElement, ball: Iterable[GroupElement]
) -> dict[GroupElement, object]:
    """Expansion of $C_sC_w$ in the C-basis.

    $C_sC_w = (v_s+v_s^{-1})C_w$ when $sw<w$; otherwise
    $C_{sw} + \\sum_{z<w,\\,sz<z} M^s_{z,w}\\,C_z$.  The ball must contain
    $[e,w] \\cup \\{sw\\}$.
    """
    from .coxeter import lower_cone

    G = ctx.group
    ball_keys = {z.key for z in ball}
    sw = GroupElement(G, G.lmul_gen(s, w.key))
    cone = lower_cone(w)
    missing = {z.key for z in cone} - ball_keys
    if missing or sw.key not in ball_keys:
        raise ValueError("ball too small for c_product: must contain [e,w] and sw")
    if sw.length < w.length:
        return {w: ctx.wrap(clean(dict_add(ctx.vs(s), ctx.vs(s, -1))))}
    out: dict[GroupElement, object] = {sw: ctx.wrap(ctx.one())}
    for z in cone:
        if z.key == w.key or s not in G.left_descents_key(z.key):
            continue
        m = m_poly(ctx, s, z, w)
        if m:
            out[z] = m
    return out


def dict_add(p: Mapping, q: Mapping) -> dict:
    out = dict(p)
    add_into2(out, q)
    return out


@dataclass
class IntervalReport:
    """Everything computed on one interval: sorted members, sparse P-matrix,
    the M-entries for a chosen generator, and the tagged $\\Gamma_+^s$ set."""

    y: GroupElement
    w: GroupElement
    order: OrderSpec
    s: int
    elements: tuple[GroupElement, ...]
    p_entries: list  # (z1, z2, poly), z1 < z2, nonzero
    m_entries: list  # (z1, z2, poly) for the chosen s, nonzero
    gamma: GammaPartition

    def to_json(self) -> dict:
        def poly_json(p):
            return gamma_to_json(p) if isinstance(p, GammaPoly) else single_to_json(p)

        return {
            "y": self.y.word_str,
            "w": self.w.word_str,
            "order": str(self.order),
            "s": self.s,
            "size": len(self.elements),
            "elements": [z.word_str for z in self.elements],
            "p": [
                [z1.word_str, z2.word_str, poly_json(p)]
                for z1, z2, p in self.p_entries
            ],
            "m": [
                [z1.word_str, z2.word_str, poly_json(m)]
                for z1, z2, m in self.m_entries
            ],
            "gamma": self.gamma.to_json(),
        }


def interval_report(
    ctx: KLContext, y: GroupElement, w: GroupElement, s: int
) -> IntervalReport:
    """Compute the full P/M tables on $[y,w]$ plus $\\Gamma_+^s$.

    The diagonal $P_{z,z}=1$ is implicit; only nonzero off-diagonal entries
    are listed, in (length, word) order of both endpoints.
    """
    gamma = gamma_plus_set(ctx, y, w, s)  # fills the tables as a side effect
    ws = _workspace(ctx, y, w)
    G = ctx.group
    descent = [s in G.left_descents_key(z.key) for z in ws.members]
    p_entries, m_entries = [], []
    for i, zi in enumerate(ws.members):
        for j in _bits(ws.up[i]):
            if j == i:
                continue
            zj = ws.members[j]
            p = _p_pair(ctx, ws, i, j)
            if p:
                p_entries.append((zi, zj, ctx.wrap(p)))
            if descent[i] and not descent[j]:
                m = _m_pair(ctx, ws, s, i, j)
                if m:
                    m_entries.append((zi, zj, ctx.wrap(m)))
    return IntervalReport(
        y=y, w=w, order=ctx.order, s=s,
        elements=ws.members, p_entries=p_entries, m_entries=m_entries,
        gamma=gamma,
    )


@dataclass
class KLTables:
    """All nonzero off-diagonal r-, P- and M-entries on one interval,
    keyed by element pairs; ``m[s]`` covers every pair with $sx<x$ and
    $y<sy$."""

    members: tuple[GroupElement, ...]
    r: dict   # (x, y) -> poly, x < y
    p: dict   # (x, y) -> poly, x < y
    m: dict   # s -> {(x, y) -> poly}

    def to_json(self) -> dict:
        def poly_json(p):
            return gamma_to_json(p) if isinstance(p, GammaPoly) else single_to_json(p)

        def table_json(tab):
            return [
                [x.word_str, y.word_str, poly_json(q)]
                for (x, y), q in sorted(
                    tab.items(),
                    key=lambda kv: (kv[0][0].length, kv[0][0].word,
                                    kv[0][1].length, kv[0][1].word),
                )
            ]

        return {
            "elements": [z.word_str for z in self.members],
            "r": table_json(self.r),
            "p": table_json(self.p),
            "m": {str(s): table_json(tab) for s, tab in sorted(self.m.items())},
        }


def kl_tables(ctx: KLContext, y: GroupElement, w: GroupElement) -> KLTables:
    """Full r/P/M tables on $[y,w]$ for every generator at once.

    Diagonals ($r_{z,z} = P_{z,z} = 1$) are implicit; zero entries are
    omitted.  Returns empty tables when the endpoints are incomparable.
    """
    if not bruhat_leq(y, w):
        return KLTables(members=(), r={}, p={}, m={})
    ws = _workspace(ctx, y, w)
    G = ctx.group
    gens = range(1, G.rank + 1)
    descents = [G.left_descents_key(z.key) for z in ws.members]
    r_tab, p_tab = {}, {}
    m_tab: dict[int, dict] = {s: {} for s in gens}
    for i, zi in enumerate(ws.members):
        for j in _bits(ws.up[i]):
            if j == i:
                continue
            zj = ws.members[j]
            rp = _r_raw(ctx, zi.key, zj.key)
            if rp:
                r_tab[(zi, zj)] = ctx.wrap(rp)
            pp = _p_pair(ctx, ws, i, j)
            if pp:
                p_tab[(zi, zj)] = ctx.wrap(pp)
            for s in gens:
                if s in descents[i] and s not in descents[j]:
                    mp = _m_pair(ctx, ws, s, i, j)
                    if mp:
                        m_tab[s][(zi, zj)] = ctx.wrap(mp)
    return KLTables(members=ws.members, r=r_tab, p=p_tab, m=m_tab)
