"""Exact alcove geometry: translations, half-space regions, stability.

A *translation* is an element $u$ whose affine map has identity linear part
and nonzero vector $\\bar u$, so that $uA_0 = A_0 + \\bar u$.  The orbit of
$\\bar u$ under the finite linear group generated by the reflections through
the origin gives vectors $\\bar u_1, \\dots, \\bar u_n$ with companion
elements $u_m$ (all of one length $M$); powers satisfy $u_m^e = t_{e\\bar
u_m}$ and are built directly as keys.

The region $h(z)$ is the intersection of the extreme separating half-spaces
between $A_0$ and $zA_0$, one per positive-root direction: the alcove
address $k_\\gamma(z)$ yields $f_\\gamma > k_\\gamma$ when $k_\\gamma > 0$
and $f_\\gamma < k_\\gamma + 1$ when $k_\\gamma < 0$.  Regions of distinct
orbit members' powers are disjoint, which is certified here by exact
Fourier-Motzkin elimination.

Every element of an interval $[z\\cdot u_i^r,\\, z'\\cdot u_j^r]$ factors as
$z_y\\cdot u_m^e$ (reduced) for a unique orbit index $m$; the shift map
$\\varphi(y) = y\\cdot u_m^k$ carries the interval onto the one with
exponent $r+k$, and :func:`verify_stability` recomputes both intervals'
r-, P- and M-tables independently to test that they agree under
$\\varphi$.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .coxeter import GroupData, GroupElement, interval
from .hecke import KLContext, kl_tables

__all__ = [
    "TranslationDatum",
    "OrbitData",
    "HalfspaceSet",
    "StabilityReport",
    "alcove_point",
    "translation_vector",
    "omega_orbit",
    "h_region",
    "regions_disjoint",
    "is_special",
    "translation_factor",
    "orbit_factor_index",
    "interval_shift",
    "verify_stability",
]

BASE_POINT = (Fraction(3, 10), Fraction(1, 2))


def alcove_point(
    w: GroupElement, base: tuple[Fraction, Fraction] = BASE_POINT
) -> tuple[Fraction, Fraction]:
    """An interior point of the alcove $wA_0$: the image of an interior
    point of $A_0$ under $w$'s affine map $p \\mapsto Ap + t$.

    The default base point lies strictly inside $A_0$, so the image lies
    strictly inside $wA_0$ and in particular never on an arrangement
    hyperplane.
    """
    (a, b), (c, d) = w.linear
    t1, t2 = w.translation
    return (a * base[0] + b * base[1] + t1, c * base[0] + d * base[1] + t2)


def _identity_linear(data: GroupData) -> tuple:
    return (1, 0, 0, 1)


def translation_vector(w: GroupElement) -> Optional[tuple[int, int]]:
    """The vector $\\bar u$ with $wA_0 = A_0 + \\bar u$, if $w$ is a
    translation: identity linear part and $\\bar u \\ne 0$; None otherwise
    (in particular for the identity element)."""
    if w.key[:4] != _identity_linear(w.group):
        return None
    vec = w.translation
    return vec if any(vec) else None


def _translation_key(vector: Sequence[int]) -> tuple:
    return (1, 0, 0, 1, vector[0], vector[1])


@dataclass(frozen=True)
class TranslationDatum:
    """A translation element together with its vector and, once placed in
    an orbit, its 1-based index there."""

    element: GroupElement
    vector: tuple[int, int]
    orbit_index: Optional[int] = None

    @classmethod
    def from_element(cls, w: GroupElement) -> "TranslationDatum":
        vec = translation_vector(w)
        if vec is None:
            raise ValueError(f"{w.word_str!r} is not a translation")
        return cls(element=w, vector=vec)

    @classmethod
    def from_vector(cls, data: GroupData, vector: Sequence[int]) -> "TranslationDatum":
        """The element $t_{\\bar u}$ for a lattice vector; verified by
        rebuilding the element from its word."""
        vec = tuple(int(c) for c in vector)
        if not any(vec):
            raise ValueError("a translation vector must be nonzero")
        elt = GroupElement(data, _translation_key(vec))
        try:
            rebuilt = data.identity()
            for s in elt.word:
                rebuilt = rebuilt * data.generator(s)
            ok = rebuilt == elt
        except Exception:
            ok = False
        if not ok:
            raise ValueError(f"{vec} is not in the translation lattice")
        return cls(element=elt, vector=vec)


@dataclass(frozen=True)
class OrbitData:
    """The orbit $\\{\\bar u_1, \\dots, \\bar u_n\\}$ of a translation
    vector under the finite linear group, with companion elements of a
    common length.  Indices are 1-based throughout."""

    group: GroupData = field(compare=False)
    vectors: tuple[tuple[int, int], ...]
    elements: tuple[GroupElement, ...]
    length: int

    @property
    def n(self) -> int:
        return len(self.vectors)

    def vector(self, m: int) -> tuple[int, int]:
        return self.vectors[m - 1]

    def companion(self, m: int) -> GroupElement:
        return self.elements[m - 1]

    def power(self, m: int, e: int) -> GroupElement:
        """$u_m^e = t_{e\\bar u_m}$, built directly as a key."""
        v = self.vectors[m - 1]
        return GroupElement(self.group, _translation_key((e * v[0], e * v[1])))

    def index_of(self, vector: Sequence[int]) -> int:
        return self.vectors.index(tuple(vector)) + 1

    def act_index(self, linear: Sequence[int], m: int) -> int:
        """Index $k$ with $\\bar u_k = A\\,\\bar u_m$ for a flat 2x2
        matrix $A = (a_{11}, a_{12}, a_{21}, a_{22})$."""
        v = self.vectors[m - 1]
        image = (
            linear[0] * v[0] + linear[1] * v[1],
            linear[2] * v[0] + linear[3] * v[1],
        )
        return self.index_of(image)

    def to_json(self) -> dict:
        return {
            "vectors": [list(v) for v in self.vectors],
            "words": [u.word_str for u in self.elements],
            "length": self.length,
        }


def omega_orbit(
    data: GroupData,
    u: Union[TranslationDatum, GroupElement],
    conjugators: Optional[Sequence[GroupElement]] = None,
) -> OrbitData:
    """Close the vector of ``u`` under all root reflections through the
    origin, then attach companion elements.

    By default the seed vector is index 1 and the rest follow in sorted
    order.  Passing ``conjugators`` $(w_1, \\dots, w_n)$ instead orders
    the orbit as $\\bar u_i = $ vector of $w_i^{-1} u w_i$; the list must
    enumerate the orbit without repeats.  The companions' common length
    is asserted (an internal bug signal -- orbit members are conjugate
    translations, so their lengths must agree).
    """
    if isinstance(u, GroupElement):
        u = TranslationDatum.from_element(u)
    seed = u.vector
    orbit = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for p in frontier:
            for R in data._refl_linear:
                q = (R[0] * p[0] + R[1] * p[1], R[2] * p[0] + R[3] * p[1])
                if q not in orbit:
                    orbit.add(q)
                    nxt.append(q)
        frontier = nxt
    if conjugators is None:
        vectors = (seed, *sorted(orbit - {seed}))
    else:
        vecs = []
        for w in conjugators:
            v = translation_vector(w.inverse() * u.element * w)
            if v is None:
                raise ValueError(
                    f"conjugate by {w.word_str!r} is not a translation"
                )
            vecs.append(v)
        if len(set(vecs)) != len(vecs) or set(vecs) != orbit:
            raise ValueError("conjugators do not enumerate the orbit")
        vectors = tuple(vecs)
    elements = tuple(
        TranslationDatum.from_vector(data, v).element for v in vectors
    )
    lengths = {w.length for w in elements}
    if len(lengths) != 1:
        raise AssertionError(f"orbit companion lengths differ: {lengths}")
    return OrbitData(
        group=data, vectors=vectors, elements=elements, length=lengths.pop()
    )


# ---------------------------------------------------------------------------
# Half-space regions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HalfspaceSet:
    """Intersection of open half-spaces, at most one per positive root:
    ``("lower", n)`` stands for $f_\\gamma > n$ and ``("upper", n)`` for
    $f_\\gamma < n$."""

    group: GroupData = field(compare=False)
    bounds: tuple[Optional[tuple[str, int]], ...]

    @classmethod
    def from_address(cls, group: GroupData, address: Sequence[int]) -> "HalfspaceSet":
        bounds = []
        for k in address:
            if k > 0:
                # separating hyperplanes f = 1..k; the extreme half-space
                # f > k is contained in every other one -- they are nested
                assert all(k >= n for n in range(1, k + 1))
                bounds.append(("lower", k))
            elif k < 0:
                assert all(k + 1 <= n for n in range(k + 1, 1))
                bounds.append(("upper", k + 1))
            else:
                bounds.append(None)
        return cls(group=group, bounds=tuple(bounds))

    def is_universal(self) -> bool:
        return all(b is None for b in self.bounds)

    def contains_alcove(self, z: GroupElement) -> bool:
        """Whether the open alcove $zA_0$ satisfies every bound."""
        addr = z.alcove_address()
        for k, b in zip(addr, self.bounds):
            if b is None:
                continue
            kind, n = b
            if kind == "lower" and k < n:
                return False
            if kind == "upper" and k >= n:
                return False
        return True

    def contains_point(self, point: Sequence) -> bool:
        """Strict membership of an exact point."""
        for f, b in zip(self.group.coroot_forms, self.bounds):
            if b is None:
                continue
            val = f[0] * Fraction(point[0]) + f[1] * Fraction(point[1])
            kind, n = b
            if kind == "lower" and not val > n:
                return False
            if kind == "upper" and not val < n:
                return False
        return True

    def subset(self, other: "HalfspaceSet") -> bool:
        """Whether every constraint of ``other`` is implied by ``self``."""
        for mine, theirs in zip(self.bounds, other.bounds):
            if theirs is None:
                continue
            if mine is None or mine[0] != theirs[0]:
                return False
            if theirs[0] == "lower" and mine[1] < theirs[1]:
                return False
            if theirs[0] == "upper" and mine[1] > theirs[1]:
                return False
        return True

    def translate(self, vector: Sequence[int]) -> "HalfspaceSet":
        """The image under $t_{\\bar v}$: each bound shifts by
        $f_\\gamma(\\bar v)$."""
        out = []
        for f, b in zip(self.group.coroot_forms, self.bounds):
            if b is None:
                out.append(None)
            else:
                shift = f[0] * vector[0] + f[1] * vector[1]
                out.append((b[0], b[1] + shift))
        return HalfspaceSet(group=self.group, bounds=tuple(out))

    def to_json(self) -> list:
        return [
            [ri, kind, n]
            for ri, b in enumerate(self.bounds)
            if b is not None
            for kind, n in [b]
        ]


def h_region(z: GroupElement) -> HalfspaceSet:
    """$h(z)$: per positive root, the extreme half-space separating $A_0$
    from $zA_0$ and containing $zA_0$; no bound where nothing separates."""
    return HalfspaceSet.from_address(z.group, z.alcove_address())


def _strict_constraints(h: HalfspaceSet):
    # each as (a1, a2, c) meaning a1*x1 + a2*x2 > c
    out = []
    for f, b in zip(h.group.coroot_forms, h.bounds):
        if b is None:
            continue
        kind, n = b
        if kind == "lower":
            out.append((f[0], f[1], n))
        else:
            out.append((-f[0], -f[1], -n))
    return out


def regions_disjoint(h1: HalfspaceSet, h2: HalfspaceSet) -> bool:
    """Exact infeasibility of the combined strict system by
    Fourier-Motzkin elimination."""
    cons = _strict_constraints(h1) + _strict_constraints(h2)
    # eliminate x2: pair every positive-x2 constraint with every negative one
    ones = []   # constraints on x1 alone: a*x1 > c
    pos, neg = [], []
    for a1, a2, c in cons:
        if a2 == 0:
            ones.append((a1, Fraction(c)))
        elif a2 > 0:
            pos.append((a1, a2, c))
        else:
            neg.append((a1, a2, c))
    for (a1, a2, c) in pos:
        for (b1, b2, d) in neg:
            # a2 > 0, b2 < 0: (-b2)*first + a2*second, strict + strict
            coeff = a1 * (-b2) + b1 * a2
            rhs = Fraction(c * (-b2) + d * a2)
            ones.append((coeff, rhs))
    lo, hi = None, None
    for a, c in ones:
        if a == 0:
            if c >= 0:  # 0 > c fails
                return True
        elif a > 0:
            bound = c / a
            lo = bound if lo is None else max(lo, bound)
        else:
            bound = c / a
            hi = bound if hi is None else min(hi, bound)
    if lo is not None and hi is not None and not lo < hi:
        return True
    return False


def is_special(
    data: GroupData, point: Sequence, wf=None
) -> tuple[bool, int]:
    """Whether a vertex of the arrangement is a special point.

    $m(v) = \\sum_{H \\ni v} c_H$ with $c_H$ the weight of the root class;
    $v$ is special iff $m(v)$ attains the maximum $\\sum_\\gamma c_\\gamma$
    (the value at the origin).  Raises if the point is not a vertex, i.e.
    the hyperplanes through it do not span the plane.
    """
    pt = tuple(Fraction(c) for c in point)
    weights = data.root_weights(wf)
    through = []
    for ri, f in enumerate(data.coroot_forms):
        val = f[0] * pt[0] + f[1] * pt[1]
        if val.denominator == 1:
            through.append(ri)
    forms = [data.coroot_forms[ri] for ri in through]
    if not any(
        forms[i][0] * forms[j][1] - forms[i][1] * forms[j][0]
        for i in range(len(forms))
        for j in range(i + 1, len(forms))
    ):
        raise ValueError(f"{point} is not a vertex of the arrangement")
    m_value = sum(weights[ri] for ri in through)
    return m_value == sum(weights), m_value


# ---------------------------------------------------------------------------
# Translation factorization and the interval shift
# ---------------------------------------------------------------------------


def translation_factor(
    y: GroupElement, orbit: OrbitData, r: int, N: int
) -> tuple[GroupElement, int]:
    """The unique $(z_y, m)$ with $y = z_y \\cdot u_m^{r-N}$ reduced,
    i.e. $\\ell(y) = \\ell(z_y) + (r-N)\\,\\ell(u)$.

    Raises ValueError when no factorization exists (precondition
    violated) and AssertionError if two indices work, which would
    contradict uniqueness of the decomposition.
    """
    e = r - N
    if e < 1:
        raise ValueError(f"need r > N, got r={r}, N={N}")
    hits = []
    for m in range(1, orbit.n + 1):
        z = y * orbit.power(m, -e)
        if z.length + e * orbit.length == y.length:
            hits.append((z, m))
    if not hits:
        raise ValueError(
            f"{y.word_str!r} has no reduced factorization with exponent {e}"
        )
    assert len(hits) == 1, f"non-unique factorization for {y.word_str!r}"
    return hits[0]


def orbit_factor_index(
    y: GroupElement, orbit: OrbitData
) -> Optional[tuple[int, int]]:
    """The unique orbit index $m$ such that $y = (y u_m^{-1})\\cdot u_m$ is
    reduced, with the maximal exponent that still factors; None if no
    single factor comes off reduced.  The index is unique whenever it
    exists, since equal reduced products force equal orbit indices.
    """
    hits = [
        m
        for m in range(1, orbit.n + 1)
        if (y * orbit.power(m, -1)).length + orbit.length == y.length
    ]
    if not hits:
        return None
    assert len(hits) == 1, f"non-unique factor index for {y.word_str!r}"
    m = hits[0]
    e = 1
    while (
        y * orbit.power(m, -(e + 1))
    ).length + (e + 1) * orbit.length == y.length:
        e += 1
    return m, e


def interval_shift(
    lo: GroupElement, hi: GroupElement, orbit: OrbitData, k: int
) -> dict[GroupElement, GroupElement]:
    """The bijection $\\varphi(y) = y \\cdot u_m^k$ on $[lo, hi]$, where
    $m$ is each element's orbit factor index.

    Writing $y = z_y u_m^e$ reduced, this is exactly the exponent-shift
    map $z_y u_m^e \\mapsto z_y u_m^{e+k}$.  Raises when the interval is
    empty or some member has no reduced translation factor.
    """
    members = interval(lo, hi)
    if not members:
        raise ValueError(
            f"[{lo.word_str}, {hi.word_str}] is empty; endpoints incomparable"
        )
    out = {}
    for y in members:
        res = orbit_factor_index(y, orbit)
        if res is None:
            raise ValueError(
                f"{y.word_str!r} admits no reduced translation factor"
            )
        m, _ = res
        out[y] = y * orbit.power(m, k)
    if len(set(out.values())) != len(members):
        raise AssertionError("shift map failed to stay injective")
    return out


# ---------------------------------------------------------------------------
# Stability verification
# ---------------------------------------------------------------------------


def _digest(obj) -> str:
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


@dataclass
class StabilityReport:
    """Outcome of comparing the r-, P- and M-tables of two intervals
    $[z u_i^r, z' u_j^r]$ and $[z u_i^{r+k}, z' u_j^{r+k}]$ under the
    shift bijection."""

    z: GroupElement
    z_prime: GroupElement
    i: int
    j: int
    r: int
    k: int
    order: str
    defect: int
    interval_sizes: tuple[int, int]
    r_hypothesis: bool        # r > N*M, the r-table threshold
    pm_hypothesis: bool       # r > N*(M+1), the P/M threshold
    r_equal: bool
    p_equal: bool
    m_equal: bool
    counterexample: Optional[tuple[str, str, str]]  # (kind, word1, word2)
    digests: dict

    @property
    def verdict(self) -> str:
        return "equal" if self.r_equal and self.p_equal and self.m_equal else "unequal"

    def to_json(self) -> dict:
        return {
            "z": self.z.word_str,
            "z_prime": self.z_prime.word_str,
            "i": self.i,
            "j": self.j,
            "r": self.r,
            "k": self.k,
            "order": self.order,
            "defect": self.defect,
            "interval_sizes": list(self.interval_sizes),
            "r_hypothesis": self.r_hypothesis,
            "pm_hypothesis": self.pm_hypothesis,
            "r_equal": self.r_equal,
            "p_equal": self.p_equal,
            "m_equal": self.m_equal,
            "verdict": self.verdict,
            "counterexample": list(self.counterexample)
            if self.counterexample
            else None,
            "digests": self.digests,
        }


def verify_stability(
    z: GroupElement,
    z_prime: GroupElement,
    orbit: OrbitData,
    i: int,
    j: int,
    r: int,
    k: int,
    ctx: KLContext,
) -> StabilityReport:
    """Recompute both intervals' full tables independently and compare
    them under the shift bijection.

    All four corner products must be reduced.  The length thresholds
    ($r > NM$ for r-tables, $r > N(M+1)$ for P/M) are recorded as
    hypothesis flags but not enforced: equality frequently holds below
    them and checking that is precisely the point.
    """
    M = orbit.length
    corners = {}
    for (zz, idx, exp, tag) in (
        (z, i, r, "y1"),
        (z_prime, j, r, "w1"),
        (z, i, r + k, "y2"),
        (z_prime, j, r + k, "w2"),
    ):
        prod = zz * orbit.power(idx, exp)
        if prod.length != zz.length + exp * M:
            raise ValueError(
                f"{zz.word_str!r} * u_{idx}^{exp} is not a reduced product"
            )
        corners[tag] = prod
    N = z_prime.length - z.length
    y1, w1, y2, w2 = corners["y1"], corners["w1"], corners["y2"], corners["w2"]

    tab1 = kl_tables(ctx, y1, w1)
    tab2 = kl_tables(ctx, y2, w2)
    sizes = (len(tab1.members), len(tab2.members))

    if not tab1.members:
        phi = {}
    elif k == 0:
        phi = {x: x for x in tab1.members}
    else:
        phi = interval_shift(y1, w1, orbit, k)

    report = StabilityReport(
        z=z, z_prime=z_prime, i=i, j=j, r=r, k=k, order=str(ctx.order),
        defect=N, interval_sizes=sizes,
        r_hypothesis=r > N * M,
        pm_hypothesis=r > N * (M + 1),
        r_equal=True, p_equal=True, m_equal=True,
        counterexample=None,
        digests={
            "interval_1": _digest(tab1.to_json()),
            "interval_2": _digest(tab2.to_json()),
        },
    )

    if set(phi.values()) != set(tab2.members):
        report.r_equal = report.p_equal = report.m_equal = False
        report.counterexample = ("bijection", y1.word_str, y2.word_str)
        return report

    for (x, y), rp in tab1.r.items():
        if tab2.r.get((phi[x], phi[y])) != rp:
            report.r_equal = False
            report.counterexample = ("r", x.word_str, y.word_str)
            break
    else:
        extra = {(phi[x], phi[y]) for (x, y) in tab1.r}
        if extra != set(tab2.r):
            report.r_equal = False
            report.counterexample = ("r", y1.word_str, w1.word_str)

    if report.counterexample is None:
        for (x, y), pp in tab1.p.items():
            if tab2.p.get((phi[x], phi[y])) != pp:
                report.p_equal = False
                report.counterexample = ("p", x.word_str, y.word_str)
                break
        else:
            if {(phi[x], phi[y]) for (x, y) in tab1.p} != set(tab2.p):
                report.p_equal = False
                report.counterexample = ("p", y1.word_str, w1.word_str)

    if report.counterexample is None:
        for s, entries in tab1.m.items():
            mapped = {
                (phi[x], phi[y]): mp for (x, y), mp in entries.items()
            }
            if mapped != tab2.m.get(s, {}):
                report.m_equal = False
                bad = next(iter(entries))
                report.counterexample = (
                    f"m{s}", bad[0].word_str, bad[1].word_str
                )
                break

    return report
