r"""Exact combinatorics of affine Weyl groups, with $\widetilde{G}_2$ built in.

Realization
-----------
We work in simple-root coordinates of the underlying finite root system
$\Phi$ (rank 2 for $\widetilde{G}_2$): a point is $x = (x_1, x_2)$ meaning
$x_1\alpha_1 + x_2\alpha_2$.  Every positive root $\gamma$ carries the
integer *coroot form* $f_\gamma(x) = \langle x, \check\gamma\rangle$, and the
affine hyperplane arrangement is $H_{\gamma,k} = \{f_\gamma(x) = k\}$.  The
fundamental alcove is $A_0 = \{0 < f_\gamma(x) < 1\ \forall \gamma\in\Phi^+\}$;
its walls are the zero-level walls of the non-affine generators together with
$H_{\gamma_0,1}$ for $\gamma_0$ the highest short root (the highest *coroot*
direction), which is the wall of the affine generator.

A group element $w$ is stored as the integer affine map realizing the alcove
correspondence $wA_0 = A_0\sigma_w$: the map $g_w(x) = Ax + b$ with
$A \in GL_2(\mathbb{Z})$, $b \in \mathbb{Z}^2$, composed so that
$g_{ww'} = g_{w'} \circ g_w$.  Consequences used throughout:

* the alcove of $w$ is $g_w(A_0)$, and its *address* is the integer vector
  $k_\gamma(w) = \lfloor f_\gamma(g_w(x_0)) \rfloor$ over positive roots
  ($x_0$ an interior base point);
* $\ell(w) = \sum_\gamma |k_\gamma(w)|$ (separating-hyperplane count);
* the wall test on the address of $w$ reads off the *right* descents;
  left descents are the wall test on $w^{-1}$ (fixed by regression against
  brute-force length comparisons).

Everything is exact integer arithmetic; the only denominator in sight is the
global $D$ of the base point $x_0$ = barycenter of $A_0$.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

__all__ = [
    "GroupData",
    "GroupElement",
    "WeightFunction",
    "g2_affine",
    "load_group",
    "element_from_word",
    "parse_word",
    "length",
    "weighted_length",
    "descents",
    "is_reduced_product",
    "bruhat_leq",
    "lower_cone",
    "interval",
    "ball",
]

Key = tuple[int, int, int, int, int, int]  # (a11, a12, a21, a22, b1, b2)

IDENTITY_KEY: Key = (1, 0, 0, 1, 0, 0)


@dataclass(frozen=True)
class WeightFunction:
    """The weight function $L_{a,b}$ with $L(s_1)=a$, $L(s_2)=L(s_3)=b$."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError(f"weights must be >= 1, got ({self.a}, {self.b})")

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.a, self.b)


def _mat_mul(x: tuple, y: tuple) -> tuple:
    """(2x2) @ (2x2), row-major 4-tuples."""
    return (
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    )


def _mat_vec(m: tuple, v: tuple) -> tuple:
    return (m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1])


class GroupData:
    """Immutable data of one affine Weyl group realization.

    Fields follow the build contract: ``rank`` (generator count including the
    affine node), ``coxeter_matrix``, the finite root data (simple roots and
    coroot forms, all positive roots), ``affine_node`` (1-based generator
    index), per-generator ``weights``, and the base point ``x0_num / D``.
    """

    def __init__(
        self,
        name: str,
        cartan: Sequence[Sequence[int]],
        symmetrizer: Sequence[int],
        coxeter_matrix: Sequence[Sequence[int]],
        weights: Sequence[int],
    ):
        self.name = name
        dim = len(cartan)
        self.dim = dim
        self.rank = dim + 1
        self.affine_node = self.rank  # the affine generator is listed last
        self.coxeter_matrix = tuple(tuple(row) for row in coxeter_matrix)
        if len(self.coxeter_matrix) != self.rank:
            raise ValueError("coxeter_matrix size must be rank x rank")
        for i in range(self.rank):
            if self.coxeter_matrix[i][i] != 1:
                raise ValueError("coxeter_matrix diagonal must be 1")
            for j in range(self.rank):
                if i != j and self.coxeter_matrix[i][j] < 2:
                    raise ValueError("off-diagonal Coxeter orders must be >= 2")
                if self.coxeter_matrix[i][j] != self.coxeter_matrix[j][i]:
                    raise ValueError("coxeter_matrix must be symmetric")

        self.cartan = tuple(tuple(row) for row in cartan)
        self.symmetrizer = tuple(symmetrizer)
        # symmetric bilinear form B[i][j] = (alpha_i, alpha_j)
        self._bilinear = tuple(
            tuple(symmetrizer[i] * cartan[i][j] for j in range(dim))
            for i in range(dim)
        )

        self.simple_roots = tuple(
            tuple(1 if k == i else 0 for k in range(dim)) for i in range(dim)
        )
        roots, forms = self._close_root_system()
        self.positive_roots = roots        # integer coefficient vectors
        self.coroot_forms = forms          # integer linear forms f_gamma
        self.n_roots = len(roots)
        self.simple_coroots = tuple(forms[roots.index(sr)] for sr in self.simple_roots)

        # root length classes: index into sorted distinct squared norms
        norms = [self._norm2(r) for r in roots]
        distinct = sorted(set(norms))
        self.root_class = tuple(distinct.index(n) for n in norms)

        # highest coroot direction = the affine wall root gamma_0
        self._gamma0_index = self._highest_coroot_index()

        # generator walls: (root index, level); non-affine generators are the
        # simple-root zero walls, the affine one is H_{gamma_0, 1}
        walls = [(roots.index(sr), 0) for sr in self.simple_roots]
        walls.append((self._gamma0_index, 1))
        self.gen_wall = tuple(walls)

        # generator affine maps g(x) = Ax + b
        self.gen_maps = tuple(
            self.reflection_key(ri, level) for (ri, level) in walls
        )
        # linear parts of the reflections, one per positive root
        self._refl_linear = tuple(
            self._reflection_linear(ri) for ri in range(self.n_roots)
        )

        # base point: barycenter of A0, exact
        verts = self._fundamental_vertices()
        bary = [
            sum(v[t] for v in verts) / Fraction(len(verts)) for t in range(dim)
        ]
        denom = 1
        for c in bary:
            denom = denom * c.denominator // _gcd(denom, c.denominator)
        self.D = denom
        self.x0_num = tuple(int(c * denom) for c in bary)
        self._check_interior()
        self.fundamental_vertices = tuple(tuple(v) for v in verts)

        # generator conjugacy classes: components of the odd-order graph
        self.gen_classes = self._conjugacy_classes()
        self.weights = tuple(weights)
        if len(self.weights) != self.rank or any(c < 1 for c in self.weights):
            raise ValueError("need one positive weight per generator")
        for cls in self.gen_classes:
            vals = {self.weights[s - 1] for s in cls}
            if len(vals) != 1:
                raise ValueError(
                    f"weights must agree on the conjugacy class {sorted(cls)}"
                )

        # caches (single-writer; see module concurrency note)
        self._klen: dict[Key, tuple[tuple, int]] = {}
        self._ldesc: dict[Key, tuple[int, ...]] = {}
        self._word: dict[Key, tuple[int, ...]] = {}
        self._bruhat: dict[tuple[Key, Key], bool] = {}
        self._identity = GroupElement(self, IDENTITY_KEY)

    # -- construction helpers -------------------------------------------------

    def _pair(self, x: Sequence[Fraction], y: Sequence[int]) -> Fraction:
        B = self._bilinear
        return sum(
            Fraction(x[i]) * B[i][j] * y[j]
            for i in range(self.dim)
            for j in range(self.dim)
        )

    def _norm2(self, r: Sequence[int]) -> Fraction:
        return self._pair(r, r)

    def _close_root_system(self):
        dim = self.dim
        cartan = self.cartan
        roots = {tuple(sr) for sr in self.simple_roots}
        frontier = set(roots)
        while frontier:
            new = set()
            for g in frontier:
                for i in range(dim):
                    pairing = sum(g[j] * cartan[i][j] for j in range(dim))
                    img = tuple(
                        g[k] - (pairing if k == i else 0) for k in range(dim)
                    )
                    if img not in roots and all(c >= 0 for c in img):
                        new.add(img)
            roots |= new
            frontier = new
        ordered = sorted(roots, key=lambda r: (sum(r), r))
        forms = []
        for g in ordered:
            n2 = self._norm2(g)
            form = []
            for t in range(self.dim):
                unit = [Fraction(1) if k == t else Fraction(0) for k in range(dim)]
                val = 2 * self._pair(unit, g) / n2
                if val.denominator != 1:
                    raise ValueError("non-integral coroot form; data not crystallographic")
                form.append(int(val))
            forms.append(tuple(form))
        return tuple(ordered), tuple(forms)

    def _highest_coroot_index(self) -> int:
        # coefficients of each coroot in the simple-coroot basis; the highest
        # coroot dominates all others componentwise
        simple_forms = [self.coroot_forms[self.positive_roots.index(sr)]
                        for sr in self.simple_roots]
        # solve sum_i c_i * simple_forms[i] = f for each form f (the matrix
        # has the simple forms as *columns*)
        mat = [
            [simple_forms[i][j] for i in range(self.dim)]
            for j in range(self.dim)
        ]
        coeffs = [_solve_int(mat, f) for f in self.coroot_forms]
        for idx, c in enumerate(coeffs):
            if all(
                all(c[t] >= other[t] for t in range(self.dim))
                for other in coeffs
            ):
                return idx
        raise ValueError("no highest coroot; root data not irreducible?")

    def _reflection_linear(self, root_index: int) -> tuple:
        g = self.positive_roots[root_index]
        f = self.coroot_forms[root_index]
        return (
            1 - g[0] * f[0], -g[0] * f[1],
            -g[1] * f[0], 1 - g[1] * f[1],
        )

    def reflection_key(self, root_index: int, level: int) -> Key:
        """The affine map of the reflection across $H_{\\gamma, k}$:
        $x \\mapsto x - (f_\\gamma(x) - k)\\gamma$."""
        A = self._reflection_linear(root_index)
        g = self.positive_roots[root_index]
        return (*A, level * g[0], level * g[1])

    def _fundamental_vertices(self):
        # vertices of A0: origin plus, per non-affine wall subset, the point
        # with f_{gamma_0} = 1 and the other simple-root forms vanishing
        f0 = self.coroot_forms[self._gamma0_index]
        verts = [tuple(Fraction(0) for _ in range(self.dim))]
        simple_forms = [
            self.coroot_forms[self.positive_roots.index(sr)]
            for sr in self.simple_roots
        ]
        for leave_out in range(self.dim):
            rows = [simple_forms[i] for i in range(self.dim) if i != leave_out]
            rows.append(f0)
            rhs = [0] * (self.dim - 1) + [1]
            verts.append(tuple(_solve_frac(rows, rhs)))
        return verts

    def _check_interior(self):
        for f in self.coroot_forms:
            val = sum(f[t] * self.x0_num[t] for t in range(self.dim))
            if not (0 < val < self.D):
                raise ValueError("base point is not interior to A0")

    def _conjugacy_classes(self) -> tuple[frozenset, ...]:
        adj = {s: set() for s in range(1, self.rank + 1)}
        for s in range(1, self.rank + 1):
            for t in range(1, self.rank + 1):
                if s != t and self.coxeter_matrix[s - 1][t - 1] % 2 == 1:
                    adj[s].add(t)
        seen: set[int] = set()
        classes = []
        for s in range(1, self.rank + 1):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            classes.append(frozenset(comp))
        return tuple(classes)

    # -- element kernel -------------------------------------------------------

    def identity(self) -> "GroupElement":
        return self._identity

    def generator(self, s: int) -> "GroupElement":
        return GroupElement(self, self.gen_maps[s - 1])

    def generators(self) -> list["GroupElement"]:
        return [self.generator(s) for s in range(1, self.rank + 1)]

    def mul_key(self, x: Key, y: Key) -> Key:
        """Key of the product xy (apply the map of x, then the map of y)."""
        ax = (x[0], x[1], x[2], x[3])
        ay = (y[0], y[1], y[2], y[3])
        a = _mat_mul(ay, ax)
        b = _mat_vec(ay, (x[4], x[5]))
        return (*a, b[0] + y[4], b[1] + y[5])

    def inv_key(self, x: Key) -> Key:
        a11, a12, a21, a22, b1, b2 = x
        det = a11 * a22 - a12 * a21
        # det is +-1 for alcove maps; inverse is exact
        if det == 1:
            inv = (a22, -a12, -a21, a11)
        elif det == -1:
            inv = (-a22, a12, a21, -a11)
        else:  # pragma: no cover - guarded by construction
            raise ValueError("non-unimodular element key")
        nb = _mat_vec(inv, (b1, b2))
        return (*inv, -nb[0], -nb[1])

    def lmul_gen(self, s: int, x: Key) -> Key:
        return self.mul_key(self.gen_maps[s - 1], x)

    def rmul_gen(self, x: Key, s: int) -> Key:
        return self.mul_key(x, self.gen_maps[s - 1])

    def address_length(self, x: Key) -> tuple[tuple, int]:
        """Alcove address (k_gamma over positive roots) and length."""
        memo = self._klen
        hit = memo.get(x)
        if hit is not None:
            return hit
        D = self.D
        x0 = self.x0_num
        p1 = x[0] * x0[0] + x[1] * x0[1] + D * x[4]
        p2 = x[2] * x0[0] + x[3] * x0[1] + D * x[5]
        ks = []
        total = 0
        for (f1, f2) in self.coroot_forms:
            k = (f1 * p1 + f2 * p2) // D
            ks.append(k)
            total += k if k >= 0 else -k
        res = (tuple(ks), total)
        memo[x] = res
        return res

    def length_key(self, x: Key) -> int:
        return self.address_length(x)[1]

    def right_descents_key(self, x: Key) -> tuple[int, ...]:
        ks = self.address_length(x)[0]
        out = []
        for s, (ri, level) in enumerate(self.gen_wall, start=1):
            if level == 0:
                if ks[ri] <= -1:
                    out.append(s)
            else:
                if ks[ri] >= level:
                    out.append(s)
        return tuple(out)

    def left_descents_key(self, x: Key) -> tuple[int, ...]:
        memo = self._ldesc
        hit = memo.get(x)
        if hit is None:
            hit = self.right_descents_key(self.inv_key(x))
            memo[x] = hit
        return hit

    def word_key(self, x: Key) -> tuple[int, ...]:
        """Canonical (ShortLex-least) reduced word, via greedy smallest
        left descent."""
        memo = self._word
        hit = memo.get(x)
        if hit is not None:
            return hit
        letters = []
        cur = x
        trail = []
        while cur != IDENTITY_KEY:
            cached = memo.get(cur)
            if cached is not None:
                letters.extend(cached)
                break
            trail.append((cur, len(letters)))
            s = self.left_descents_key(cur)[0]
            letters.append(s)
            cur = self.lmul_gen(s, cur)
        word = tuple(letters)
        for key, start in trail:
            memo[key] = word[start:]
        return word

    # -- separating hyperplanes / reflections ---------------------------------

    def separating_reflections(self, x: Key) -> Iterable[Key]:
        """Keys of $\\sigma_H g_x$ over all hyperplanes H separating $A_0$
        from the alcove of x (each yields a Bruhat-smaller element)."""
        ks = self.address_length(x)[0]
        ax = (x[0], x[1], x[2], x[3])
        bx = (x[4], x[5])
        for ri, k in enumerate(ks):
            if k == 0:
                continue
            lin = self._refl_linear[ri]
            g = self.positive_roots[ri]
            a = _mat_mul(lin, ax)
            c = _mat_vec(lin, bx)
            rng = range(1, k + 1) if k > 0 else range(k + 1, 1)
            for m in rng:
                yield (*a, c[0] + m * g[0], c[1] + m * g[1])

    # -- weights ----------------------------------------------------------------

    def gen_weights(self, wf: Optional[WeightFunction] = None) -> tuple[int, ...]:
        """Per-generator weights; a :class:`WeightFunction` overrides the
        stored ones, sending ``a`` to the class of $s_1$ and ``b`` to the
        rest (the two-class parameterization of the $\\widetilde{G}_2$ preset).
        """
        if wf is None:
            return self.weights
        cls1 = next(c for c in self.gen_classes if 1 in c)
        return tuple(
            wf.a if s in cls1 else wf.b for s in range(1, self.rank + 1)
        )

    def root_weights(self, wf: Optional[WeightFunction] = None) -> tuple[int, ...]:
        """Hyperplane weight $c_H$ per positive root (constant on length
        classes, matching the generator whose wall lies in that class)."""
        gw = self.gen_weights(wf)
        class_w: dict[int, int] = {}
        for s, (ri, _level) in enumerate(self.gen_wall, start=1):
            cls = self.root_class[ri]
            prev = class_w.setdefault(cls, gw[s - 1])
            if prev != gw[s - 1]:
                raise ValueError("inconsistent weights within a root class")
        return tuple(class_w[c] for c in self.root_class)

    # -- serialization ---------------------------------------------------------

    def to_config(self) -> dict:
        return {
            "name": self.name,
            "cartan": [list(r) for r in self.cartan],
            "symmetrizer": list(self.symmetrizer),
            "coxeter_matrix": [list(r) for r in self.coxeter_matrix],
            "affine_node": self.affine_node,
            "weights": list(self.weights),
        }


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _solve_frac(rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[Fraction]:
    """Solve a small exact linear system (Gaussian elimination over Q)."""
    n = len(rows)
    m = [[Fraction(c) for c in rows[i]] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [c / pv for c in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def _solve_int(rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> tuple[int, ...]:
    sol = _solve_frac(rows, rhs)
    if any(c.denominator != 1 for c in sol):
        raise ValueError("expected an integral solution")
    return tuple(int(c) for c in sol)


class GroupElement:
    """One group element; hashable, immutable, cheap.

    Wraps the integer affine-map key; length, canonical word and descents are
    computed lazily through the group's memo tables.
    """

    __slots__ = ("group", "key")

    def __init__(self, group: GroupData, key: Key):
        self.group = group
        self.key = key

    # -- group structure -------------------------------------------------------

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.group, self.group.mul_key(self.key, other.key))

    def inverse(self) -> "GroupElement":
        return GroupElement(self.group, self.group.inv_key(self.key))

    def __pow__(self, n: int) -> "GroupElement":
        if n < 0:
            return self.inverse() ** (-n)
        out = self.group.identity()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_identity(self) -> bool:
        return self.key == IDENTITY_KEY

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupElement) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    # -- cached combinatorics ----------------------------------------------------

    @property
    def length(self) -> int:
        return self.group.length_key(self.key)

    @property
    def word(self) -> tuple[int, ...]:
        return self.group.word_key(self.key)

    @property
    def word_str(self) -> str:
        return "".join(str(s) for s in self.word) or "e"

    def left_descents(self) -> tuple[int, ...]:
        return self.group.left_descents_key(self.key)

    def right_descents(self) -> tuple[int, ...]:
        return self.group.right_descents_key(self.key)

    # -- geometry ----------------------------------------------------------------

    @property
    def linear(self) -> tuple[tuple[int, int], tuple[int, int]]:
        k = self.key
        return ((k[0], k[1]), (k[2], k[3]))

    @property
    def translation(self) -> tuple[int, int]:
        return (self.key[4], self.key[5])

    def alcove_address(self) -> tuple[int, ...]:
        return self.group.address_length(self.key)[0]

    def alcove_vertices(self) -> list[tuple[Fraction, Fraction]]:
        """Exact vertices of the alcove of this element."""
        k = self.key
        out = []
        for v in self.group.fundamental_vertices:
            x = k[0] * v[0] + k[1] * v[1] + k[4]
            y = k[2] * v[0] + k[3] * v[1] + k[5]
            out.append((Fraction(x), Fraction(y)))
        return out

    def __repr__(self) -> str:
        return f"<{self.word_str}>"


# ---------------------------------------------------------------------------
# presets and config loading
# ---------------------------------------------------------------------------


def g2_affine(a: int = 1, b: int = 1) -> GroupData:
    """The affine Weyl group of type $\\widetilde{G}_2$.

    Presentation $(s_1s_2)^6 = (s_2s_3)^3 = (s_1s_3)^2 = 1$; $s_3$ is the
    affine generator; $s_1$ is the long-root reflection (weight ``a``),
    $s_2 \\sim s_3$ are short-type (weight ``b``).

    >>> W = g2_affine()
    >>> [W.generator(s).length for s in (1, 2, 3)]
    [1, 1, 1]
    >>> (W.generator(1) * W.generator(3)) == (W.generator(3) * W.generator(1))
    True
    """
    return GroupData(
        name="g2",
        cartan=[[2, -1], [-3, 2]],
        symmetrizer=[3, 1],
        coxeter_matrix=[[1, 6, 2], [6, 1, 3], [2, 3, 1]],
        weights=[a, b, b],
    )


_PRESETS = {"g2": g2_affine}


def load_group(source) -> GroupData:
    """Load a group from a preset name, a config dict, or a JSON file path.

    The config format mirrors :meth:`GroupData.to_config`; the affine node
    must be the last generator index.
    """
    if isinstance(source, str) and source in _PRESETS:
        return _PRESETS[source]()
    if isinstance(source, dict):
        cfg = source
    else:
        with open(source, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    rank = len(cfg["coxeter_matrix"])
    if cfg.get("affine_node", rank) != rank:
        raise ValueError("the affine node must be the last generator")
    return GroupData(
        name=cfg.get("name", "custom"),
        cartan=cfg["cartan"],
        symmetrizer=cfg["symmetrizer"],
        coxeter_matrix=cfg["coxeter_matrix"],
        weights=cfg.get("weights", [1] * rank),
    )


# ---------------------------------------------------------------------------
# word-level operations
# ---------------------------------------------------------------------------


def element_from_word(data: GroupData, word: Iterable[int]) -> GroupElement:
    """Multiply out a generator-index sequence (1-based, need not be reduced).

    >>> W = g2_affine()
    >>> element_from_word(W, (3, 3)).is_identity()
    True
    >>> element_from_word(W, (1, 2, 1, 2, 3, 1, 2, 1, 2, 3)).length
    10
    """
    key = IDENTITY_KEY
    for s in word:
        if not 1 <= s <= data.rank:
            raise ValueError(f"generator index {s} out of range 1..{data.rank}")
        key = data.rmul_gen(key, s)
    el = GroupElement(data, key)
    _ = el.length, el.word  # canonicalize eagerly
    return el


def parse_word(text: str) -> tuple[int, ...]:
    """Digit-string notation: '1213' -> (1, 2, 1, 3); 'e' -> ()."""
    if text in ("", "e"):
        return ()
    return tuple(int(ch) for ch in text)


def length(w: GroupElement) -> int:
    return w.length


def descents(w: GroupElement, side: str = "left") -> tuple[int, ...]:
    """Descent set on the requested side ('left' or 'right')."""
    if side == "left":
        return w.left_descents()
    if side == "right":
        return w.right_descents()
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def is_reduced_product(x: GroupElement, y: GroupElement) -> bool:
    return (x * y).length == x.length + y.length


def weighted_length(w: GroupElement, wf: Optional[WeightFunction] = None) -> int:
    """$L(w) = \\sum_{H \\in \\mathrm{sep}(A_0, wA_0)} c_H$, exactly the sum of
    generator weights along any reduced word."""
    rw = w.group.root_weights(wf)
    ks = w.alcove_address()
    return sum(c * (k if k >= 0 else -k) for c, k in zip(rw, ks))


def bruhat_leq(y: GroupElement, w: GroupElement) -> bool:
    """Bruhat order via the lifting recursion, memoized in the group.

    With s the smallest left descent of w: if sy < y then y <= w iff
    sy <= sw, otherwise y <= w iff y <= sw.
    """
    G = y.group
    memo = G._bruhat
    ky, kw = y.key, w.key
    path = []
    while True:
        res = memo.get((ky, kw))
        if res is not None:
            break
        if ky == kw:
            res = True
            break
        if G.length_key(kw) <= G.length_key(ky):
            res = False
            break
        path.append((ky, kw))
        s = G.left_descents_key(kw)[0]
        kw = G.lmul_gen(s, kw)
        if s in G.left_descents_key(ky):
            ky = G.lmul_gen(s, ky)
    for pair in path:
        memo[pair] = res
    return res


def lower_cone(w: GroupElement) -> set[GroupElement]:
    """All z <= w, by the subword dynamic program over the canonical word."""
    G = w.group
    keys = {IDENTITY_KEY}
    for s in w.word:
        keys |= {G.rmul_gen(k, s) for k in keys}
    return {GroupElement(G, k) for k in keys}


def interval(y: GroupElement, w: GroupElement) -> set[GroupElement]:
    """The Bruhat interval [y, w]; empty when the endpoints are incomparable.

    Enumerates downward from w (reflections across separating hyperplanes
    reach every cover) and filters by bruhat_leq(y, .); equivalent to
    filtering lower_cone(w), but only explores candidates above length(y).
    """
    G = y.group
    if not bruhat_leq(y, w):
        return set()
    ly = y.length
    visited = {w.key}
    members = {w.key}
    frontier = [w.key]
    while frontier:
        nxt = []
        for x in frontier:
            for z in G.separating_reflections(x):
                if z in visited:
                    continue
                visited.add(z)
                if G.length_key(z) < ly:
                    continue
                if bruhat_leq(y, GroupElement(G, z)):
                    members.add(z)
                    nxt.append(z)
        frontier = nxt
    return {GroupElement(G, k) for k in members}


def ball(data: GroupData, L: int) -> set[GroupElement]:
    """All w with length(w) <= L, breadth-first with canonical dedup.

    >>> len(ball(g2_affine(), 2))
    9
    """
    seen = {IDENTITY_KEY}
    frontier = [IDENTITY_KEY]
    for cur_len in range(L):
        nxt = []
        for x in frontier:
            for s in range(1, data.rank + 1):
                z = data.rmul_gen(x, s)
                if z not in seen and data.length_key(z) == cur_len + 1:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return {GroupElement(data, k) for k in seen}
