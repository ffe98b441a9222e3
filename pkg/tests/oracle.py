"""Brute-force reference implementations.

Everything here is deliberately dumb: breadth-first search on the Cayley
graph for lengths and words, the subword property for Bruhat order.  The
fast code in the package is pinned against these on small balls.
"""

from klcells.coxeter import IDENTITY_KEY, GroupData


def cayley_bfs(data: GroupData, max_dist: int):
    """BFS from the identity by right multiplication.

    Returns ``(dist, parent)`` keyed by element keys; ``parent[k]`` is
    ``(previous_key, letter)`` along one shortest word, or None at e.
    """
    dist = {IDENTITY_KEY: 0}
    parent = {IDENTITY_KEY: None}
    frontier = [IDENTITY_KEY]
    d = 0
    while frontier and d < max_dist:
        nxt = []
        for x in frontier:
            for s in range(1, data.rank + 1):
                z = data.rmul_gen(x, s)
                if z not in dist:
                    dist[z] = d + 1
                    parent[z] = (x, s)
                    nxt.append(z)
        frontier = nxt
        d += 1
    return dist, parent


def word_from_parents(parent, key):
    """Read one shortest word back off the BFS tree."""
    out = []
    while parent[key] is not None:
        key, s = parent[key]
        out.append(s)
    return tuple(reversed(out))


def subword_cone(data: GroupData, word):
    """Keys of all products of subwords of ``word``."""
    keys = {IDENTITY_KEY}
    for s in word:
        keys |= {data.rmul_gen(k, s) for k in keys}
    return keys


def bruhat_leq_subword(data: GroupData, y_key, w_word):
    """y <= w iff y is a product of some subword of a reduced word of w."""
    return y_key in subword_cone(data, w_word)


# ---------------------------------------------------------------------------
# Hecke algebra the slow way: explicit T-basis arithmetic.
#
# Elements are {element_key: laurent_dict} with laurent_dict mapping an
# exponent (an (i, j) pair for the two-variable ring, a plain int after
# specializing) to an integer coefficient.  The polynomial arithmetic is
# (re)written here on bare dicts so that nothing below shares code with the
# recursions under test.


def _eneg(e):
    return -e if isinstance(e, int) else (-e[0], -e[1])


def _pbar(p):
    """Exponent-negating ring involution."""
    return {_eneg(e): c for e, c in p.items()}


def _pacc(acc, p, scale=1):
    for e, c in p.items():
        acc[e] = acc.get(e, 0) + scale * c


def _pmul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            key = e1 + e2 if isinstance(e1, int) else (e1[0] + e2[0], e1[1] + e2[1])
            out[key] = out.get(key, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _pclean(p):
    return {e: c for e, c in p.items() if c}


def _hacc(acc, key, p, scale=None):
    tgt = acc.setdefault(key, {})
    _pacc(tgt, p) if scale is None else _pacc(tgt, _pmul(p, scale))


def _hclean(h):
    out = {}
    for k, p in h.items():
        p = _pclean(p)
        if p:
            out[k] = p
    return out


class TBasisAlgebra:
    """Products and the bar involution computed literally in the T-basis.

    ``vexp`` maps each generator to the exponent of its parameter
    $v_s$ -- ``(1, 0)`` / ``(0, 1)`` pairs for the generic two-variable
    ring, or integers $L(s)$ for a specialized one.  The quadratic
    relation gives $T_s^{-1} = T_s - \\xi_s$, and the bar involution acts by
    $\\overline{T_w} = T_{w^{-1}}^{-1}$ together with exponent negation on
    coefficients.
    """

    def __init__(self, data: GroupData, vexp):
        self.data = data
        self.vexp = dict(vexp)
        some = next(iter(self.vexp.values()))
        self.zero = 0 if isinstance(some, int) else (0, 0)
        self._bar_t = {}

    @classmethod
    def generic(cls, data: GroupData):
        cls1 = next(c for c in data.gen_classes if 1 in c)
        vexp = {
            s: ((1, 0) if s in cls1 else (0, 1))
            for s in range(1, data.rank + 1)
        }
        return cls(data, vexp)

    @classmethod
    def specialized(cls, data: GroupData, wf):
        gw = data.gen_weights(wf)
        return cls(data, {s: gw[s - 1] for s in range(1, data.rank + 1)})

    def one(self):
        return {IDENTITY_KEY: {self.zero: 1}}

    def xi(self, s):
        e = self.vexp[s]
        return {e: 1, _eneg(e): -1}

    def vs_inv(self, s):
        return {_eneg(self.vexp[s]): 1}

    def rmul_t(self, h, s):
        """h * T_s via T_y T_s = T_{ys} (+ xi_s T_y when ys < y)."""
        out = {}
        for k, p in h.items():
            ks = self.data.rmul_gen(k, s)
            _hacc(out, ks, p)
            if self.data.length_key(ks) < self.data.length_key(k):
                _hacc(out, k, p, self.xi(s))
        return _hclean(out)

    def lmul_t(self, s, h):
        """T_s * h."""
        out = {}
        for k, p in h.items():
            sk = self.data.lmul_gen(s, k)
            _hacc(out, sk, p)
            if self.data.length_key(sk) < self.data.length_key(k):
                _hacc(out, k, p, self.xi(s))
        return _hclean(out)

    def rmul_tinv(self, h, s):
        """h * T_s^{-1} = h * T_s - h * xi_s."""
        out = self.rmul_t(h, s)
        nxi = {e: -c for e, c in self.xi(s).items()}
        for k, p in h.items():
            _hacc(out, k, p, nxi)
        return _hclean(out)

    def bar_t(self, key):
        """bar(T_w) expanded in the T-basis, memoized."""
        if key not in self._bar_t:
            h = self.one()
            for s in self.data.word_key(key):
                h = self.rmul_tinv(h, s)
            self._bar_t[key] = h
        return self._bar_t[key]

    def bar(self, h):
        """bar of an arbitrary element sum(p_y T_y)."""
        out = {}
        for k, p in h.items():
            pb = _pbar(p)
            for x, q in self.bar_t(k).items():
                _hacc(out, x, q, pb)
        return _hclean(out)

    def hsub(self, h1, h2):
        out = {k: dict(p) for k, p in h1.items()}
        for k, p in h2.items():
            _hacc(out, k, {e: -c for e, c in p.items()})
        return _hclean(out)


class BarInvariantSolver:
    """Second route to the P- and M-polynomials.

    Instead of the defining recursions this solves, element by element, the
    fixed-point problem "bar(C_w) = C_w with lower coefficients strictly
    negative for the given order", reading the bar matrix straight off
    products of $(T_s - \\xi_s)$.  ``sign`` maps an exponent to -1/0/+1.
    """

    def __init__(self, algebra: TBasisAlgebra, sign):
        self.alg = algebra
        self.sign = sign
        self._c = {}

    def r(self, ykey, wkey):
        """r_{y,w}: bar of the T_y-coefficient of bar(T_w)."""
        return _pbar(self.alg.bar_t(wkey).get(ykey, {}))

    def c_elt(self, wkey):
        """C_w as {y_key: laurent_dict}, solved top-down through the cone."""
        if wkey in self._c:
            return self._c[wkey]
        data = self.alg.data
        cone = sorted(
            subword_cone(data, data.word_key(wkey)),
            key=data.length_key,
            reverse=True,
        )
        assert cone[0] == wkey
        p = {wkey: {self.alg.zero: 1}}
        for x in cone[1:]:
            g = {}
            for y, py in p.items():
                row = self.alg.bar_t(y)
                if x in row:
                    _pacc(g, _pmul(_pbar(py), row[x]))
            g = _pclean(g)
            minus = {e: c for e, c in g.items() if self.sign(e) < 0}
            # the defining equation p_x - bar(p_x) = g must be solvable
            residue = dict(minus)
            _pacc(residue, _pbar(minus), -1)
            assert _pclean(residue) == g, (x, g)
            if minus:
                p[x] = minus
        self._c[wkey] = p
        return p

    def p(self, ykey, wkey):
        return dict(self.c_elt(wkey).get(ykey, {}))

    def c_s_times_c(self, s, wkey):
        """C_s C_w in the T-basis (requires sw > w)."""
        data = self.alg.data
        sw = data.lmul_gen(s, wkey)
        assert data.length_key(sw) > data.length_key(wkey)
        cw = self.c_elt(wkey)
        out = self.alg.lmul_t(s, cw)
        vsi = self.alg.vs_inv(s)
        for k, p in cw.items():
            _hacc(out, k, p, vsi)
        return _hclean(out)

    def m_row(self, s, wkey):
        """All M^s_{z,w} at once, peeled off C_s C_w - C_{sw}."""
        data = self.alg.data
        sw = data.lmul_gen(s, wkey)
        rem = self.alg.hsub(self.c_s_times_c(s, wkey), self.c_elt(sw))
        out = {}
        while rem:
            z = max(rem, key=data.length_key)
            sz = data.lmul_gen(s, z)
            assert data.length_key(sz) < data.length_key(z), "peeled a non-descent"
            coeff = rem[z]
            out[z] = coeff
            cz = self.c_elt(z)
            rem = self.alg.hsub(rem, {k: _pmul(p, coeff) for k, p in cz.items()})
        return out

    def m(self, s, zkey, wkey):
        return dict(self.m_row(s, wkey).get(zkey, {}))
