r"""Exact Laurent-polynomial arithmetic for the monomial group $\Gamma$.

The two-parameter coefficient ring is the group ring $\mathbb{Z}[\Gamma]$ with
$\Gamma = \{Q^i q^j \mid i,j \in \mathbb{Z}\}$: a :class:`GammaPoly` is a
finitely supported integer function on exponent pairs $(i, j)$.  The
one-parameter ring $\mathbb{Z}[v, v^{-1}]$ (:class:`SingleLaurent`) is used
for specializations $\sigma_{a,b}\colon Q^i q^j \mapsto v^{ai+bj}$ and for
direct single-parameter computations.

A total order on $\Gamma$ is described by an :class:`OrderSpec`.  Five
variants are supported:

``lexQ``
    $\Gamma_+ = \{Q^iq^j \mid i>0\} \cup \{q^j \mid j>0\}$ (the $Q$-exponent
    decides, the $q$-exponent breaks ties).
``lexq``
    the mirror image ($q$-exponent decides).
``ratio`` with parameters $(c, d)$
    $\Gamma_+ = \{Q^iq^j \mid ci+dj>0\} \cup \{Q^{dj}q^{-cj} \mid j>0\}$;
    on the tie line $ci+dj=0$ a monomial is positive iff its $q$-exponent is
    negative.
``mirror`` with parameters $(c, d)$
    the image of ``ratio(c, d)`` under the swap $Q \leftrightarrow q$.
``weight`` with parameters $(a, b)$
    sign of $ai+bj$; *partial* — a tie $ai+bj=0$ on a non-unit monomial
    raises :class:`OrderUndefinedError` instead of being resolved silently.

The bar involution is $\overline{Q^iq^j} = Q^{-i}q^{-j}$ (and
$\bar v = v^{-1}$), with integer coefficients fixed.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "GammaPoly",
    "SingleLaurent",
    "OrderSpec",
    "OrderUndefinedError",
    "split",
    "specialize",
    "gamma_from_json",
    "gamma_to_json",
]


class OrderUndefinedError(ValueError):
    """A Weight(a,b) order was asked to compare a monomial on its tie line."""

    def __init__(self, exponent: tuple[int, int], a: int, b: int):
        self.exponent = exponent
        super().__init__(
            f"order undefined for this monomial: Q^{exponent[0]} q^{exponent[1]} "
            f"has weight {a}*{exponent[0]} + {b}*{exponent[1]} = 0; "
            "switch to a refined (lexQ/lexq/ratio/mirror) order"
        )


# ---------------------------------------------------------------------------
# low-level dict kernels (exponent pair -> coefficient), shared by the
# arithmetic below and by the table-filling loops in hecke.py
# ---------------------------------------------------------------------------


def add_into2(acc: dict, terms: Mapping, scale: int = 1) -> None:
    """acc += scale * terms, in place, keys are exponent pairs."""
    get = acc.get
    for e, c in terms.items():
        acc[e] = get(e, 0) + scale * c


def mul_into2(acc: dict, p: Mapping, q: Mapping) -> None:
    """acc += p * q, in place, keys are exponent pairs."""
    get = acc.get
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            e = (i1 + i2, j1 + j2)
            acc[e] = get(e, 0) + c1 * c2


def clean(acc: dict) -> dict:
    """Drop zero coefficients (in place) and return acc."""
    for e in [e for e, c in acc.items() if c == 0]:
        del acc[e]
    return acc


def add_into1(acc: dict, terms: Mapping, scale: int = 1) -> None:
    """acc += scale * terms, in place, keys are single exponents."""
    get = acc.get
    for e, c in terms.items():
        acc[e] = get(e, 0) + scale * c


def mul_into1(acc: dict, p: Mapping, q: Mapping) -> None:
    """acc += p * q, in place, keys are single exponents."""
    get = acc.get
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            acc[e] = get(e, 0) + c1 * c2


# ---------------------------------------------------------------------------
# GammaPoly
# ---------------------------------------------------------------------------


class GammaPoly:
    """An element of Z[Gamma]; immutable by convention.

    >>> p = GammaPoly.monomial(1, 0) - GammaPoly.monomial(-1, 0)   # Q - Q^-1
    >>> q = GammaPoly.monomial(1, 0) + GammaPoly.monomial(-1, 0)
    >>> sorted((p * q).terms.items())
    [((-2, 0), -1), ((2, 0), 1)]
    >>> p.bar() == -p
    True
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        t = {e: int(c) for e, c in (terms or {}).items() if c != 0}
        self.terms: dict[tuple[int, int], int] = t

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "GammaPoly":
        return cls()

    @classmethod
    def one(cls) -> "GammaPoly":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, i: int, j: int, coeff: int = 1) -> "GammaPoly":
        return cls({(i, j): coeff})

    # -- ring structure ------------------------------------------------------

    def __add__(self, other: "GammaPoly") -> "GammaPoly":
        acc = dict(self.terms)
        add_into2(acc, other.terms)
        return GammaPoly(acc)

    def __sub__(self, other: "GammaPoly") -> "GammaPoly":
        acc = dict(self.terms)
        add_into2(acc, other.terms, -1)
        return GammaPoly(acc)

    def __neg__(self) -> "GammaPoly":
        return GammaPoly({e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "GammaPoly") -> "GammaPoly":
        acc: dict = {}
        mul_into2(acc, self.terms, other.terms)
        return GammaPoly(acc)

    def scale(self, n: int) -> "GammaPoly":
        return GammaPoly({e: n * c for e, c in self.terms.items()})

    def bar(self) -> "GammaPoly":
        """The bar involution: each monomial goes to its inverse."""
        return GammaPoly({(-i, -j): c for (i, j), c in self.terms.items()})

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GammaPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def coeff(self, i: int, j: int) -> int:
        return self.terms.get((i, j), 0)

    def support(self) -> set[tuple[int, int]]:
        return set(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"

        def mono(e: tuple[int, int], c: int) -> str:
            i, j = e
            parts = []
            if i:
                parts.append("Q" if i == 1 else f"Q^{i}")
            if j:
                parts.append("q" if j == 1 else f"q^{j}")
            body = "*".join(parts)
            if not body:
                return str(c)
            if c == 1:
                return body
            if c == -1:
                return "-" + body
            return f"{c}*{body}"

        return " + ".join(
            mono(e, c) for e, c in sorted(self.terms.items())
        ).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# SingleLaurent
# ---------------------------------------------------------------------------


class SingleLaurent:
    """An element of Z[v, v^-1].

    >>> v = SingleLaurent.monomial(1)
    >>> (v + v) * SingleLaurent.monomial(-1, 3)
    6
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self.terms: dict[int, int] = {
            e: int(c) for e, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def zero(cls) -> "SingleLaurent":
        return cls()

    @classmethod
    def one(cls) -> "SingleLaurent":
        return cls({0: 1})

    @classmethod
    def monomial(cls, e: int, coeff: int = 1) -> "SingleLaurent":
        return cls({e: coeff})

    def __add__(self, other: "SingleLaurent") -> "SingleLaurent":
        acc = dict(self.terms)
        add_into1(acc, other.terms)
        return SingleLaurent(acc)

    def __sub__(self, other: "SingleLaurent") -> "SingleLaurent":
        acc = dict(self.terms)
        add_into1(acc, other.terms, -1)
        return SingleLaurent(acc)

    def __neg__(self) -> "SingleLaurent":
        return SingleLaurent({e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "SingleLaurent") -> "SingleLaurent":
        acc: dict = {}
        mul_into1(acc, self.terms, other.terms)
        return SingleLaurent(acc)

    def scale(self, n: int) -> "SingleLaurent":
        return SingleLaurent({e: n * c for e, c in self.terms.items()})

    def bar(self) -> "SingleLaurent":
        return SingleLaurent({-e: c for e, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SingleLaurent) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def coeff(self, e: int) -> int:
        return self.terms.get(e, 0)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"

        def mono(e: int, c: int) -> str:
            if e == 0:
                return str(c)
            body = "v" if e == 1 else f"v^{e}"
            if c == 1:
                return body
            if c == -1:
                return "-" + body
            return f"{c}*{body}"

        return " + ".join(
            mono(e, c) for e, c in sorted(self.terms.items())
        ).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# total orders on Gamma
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrderSpec:
    """A (possibly partial) total order on the exponent lattice Z^2.

    Use the factory classmethods; ``kind`` is one of ``lexQ``, ``lexq``,
    ``ratio``, ``mirror``, ``weight`` with the meaning described in the
    module docstring.

    >>> OrderSpec.ratio(1, 1).sign((1, -1))
    1
    >>> OrderSpec.lex_Q_dominant().sign((1, -4))
    1
    >>> OrderSpec.ratio(3, 1).sign((1, -4))
    -1
    """

    kind: str
    c: int = 0
    d: int = 0

    @classmethod
    def lex_Q_dominant(cls) -> "OrderSpec":
        return cls("lexQ")

    @classmethod
    def lex_q_dominant(cls) -> "OrderSpec":
        return cls("lexq")

    @classmethod
    def ratio(cls, c: int, d: int) -> "OrderSpec":
        if c < 1 or d < 1:
            raise ValueError(f"ratio order needs c, d >= 1, got ({c}, {d})")
        return cls("ratio", c, d)

    @classmethod
    def ratio_mirror(cls, c: int, d: int) -> "OrderSpec":
        if c < 1 or d < 1:
            raise ValueError(f"mirror order needs c, d >= 1, got ({c}, {d})")
        return cls("mirror", c, d)

    @classmethod
    def weight(cls, a: int, b: int) -> "OrderSpec":
        if a < 1 or b < 1:
            raise ValueError(f"weight order needs a, b >= 1, got ({a}, {b})")
        return cls("weight", a, b)

    @classmethod
    def parse(cls, text: str) -> "OrderSpec":
        """Parse CLI notation: ``lexQ``, ``lexq``, ``ratio:c:d``,
        ``mirror:c:d``, ``weight:a:b``."""
        parts = text.split(":")
        head = parts[0]
        if head in ("lexQ", "lexq") and len(parts) == 1:
            return cls(head)
        if head in ("ratio", "mirror", "weight") and len(parts) == 3:
            factory = {
                "ratio": cls.ratio,
                "mirror": cls.ratio_mirror,
                "weight": cls.weight,
            }[head]
            return factory(int(parts[1]), int(parts[2]))
        raise ValueError(f"unknown order spec {text!r}")

    def __str__(self) -> str:
        if self.kind in ("lexQ", "lexq"):
            return self.kind
        return f"{self.kind}:{self.c}:{self.d}"

    def sign(self, exponent: tuple[int, int]) -> int:
        """+1 if the monomial is in Gamma_+, -1 if in Gamma_-, 0 if unit."""
        i, j = exponent
        if i == 0 and j == 0:
            return 0
        kind = self.kind
        if kind == "lexQ":
            return (i > 0) - (i < 0) if i else (j > 0) - (j < 0)
        if kind == "lexq":
            return (j > 0) - (j < 0) if j else (i > 0) - (i < 0)
        if kind == "ratio":
            t = self.c * i + self.d * j
            if t:
                return 1 if t > 0 else -1
            return 1 if j < 0 else -1
        if kind == "mirror":
            t = self.c * j + self.d * i
            if t:
                return 1 if t > 0 else -1
            return 1 if i < 0 else -1
        if kind == "weight":
            t = self.c * i + self.d * j
            if t:
                return 1 if t > 0 else -1
            raise OrderUndefinedError(exponent, self.c, self.d)
        raise ValueError(f"unknown order kind {kind!r}")

    def sort_ascending(
        self, exponents: Iterable[tuple[int, int]]
    ) -> list[tuple[int, int]]:
        """Sort exponent pairs ascending in the group order; two monomials
        compare via the sign of their quotient."""

        def cmp(e1, e2):
            return self.sign((e1[0] - e2[0], e1[1] - e2[1]))

        return sorted(exponents, key=functools.cmp_to_key(cmp))


# ---------------------------------------------------------------------------
# splitting and specialization
# ---------------------------------------------------------------------------


def split(p: GammaPoly, order: OrderSpec) -> tuple[GammaPoly, int, GammaPoly]:
    """Split ``p = pos + unit*1 + neg`` with pos in Z[Gamma_+], neg in
    Z[Gamma_-].

    >>> p = GammaPoly({(1, -1): 1, (0, 0): 3, (-1, 1): 1})
    >>> pos, unit, neg = split(p, OrderSpec.ratio(1, 1))
    >>> (sorted(pos.terms), unit, sorted(neg.terms))
    ([(1, -1)], 3, [(-1, 1)])
    """
    pos: dict = {}
    neg: dict = {}
    unit = 0
    sign = order.sign
    for e, c in p.terms.items():
        s = sign(e)
        if s > 0:
            pos[e] = c
        elif s < 0:
            neg[e] = c
        else:
            unit = c
    return GammaPoly(pos), unit, GammaPoly(neg)


def specialize(p: GammaPoly, wf) -> SingleLaurent:
    """Apply $\\sigma_{a,b}: Q^iq^j \\mapsto v^{ai+bj}$ termwise.

    ``wf`` is anything with integer attributes ``a`` and ``b`` (or a pair).
    Exponent collisions collapse with integer addition.
    """
    try:
        a, b = wf.a, wf.b
    except AttributeError:
        a, b = wf
    acc: dict[int, int] = {}
    get = acc.get
    for (i, j), c in p.terms.items():
        e = a * i + b * j
        acc[e] = get(e, 0) + c
    return SingleLaurent(acc)


def ratio_fraction(exponent: tuple[int, int]) -> Fraction:
    """The positive ratio |j|/|i| of a mixed-sign exponent pair.

    Used for the critical-ratio sets: a monomial $Q^iq^j$ with $j<0, i\\neq 0$
    contributes $x = \\pm j/i \\in \\mathbb{Q}_{>0}$.
    """
    i, j = exponent
    if i == 0 or j == 0:
        raise ValueError(f"no ratio for exponent pair {exponent}")
    return Fraction(abs(j), abs(i))


# ---------------------------------------------------------------------------
# JSON (byte-stable: sorted by exponent pair)
# ---------------------------------------------------------------------------


def gamma_to_json(p: GammaPoly) -> list[dict]:
    return [
        {"Q": i, "q": j, "c": c} for (i, j), c in sorted(p.terms.items())
    ]


def gamma_from_json(obj: Iterable[Mapping]) -> GammaPoly:
    return GammaPoly({(int(t["Q"]), int(t["q"])): int(t["c"]) for t in obj})


def single_to_json(p: SingleLaurent) -> list[dict]:
    return [{"v": e, "c": c} for e, c in sorted(p.terms.items())]
