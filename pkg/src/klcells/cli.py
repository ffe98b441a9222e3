"""Command-line front end and figure emitter.

Subcommands drive the library end to end: element listings, polynomial
tables on Bruhat intervals, parameter-ratio sweeps, exponent-shift
stability checks, cell decompositions on balls, the bundled
translation-family campaign, and an SVG map of the alcove plane.

Exit codes follow batch conventions: 0 on success, 1 when a computation
ran but a verification failed (a sweep that does not close, a stability
check that finds a difference, a campaign with recorded failures), and 2
for usage errors such as an unknown group preset or order spec.

The SVG renderer keeps all geometry exact: alcove polygons are images of
the base triangle under the affine action, with vertices in rational
coroot coordinates.  Only the writer converts to the drawing plane —
a fixed linear map with the true $G_2$ angles — and rounds to six
decimal places, so repeated runs are byte-identical.
"""

import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import click

from .cells import (
    Fixtures,
    chamber_index,
    decompose,
    lowest_cell_member,
    ratio_sweep,
    verify_section6,
)
from .coxeter import (
    GroupData,
    GroupElement,
    WeightFunction,
    ball,
    bruhat_leq,
    element_from_word,
    g2_affine,
    interval,
    parse_word,
)
from .geometry import alcove_point, h_region
from .hecke import KLContext, interval_report, p_poly
from .laurent import GammaPoly, OrderSpec, gamma_to_json, single_to_json

__all__ = ["RunConfig", "main", "render_alcove_map"]

OUTPUT_DIR_VAR = "KLCELLS_OUTPUT_DIR"

_PRESETS: dict[str, Callable[[], GroupData]] = {"g2": g2_affine}


@dataclass
class RunConfig:
    """One command invocation's resolved inputs."""

    group: str = "g2"
    order: OrderSpec = None
    weights: tuple[int, int] = (1, 1)
    bound: int = 0
    out: Optional[str] = None
    seed: int = 0

    def __post_init__(self):
        if self.order is None:
            self.order = OrderSpec.lex_Q_dominant()
        if self.weights[0] < 1 or self.weights[1] < 1:
            raise click.UsageError("weights must satisfy a, b >= 1")
        if self.bound < 0:
            raise click.UsageError("length bound must be >= 0")
        if self.group not in _PRESETS:
            raise click.UsageError(
                f"unknown group preset {self.group!r}"
                f" (available: {', '.join(sorted(_PRESETS))})"
            )

    def data(self) -> GroupData:
        return _PRESETS[self.group]()

    def out_path(self, default: Optional[str] = None) -> Optional[str]:
        """Resolve the output path against the directory override."""
        path = self.out if self.out is not None else default
        if path is None:
            return None
        base = os.environ.get(OUTPUT_DIR_VAR)
        if base and not os.path.isabs(path):
            return os.path.join(base, path)
        return path


def _parse_order(text: str) -> OrderSpec:
    try:
        return OrderSpec.parse(text)
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _parse_element(data: GroupData, text: str) -> GroupElement:
    try:
        return element_from_word(data, parse_word(text))
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _sorted(elems) -> list[GroupElement]:
    return sorted(elems, key=lambda w: (w.length, w.word))


def _poly_json(p) -> dict:
    return gamma_to_json(p) if isinstance(p, GammaPoly) else single_to_json(p)


def _context(data: GroupData, order: OrderSpec) -> KLContext:
    if order.kind == "weight":
        return KLContext.single(data, WeightFunction(order.c, order.d))
    return KLContext(data, order)


def _emit_json(payload: dict, path: Optional[str]) -> None:
    import json

    text = json.dumps(payload, indent=1, sort_keys=True)
    if path is None:
        click.echo(text)
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")
        click.echo(f"wrote {path}")


def _fixture_bounds(
    fx: Fixtures, spec: str, k: int, r: int, s: Optional[int]
) -> tuple[int, GroupElement, GroupElement]:
    """Resolve an interval name: ``I-<family>-<i>`` picks the translation
    interval (family 1 = the long-translation side, 2 = the short one, with
    ``k`` choosing the corner pair), ``L-<link>-<i>`` one of the three
    auxiliary link pairs."""
    parts = spec.split("-")
    if len(parts) != 3 or parts[0] not in ("I", "L"):
        raise click.UsageError(
            f"interval spec {spec!r} is not I-<family>-<i> or L-<link>-<i>"
        )
    try:
        first, i = int(parts[1]), int(parts[2])
    except ValueError:
        raise click.UsageError(f"interval spec {spec!r} has non-integer parts")
    try:
        if parts[0] == "I":
            lo, hi = fx.interval_bounds(first, k, i, r)
            default_s = 1 if first == 1 else 2
        else:
            default_s, lo, hi = fx.link_bounds(first, i, r)
    except (IndexError, KeyError, ValueError) as exc:
        raise click.UsageError(f"interval spec {spec!r}: {exc}")
    return (s if s is not None else default_s), lo, hi


@click.group()
def main():
    """Exact Kazhdan-Lusztig computations for the affine Weyl group G2
    with unequal parameters."""


_group_opt = click.option(
    "--group", default="g2", show_default=True, help="Group preset."
)
_order_opt = click.option(
    "--order",
    default="lexQ",
    show_default=True,
    help="Monomial order: lexQ, lexq, ratio:c:d, mirror:c:d, weight:a:b.",
)
_out_opt = click.option(
    "--out", default=None, help="Output file (default: stdout)."
)


@main.command(name="ball")
@click.option("-L", "--bound", required=True, type=int, help="Length bound.")
@_group_opt
def ball_cmd(bound, group):
    """List every element of length at most L, one canonical word per line."""
    cfg = RunConfig(group=group, bound=bound)
    elems = _sorted(ball(cfg.data(), cfg.bound))
    for w in elems:
        click.echo(f"{w.word_str}\t{w.length}")
    click.echo(f"{len(elems)} elements")


@main.command(name="pq-table")
@click.option("--y", "y_word", required=True, help="Lower interval endpoint.")
@click.option("--w", "w_word", required=True, help="Upper interval endpoint.")
@_order_opt
@_out_opt
@_group_opt
def pq_table(y_word, w_word, order, out, group):
    """All nonzero P-polynomials between pairs of the interval [y, w]."""
    cfg = RunConfig(group=group, order=_parse_order(order), out=out)
    data = cfg.data()
    y = _parse_element(data, y_word)
    w = _parse_element(data, w_word)
    members = _sorted(interval(y, w))
    if not members:
        raise click.UsageError(f"empty interval: {y_word!r} is not <= {w_word!r}")
    ctx = _context(data, cfg.order)
    entries = []
    for i, z1 in enumerate(members):
        for z2 in members[i + 1 :]:
            if not bruhat_leq(z1, z2):
                continue
            p = p_poly(ctx, z1, z2)
            if p:
                entries.append(
                    {
                        "z1": z1.word_str,
                        "z2": z2.word_str,
                        "p": _poly_json(p),
                    }
                )
    _emit_json(
        {
            "y": y.word_str,
            "w": w.word_str,
            "order": str(cfg.order),
            "size": len(members),
            "entries": entries,
        },
        cfg.out_path(),
    )


@main.command(name="m-table")
@click.option("--y", "y_word", required=True, help="Lower interval endpoint.")
@click.option("--w", "w_word", required=True, help="Upper interval endpoint.")
@click.option("--s", required=True, type=int, help="Generator index.")
@_order_opt
@_out_opt
@_group_opt
def m_table(y_word, w_word, s, order, out, group):
    """All nonzero M-polynomials for one generator on the interval [y, w]."""
    cfg = RunConfig(group=group, order=_parse_order(order), out=out)
    data = cfg.data()
    y = _parse_element(data, y_word)
    w = _parse_element(data, w_word)
    if not bruhat_leq(y, w):
        raise click.UsageError(f"empty interval: {y_word!r} is not <= {w_word!r}")
    rep = interval_report(_context(data, cfg.order), y, w, s)
    js = rep.to_json()
    _emit_json(
        {
            "y": js["y"],
            "w": js["w"],
            "order": js["order"],
            "s": js["s"],
            "size": js["size"],
            "entries": js["m"],
        },
        cfg.out_path(),
    )


@main.command(name="interval-report")
@click.option("--y", "y_word", required=True, help="Lower interval endpoint.")
@click.option("--w", "w_word", required=True, help="Upper interval endpoint.")
@click.option("--s", required=True, type=int, help="Generator index.")
@_order_opt
@_out_opt
@_group_opt
def interval_report_cmd(y_word, w_word, s, order, out, group):
    """Full report on [y, w]: members, P-matrix, M-entries, exponent sets."""
    cfg = RunConfig(group=group, order=_parse_order(order), out=out)
    data = cfg.data()
    y = _parse_element(data, y_word)
    w = _parse_element(data, w_word)
    if not bruhat_leq(y, w):
        raise click.UsageError(f"empty interval: {y_word!r} is not <= {w_word!r}")
    rep = interval_report(_context(data, cfg.order), y, w, s)
    _emit_json(rep.to_json(), cfg.out_path())


@main.command(name="sweep")
@click.option("--interval", "spec", default=None, help="I-<family>-<i> or L-<link>-<i>.")
@click.option("--y", "y_word", default=None, help="Explicit lower endpoint.")
@click.option("--w", "w_word", default=None, help="Explicit upper endpoint.")
@click.option("--s", type=int, default=None, help="Generator index.")
@click.option("--k", default=1, show_default=True, type=int, help="Corner pair.")
@click.option("--r", default=6, show_default=True, type=int, help="Exponent.")
@click.option("--mirror", is_flag=True, help="Walk b/a instead of a/b.")
@click.option("--max-steps", default=64, show_default=True, type=int)
@_out_opt
@_group_opt
def sweep_cmd(spec, y_word, w_word, s, k, r, mirror, max_steps, out, group):
    """Partition the weight-ratio half-line for one interval's M-polynomial.

    Prints one row per open region and one per critical ratio; exits 1
    when the descent is capped or the regions fail to tile the half-line.
    """
    cfg = RunConfig(group=group, out=out)
    data = cfg.data()
    if spec is not None:
        sgen, lo, hi = _fixture_bounds(Fixtures.build(data), spec, k, r, s)
    elif y_word is not None and w_word is not None:
        if s is None:
            raise click.UsageError("--s is required with explicit endpoints")
        sgen, lo, hi = s, _parse_element(data, y_word), _parse_element(data, w_word)
    else:
        raise click.UsageError("need --interval or both --y and --w")
    res = ratio_sweep(lo, hi, sgen, mirror=mirror, max_steps=max_steps)
    var = res.variable
    for reg in res.regions:
        high = "inf" if reg.high is None else str(reg.high)
        state = "certified" if reg.certified else "UNCERTIFIED"
        nz = "M != 0" if reg.m_nonzero else "M == 0"
        click.echo(
            f"region ({reg.low}, {high})  {var}  order {reg.order}"
            f"  {state}  {nz}"
        )
    for crit in res.criticals:
        nz = "M != 0" if crit.m_nonzero else "M == 0"
        click.echo(
            f"critical {crit.ratio}  weights ({crit.weights[0]},"
            f"{crit.weights[1]})  {nz}"
        )
    path = cfg.out_path()
    if path is not None:
        _emit_json(res.to_json(), path)
    if res.capped or not res.covers():
        click.echo("sweep did not close", err=True)
        sys.exit(1)


@main.command(name="verify-stability")
@click.option("--interval", "spec", required=True, help="I-<family>-<i>.")
@click.option("--k", default=1, show_default=True, type=int, help="Corner pair.")
@click.option("--r", default=6, show_default=True, type=int, help="Exponent.")
@_order_opt
@_out_opt
@_group_opt
def verify_stability_cmd(spec, k, r, order, out, group):
    """Check that one interval family's tables agree between r and r+1."""
    cfg = RunConfig(group=group, order=_parse_order(order), out=out)
    data = cfg.data()
    parts = spec.split("-")
    if len(parts) != 3 or parts[0] != "I":
        raise click.UsageError(f"interval spec {spec!r} is not I-<family>-<i>")
    fx = Fixtures.build(data)
    try:
        rep = fx.stability(
            int(parts[1]), k, int(parts[2]), r, _context(data, cfg.order)
        )
    except (IndexError, KeyError, ValueError) as exc:
        raise click.UsageError(f"interval spec {spec!r}: {exc}")
    js = rep.to_json()
    click.echo(
        f"interval {spec} k={k}: size {js['size']},"
        f" r={r} vs r={r + 1}: {js['verdict']}"
    )
    path = cfg.out_path()
    if path is not None:
        _emit_json(js, path)
    if js["verdict"] != "equal":
        sys.exit(1)


@main.command(name="cells")
@click.option("-L", "--bound", required=True, type=int, help="Length bound.")
@_order_opt
@click.option("--out", default=None, help="CSV output file (default: stdout).")
@click.option("--json", "json_out", default=None, help="Full graph JSON file.")
@_group_opt
def cells_cmd(bound, order, out, json_out, group):
    """Decompose a ball into cells; emit element,cell,provisional rows."""
    cfg = RunConfig(group=group, order=_parse_order(order), bound=bound, out=out)
    dec = decompose(cfg.data(), cfg.order, cfg.bound)
    path = cfg.out_path()
    if path is None:
        writer = click.get_text_stream("stdout")
        dec.write_csv(writer)
    else:
        dec.write_csv(path)
        click.echo(f"wrote {path}")
    click.echo(
        f"{len(dec.graph.vertices)} elements, {len(dec.cells)} cells,"
        f" {len(dec.provisional)} provisional",
        err=path is None,
    )
    if json_out is not None:
        _emit_json(dec.to_json(), RunConfig(group=group, out=json_out).out_path())


@main.command(name="verify-section6")
@click.option("--r", default=6, show_default=True, type=int)
@click.option("--census-bound", default=14, show_default=True, type=int)
@click.option(
    "--quick",
    is_flag=True,
    help="Trimmed run: one family index, two weight pairs, small census.",
)
@click.option("--seed", default=0, show_default=True, type=int)
@_out_opt
@_group_opt
def verify_section6_cmd(r, census_bound, quick, seed, out, group):
    """Run the whole translation-family campaign and print its summary.

    Exits 1 when any sub-check failed; the known equal-parameter
    vanishing of the short-translation interval coefficients is reported
    like every other finding.
    """
    cfg = RunConfig(group=group, out=out, seed=seed)
    kwargs = {"r": r, "census_bound": census_bound}
    if quick:
        kwargs.update(
            indices=(1,), weights=((1, 1), (3, 1)), census_bound=min(census_bound, 8)
        )
    report = verify_section6(cfg.data(), **kwargs)
    click.echo(report.summary())
    path = cfg.out_path()
    if path is not None:
        payload = report.to_json()
        payload["seed"] = cfg.seed
        _emit_json(payload, path)
    if not report.ok:
        sys.exit(1)


# ---------------------------------------------------------------------------
# SVG alcove map
# ---------------------------------------------------------------------------

# Drawing plane: the image of coroot coordinates under the fixed linear
# map sending the two basis translations to vectors at the true G2
# angles (150 degrees apart, length ratio sqrt(3)).  Everything up to
# this map is exact rational arithmetic.
_E11, _E12 = -math.sqrt(3.0) / 2.0, 1.0 / math.sqrt(3.0)
_E21, _E22 = 0.5, 0.0

# Vertices of the base alcove in coroot coordinates: the intersections
# of its three walls.
_BASE_TRIANGLE = (
    (Fraction(0), Fraction(0)),
    (Fraction(1, 2), Fraction(1)),
    (Fraction(2, 3), Fraction(1)),
)

_REGION_FILL = {
    "A1": "#fde2cf", "A2": "#fcd4b0", "A3": "#fbe8a6", "A4": "#e8f4b5",
    "A5": "#cfe8c3", "A6": "#c8e6e0", "A7": "#cbe0f2", "A8": "#d4d4f0",
    "A9": "#e4d0ee", "A10": "#f3cfe3", "A11": "#f6d6d0", "A12": "#efe3cc",
    "B1": "#66b2a3", "B2": "#5aa7c4", "B3": "#7a9bd4", "B4": "#9d8ecf",
    "B5": "#c084bd", "B6": "#d98aa2", "C1": "#d97f5f", "C2": "#de9a4f",
    "C3": "#c9ab47", "C4": "#9fae52", "C5": "#72a968", "C6": "#5fae8a",
    "": "#f4f4f4",
}
_HIGHLIGHT_FILL = {"base": "#f4a340", "image": "#6f9fd8", "hregion": "#dce9c8"}


def _to_plane(p: tuple[Fraction, Fraction]) -> tuple[float, float]:
    x, y = float(p[0]), float(p[1])
    return (_E11 * x + _E12 * y, _E21 * x + _E22 * y)


def _act(w: GroupElement, p: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    (a, b), (c, d) = w.linear
    t1, t2 = w.translation
    return (a * p[0] + b * p[1] + t1, c * p[0] + d * p[1] + t2)


def _alcove_polygon(w: GroupElement) -> tuple[tuple[Fraction, Fraction], ...]:
    return tuple(_act(w, v) for v in _BASE_TRIANGLE)


class _Canvas:
    """Maps drawing-plane points to SVG pixels, rounding only here."""

    def __init__(self, radius: float, size: int = 960, margin: int = 36):
        self.size = size
        self.scale = (size / 2 - margin) / radius if radius else 1.0
        self.radius = radius

    def pt(self, xy: tuple[float, float]) -> tuple[float, float]:
        return (
            self.size / 2 + xy[0] * self.scale,
            self.size / 2 - xy[1] * self.scale,
        )

    def fmt(self, xy: tuple[float, float]) -> str:
        x, y = self.pt(xy)
        if abs(x) < 5e-7:
            x = 0.0
        if abs(y) < 5e-7:
            y = 0.0
        return f"{x:.6f},{y:.6f}"


def render_alcove_map(
    data: GroupData,
    classification: dict[GroupElement, str],
    L: int,
    title: str = "",
    highlights: Optional[dict[GroupElement, str]] = None,
    shaded: Optional[Callable[[GroupElement], bool]] = None,
    arrows: Optional[list[tuple[str, tuple[float, float]]]] = None,
    sector_labels: Optional[list[tuple[str, tuple[float, float]]]] = None,
) -> str:
    """An SVG document of the alcoves of ``ball(L)``.

    Every alcove becomes one polygon carrying its element word and its
    classification label; walls are drawn thin across a bounding disc,
    and edges between alcoves whose labels differ are drawn thick.
    ``highlights`` paints named fills over specific alcoves, ``shaded``
    overlays a dotted tint (used for half-space regions), ``arrows``
    and ``sector_labels`` add annotation texts at drawing-plane points.
    """
    elems = _sorted(ball(data, L))
    polygons = [(w, _alcove_polygon(w)) for w in elems]
    plane_pts = [_to_plane(v) for _, poly in polygons for v in poly]
    radius = max((math.hypot(x, y) for x, y in plane_pts), default=1.0)
    for _, target in arrows or []:
        radius = max(radius, math.hypot(*target))
    canvas = _Canvas(radius * 1.02)

    out = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{canvas.size}"'
        f' height="{canvas.size}" viewBox="0 0 {canvas.size} {canvas.size}">'
    )
    out.append("<defs>")
    out.append(
        '<marker id="tip" viewBox="0 0 10 10" refX="9" refY="5"'
        ' markerWidth="7" markerHeight="7" orient="auto-start-reverse">'
        '<path d="M 0 0 L 10 5 L 0 10 z" fill="#333333"/></marker>'
    )
    out.append("</defs>")
    out.append(
        f'<rect width="{canvas.size}" height="{canvas.size}" fill="#ffffff"/>'
    )

    # the full hyperplane arrangement, thin, clipped to the bounding disc
    out.append('<g stroke="#c9c9c9" stroke-width="0.6" fill="none">')
    for f in data.coroot_forms:
        gx = f[0] * _E22 - f[1] * _E21
        gy = f[1] * _E11 - f[0] * _E12
        det = _E11 * _E22 - _E12 * _E21
        gx, gy = gx / det, gy / det
        norm = math.hypot(gx, gy)
        k_max = int(math.floor(canvas.radius * norm))
        for k in range(-k_max, k_max + 1):
            d = k / norm
            half = math.sqrt(max(canvas.radius**2 - d * d, 0.0))
            fx, fy = gx / norm * d, gy / norm * d
            dx, dy = -gy / norm, gx / norm
            p1 = canvas.fmt((fx - half * dx, fy - half * dy))
            p2 = canvas.fmt((fx + half * dx, fy + half * dy))
            x1, y1 = p1.split(",")
            x2, y2 = p2.split(",")
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")

    # one polygon per alcove, labeled and filled by classification
    out.append('<g stroke="#b0b0b0" stroke-width="0.5">')
    for w, poly in polygons:
        label = classification.get(w, "")
        fill = _REGION_FILL.get(label, _REGION_FILL[""])
        if highlights and w in highlights:
            fill = _HIGHLIGHT_FILL[highlights[w]]
        points = " ".join(canvas.fmt(_to_plane(v)) for v in poly)
        word = w.word_str
        out.append(
            f'<polygon points="{points}" fill="{fill}"'
            f' data-word="{word}" data-label="{label}"/>'
        )
    out.append("</g>")

    if shaded is not None:
        out.append('<g stroke="none" fill="#55771c" fill-opacity="0.25">')
        for w, poly in polygons:
            if shaded(w):
                points = " ".join(canvas.fmt(_to_plane(v)) for v in poly)
                out.append(f'<polygon points="{points}"/>')
        out.append("</g>")

    # thick boundaries wherever adjacent labels differ
    edge_labels: dict[tuple, set[str]] = {}
    for w, poly in polygons:
        label = classification.get(w, "")
        for i in range(3):
            v1, v2 = poly[i], poly[(i + 1) % 3]
            key = tuple(sorted((v1, v2)))
            edge_labels.setdefault(key, set()).add(label)
    out.append(
        '<g stroke="#1a1a1a" stroke-width="2.4" stroke-linecap="round">'
    )
    for key in sorted(edge_labels):
        if len(edge_labels[key]) < 2:
            continue
        (a1, a2) = key
        p1 = canvas.fmt(_to_plane(a1))
        p2 = canvas.fmt(_to_plane(a2))
        x1, y1 = p1.split(",")
        x2, y2 = p2.split(",")
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")

    for text, target in sector_labels or []:
        x, y = canvas.pt(target)
        out.append(
            f'<text x="{x:.6f}" y="{y:.6f}" font-size="26"'
            f' font-family="serif" text-anchor="middle" fill="#333333"'
            f' class="sector">{text}</text>'
        )

    for text, target in arrows or []:
        tip = canvas.pt(target)
        norm = math.hypot(target[0], target[1]) or 1.0
        anchor_plane = (
            target[0] / norm * canvas.radius * 0.96,
            target[1] / norm * canvas.radius * 0.96,
        )
        anchor = canvas.pt(anchor_plane)
        out.append(
            f'<g class="arrow"><line x1="{anchor[0]:.6f}" y1="{anchor[1]:.6f}"'
            f' x2="{tip[0]:.6f}" y2="{tip[1]:.6f}" stroke="#333333"'
            f' stroke-width="1.4" marker-end="url(#tip)"/>'
            f'<text x="{anchor[0]:.6f}" y="{anchor[1]:.6f}" font-size="22"'
            f' font-family="serif" text-anchor="middle" fill="#1a1a1a"'
            f'>{text}</text></g>'
        )

    if title:
        out.append(
            f'<text x="{canvas.size / 2}" y="{canvas.size - 10}"'
            f' font-size="20" font-family="serif" text-anchor="middle"'
            f' fill="#333333">{title}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _figure_classification(
    data: GroupData, fx: Fixtures, L: int
) -> dict[GroupElement, str]:
    """Region label per element: the suffix-test members get their
    chamber's A-label, translation-family members their family tag (any
    exponent: the visible start of each infinite strip), the rest blank."""
    labels: dict[GroupElement, str] = {}
    for w in ball(data, L):
        if lowest_cell_member(w):
            labels[w] = f"A{chamber_index(w)}"
            continue
        tag = fx.family_membership(w, min_exponent=1)
        labels[w] = f"{tag.kind}{tag.index}" if tag else ""
    return labels


def _sector_label_points(data: GroupData) -> list[tuple[str, tuple[float, float]]]:
    """A1..A12 texts along each chamber's central direction."""
    finite = _sorted(w for w in ball(data, 6) if set(w.word) <= {1, 2})
    points = []
    for idx, v in enumerate(finite, start=1):
        (a, b), (c, d) = v.linear
        direction = (a * 4 + b * 7, c * 4 + d * 7)
        x, y = _to_plane((Fraction(direction[0]), Fraction(direction[1])))
        norm = math.hypot(x, y) or 1.0
        points.append((f"A{idx}", (x / norm, y / norm)))
    return points


@main.command(name="figure")
@click.option(
    "--parameters",
    nargs=2,
    type=int,
    default=(5, 1),
    show_default=True,
    help="Weight pair (a, b) recorded in the caption.",
)
@click.option("-L", "--bound", default=12, show_default=True, type=int)
@click.option(
    "--h-region",
    "h_word",
    default=None,
    help="Render the half-space region picture for this element instead.",
)
@_out_opt
@_group_opt
def figure_cmd(parameters, bound, h_word, out, group):
    """Draw the alcove plane as SVG.

    Default mode paints the asymptotic region map: the twelve chamber
    sectors of the lowest two-sided cell with labels A1..A12, and the
    twelve translation-family strips with arrows B1..B6, C1..C6.  With
    --h-region Z it instead highlights the base alcove, Z's alcove, and
    the half-space region separating them.
    """
    cfg = RunConfig(
        group=group, weights=tuple(parameters), bound=bound, out=out
    )
    data = cfg.data()
    if h_word is not None:
        z = _parse_element(data, h_word)
        if z.length > cfg.bound:
            raise click.UsageError(
                f"--h-region element has length {z.length} > bound {cfg.bound}"
            )
        region = h_region(z)
        svg = render_alcove_map(
            data,
            {},
            cfg.bound,
            title=f"half-space region of {z.word_str}",
            highlights={data.identity(): "base", z: "image"},
            shaded=region.contains_alcove,
        )
        default_name = f"hregion-{z.word_str}-L{cfg.bound}.svg"
    else:
        fx = Fixtures.build(data)
        labels = _figure_classification(data, fx, cfg.bound)
        arrows = []
        for kind, base, conj in (("B", fx.u, fx.w2), ("C", fx.u1, fx.w1)):
            for i, wi in enumerate(conj, start=1):
                member = base * wi
                arrows.append(
                    (f"{kind}{i}", _to_plane(alcove_point(member)))
                )
        a, b = cfg.weights
        svg = render_alcove_map(
            data,
            labels,
            cfg.bound,
            title=f"region map on ball({cfg.bound}), a={a} b={b}",
            arrows=arrows,
            sector_labels=_sector_label_points(data),
        )
        default_name = f"regions-a{a}-b{b}-L{cfg.bound}.svg"
    path = cfg.out_path(default_name)
    with open(path, "w") as fh:
        fh.write(svg)
    click.echo(f"wrote {path}")


if __name__ == "__main__":
    main()
