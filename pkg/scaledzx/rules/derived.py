"""
Derived rules: equations provable from the primitive set that the normal-form pipelines use as
single steps. Graph rules act on Z spiders joined through Hadamard nodes.
"""
import itertools
from typing import List, Sequence, Tuple

from more_itertools import pairwise, powerset

from scaledzx import clifford
from scaledzx.core import tensor
from scaledzx.models.Diagram import Diagram, DiagramBuilder, HalfEdge
from scaledzx.models.MatchSite import MatchSite
from scaledzx.models.RewriteRule import RewriteRule
from scaledzx.models.VertexKind import VertexKind
from scaledzx.patterns import attach_outputs, chain, pair, star, z_spider
from scaledzx.rules.matching import (
    hadamard_edges_among,
    hadamard_spokes,
    has_self_loop,
    is_kind,
    legs_except,
    other_half_edge,
    plain_first,
    phase_of,
    take_pairs,
    two_leg,
    vertices,
)
from scaledzx.rules.primitive import PHASES, single_instance
from scaledzx.scalar_forms import nf_diagram


def _legs(upto: int) -> range:
    return range(upto + 1)


def _h_edge(builder: DiagramBuilder, u: int, w: int) -> int:
    h = builder.add_vertex(VertexKind.hadamard())
    builder.add_edge(u, h)
    builder.add_edge(h, w)
    return h


def _all_pairs(n: int) -> List[Tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def _toggled(n: int, edges: Sequence[Sequence[int]], allowed=None) -> List[Tuple[int, int]]:
    """
    The pairs in `allowed` (all pairs by default) symmetric-differenced with `edges`.
    """
    pairs = set(_all_pairs(n) if allowed is None else allowed)
    present = {tuple(e) for e in edges}
    if not present <= pairs:
        raise ValueError(f"Hadamard edges {sorted(present - pairs)} cannot be toggled")
    return sorted(pairs ^ present)


# free-loop: a free loop is a Z(0) with a self-loop


def free_loop_lhs(params: Tuple) -> Diagram:
    return Diagram(loops=1)


def free_loop_rhs(params: Tuple) -> Diagram:
    builder = DiagramBuilder()
    v = builder.add_vertex(VertexKind.z(0))
    builder.add_edge(v, v)
    return builder.build()


def free_loop_forward(d: Diagram) -> List[MatchSite]:
    return [MatchSite(loops=1)] if d.loops else []


def free_loop_backward(d: Diagram) -> List[MatchSite]:
    return [
        MatchSite((v,), tuple(d.self_loops(v)), (), 0, ())
        for v in vertices(d, "Z", 0)
        if d.degree(v) == 2 and d.self_loops(v)
    ]


# colour-h: X(k) with a plain and b Hadamard legs = Z(k) with the Hadamards moved to the plain legs


def colour_h_lhs(params: Tuple) -> Diagram:
    k, a, b = params
    builder = DiagramBuilder()
    x = builder.add_vertex(VertexKind.x(k))
    attach_outputs(builder, x, a)
    for _ in range(b):
        _h_edge(builder, x, builder.add_output())
    return builder.build()


def colour_h_rhs(params: Tuple) -> Diagram:
    k, a, b = params
    builder = DiagramBuilder()
    z = builder.add_vertex(VertexKind.z(k))
    for _ in range(a):
        _h_edge(builder, z, builder.add_output())
    attach_outputs(builder, z, b)
    return builder.build()


def split_hadamard_legs(d: Diagram, v: int):
    """
    Splits the legs of spider `v` into plain half-edges and half-edges beyond a private
    Hadamard. Returns (plain, beyond, hadamards, internal edges) or None.
    """
    if has_self_loop(d, v):
        return None
    plain, beyond, hadamards, internal = [], [], [], []
    for e, k in d.half_edges(v):
        h = d.edges[e][k]
        if not is_kind(d, h, "H"):
            plain.append((e, k))
            continue
        rest = other_half_edge(d, h, e)
        if rest is None or d.edges[rest[0]][rest[1]] == v:
            return None
        hadamards.append(h)
        internal.append(e)
        beyond.append(rest)
    return plain, beyond, hadamards, internal


def colour_h_forward(d: Diagram) -> List[MatchSite]:
    sites = []
    for x in vertices(d, "X"):
        split = split_hadamard_legs(d, x)
        if split is None:
            continue
        plain, beyond, hadamards, internal = split
        sites.append(
            MatchSite(
                (x, *hadamards), tuple(internal), tuple(plain + beyond), 0,
                (phase_of(d, x), len(plain), len(beyond)),
            )
        )
    return sites


def colour_h_backward(d: Diagram) -> List[MatchSite]:
    sites = []
    for z in vertices(d, "Z"):
        split = split_hadamard_legs(d, z)
        if split is None:
            continue
        plain, beyond, hadamards, internal = split
        sites.append(
            MatchSite(
                (z, *hadamards), tuple(internal), tuple(beyond + plain), 0,
                (phase_of(d, z), len(beyond), len(plain)),
            )
        )
    return sites


def colour_h_instances(legs: int):
    return itertools.product(PHASES, _legs(legs), _legs(legs))


# hadamard-loop: Z(α)[n] with a Hadamard self-loop = star ⊗ pair(0,0) ⊗ Z(α+π)[n]


def hadamard_loop_lhs(params: Tuple) -> Diagram:
    alpha, n = params
    builder = DiagramBuilder()
    v = builder.add_vertex(VertexKind.z(alpha))
    attach_outputs(builder, v, n)
    _h_edge(builder, v, v)
    return builder.build()


def hadamard_loop_rhs(params: Tuple) -> Diagram:
    alpha, n = params
    return tensor(tensor(star(), pair()), z_spider(alpha + 2, 0, n))


def hadamard_loop_forward(d: Diagram) -> List[MatchSite]:
    sites = []
    for v in vertices(d, "Z"):
        done = set()
        for e, k in d.half_edges(v):
            h = d.edges[e][k]
            if h in done or not is_kind(d, h, "H"):
                continue
            looped = d.edges_between(v, h)
            if len(looped) != 2:
                continue
            done.add(h)
            legs = legs_except(d, v, looped)
            sites.append(MatchSite((v, h), tuple(looped), tuple(legs), 0, (phase_of(d, v), len(legs))))
    return sites


def hadamard_loop_backward(d: Diagram) -> List[MatchSite]:
    stars = vertices(d, "star")
    if not stars:
        return []
    sites = []
    for v in vertices(d, "Z"):
        chosen = take_pairs(d, 1, avoid=(v,))
        if chosen is None:
            continue
        (z, x, e), = chosen
        sites.append(
            MatchSite(
                (stars[0], z, x, v), (e,), tuple(d.half_edges(v)), 0,
                ((phase_of(d, v) - 2) % 4, d.degree(v)),
            )
        )
    return sites


def hadamard_loop_instances(legs: int):
    return itertools.product(PHASES, _legs(legs))


# hadamard-hopf: two parallel Hadamard edges between Z spiders = star ⊗ the spiders apart


def hadamard_hopf_lhs(params: Tuple) -> Diagram:
    alpha, m, beta, n = params
    builder = DiagramBuilder()
    u = builder.add_vertex(VertexKind.z(alpha))
    attach_outputs(builder, u, m)
    v = builder.add_vertex(VertexKind.z(beta))
    attach_outputs(builder, v, n)
    _h_edge(builder, u, v)
    _h_edge(builder, u, v)
    return builder.build()


def hadamard_hopf_rhs(params: Tuple) -> Diagram:
    alpha, m, beta, n = params
    return tensor(star(), tensor(z_spider(alpha, 0, m), z_spider(beta, 0, n)))


def hadamards_between(d: Diagram, u: int, v: int) -> List[Tuple[int, int, int]]:
    """
    Hadamard nodes joining `u` to `v`, as (hadamard, edge at u, edge at v).
    """
    found = []
    for e, k in d.half_edges(u):
        h = d.edges[e][k]
        if not is_kind(d, h, "H"):
            continue
        rest = other_half_edge(d, h, e)
        if rest is not None and d.edges[rest[0]][rest[1]] == v:
            found.append((h, e, rest[0]))
    return found


def hadamard_hopf_site(d: Diagram, u: int, v: int):
    between = hadamards_between(d, u, v)
    if u == v or len(between) < 2:
        return None
    (h1, a1, b1), (h2, a2, b2) = between[:2]
    legs_u = legs_except(d, u, [a1, a2])
    legs_v = legs_except(d, v, [b1, b2])
    return MatchSite(
        (u, v, h1, h2), (a1, b1, a2, b2), tuple(legs_u + legs_v), 0,
        (phase_of(d, u), len(legs_u), phase_of(d, v), len(legs_v)),
    )


def hadamard_hopf_forward(d: Diagram) -> List[MatchSite]:
    sites = [hadamard_hopf_site(d, u, v) for u, v in itertools.combinations(vertices(d, "Z"), 2)]
    return [site for site in sites if site is not None]


def hadamard_hopf_backward(d: Diagram) -> List[MatchSite]:
    stars = vertices(d, "star")
    if not stars:
        return []
    return [
        MatchSite(
            (stars[0], u, v), (), tuple(d.half_edges(u) + d.half_edges(v)), 0,
            (phase_of(d, u), d.degree(u), phase_of(d, v), d.degree(v)),
        )
        for u, v in itertools.combinations(vertices(d, "Z"), 2)
    ]


def hadamard_hopf_instances(legs: int):
    return itertools.product(PHASES, _legs(legs), PHASES, _legs(legs))


# hadamard-identity: a plain wire = H–Z(0)–H


def hadamard_identity_lhs(params: Tuple) -> Diagram:
    builder = DiagramBuilder()
    builder.add_edge(builder.add_output(), builder.add_output())
    return builder.build()


def hadamard_identity_rhs(params: Tuple) -> Diagram:
    builder = DiagramBuilder()
    a = builder.add_output()
    b = builder.add_output()
    h1 = builder.add_vertex(VertexKind.hadamard())
    z = builder.add_vertex(VertexKind.z(0))
    h2 = builder.add_vertex(VertexKind.hadamard())
    builder.wire([a, h1, z, h2, b])
    return builder.build()


def hadamard_identity_site(e: int) -> MatchSite:
    return MatchSite((), (), ((e, 0), (e, 1)), 0, ())


def hadamard_identity_forward(d: Diagram) -> List[MatchSite]:
    return [
        hadamard_identity_site(e)
        for e, (u, v) in d.edges.items()
        if not is_kind(d, u, "H") and not is_kind(d, v, "H")
    ]


def hadamard_identity_backward(d: Diagram) -> List[MatchSite]:
    sites = []
    for z in vertices(d, "Z", 0):
        if not two_leg(d, z, "Z", 0):
            continue
        (e1, k1), (e2, k2) = d.half_edges(z)
        h1, h2 = d.edges[e1][k1], d.edges[e2][k2]
        if h1 == h2 or not (is_kind(d, h1, "H") and is_kind(d, h2, "H")):
            continue
        rest1, rest2 = other_half_edge(d, h1, e1), other_half_edge(d, h2, e2)
        if rest1 is None or rest2 is None:
            continue
        if {d.edges[rest1[0]][rest1[1]], d.edges[rest2[0]][rest2[1]]} & {z, h1, h2}:
            continue
        sites.append(MatchSite((h1, z, h2), (e1, e2), (rest1, rest2), 0, ()))
    return sites


# lcomp: an interior Z(±π/2) is removed by complementing its neighbourhood


def _neighbourhood(
    builder: DiagramBuilder, phases: Sequence[int], hedges: Sequence[Sequence[int]]
) -> List[int]:
    ws = [builder.add_vertex(VertexKind.z(phase)) for phase in phases]
    for i, j in hedges:
        _h_edge(builder, ws[i], ws[j])
    return ws


def _check_sign(a: int) -> None:
    if a % 4 not in (1, 3):
        raise ValueError(f"lcomp needs a ±π/2 spider, got {a} quarter turns")


def lcomp_lhs(params: Tuple) -> Diagram:
    a, phases, legs, hedges = params
    _check_sign(a)
    builder = DiagramBuilder()
    v = builder.add_vertex(VertexKind.z(a))
    ws = _neighbourhood(builder, phases, hedges)
    for w, n in zip(ws, legs):
        _h_edge(builder, v, w)
        attach_outputs(builder, w, n)
    return builder.build()


def lcomp_rhs(params: Tuple) -> Diagram:
    a, phases, legs, hedges = params
    _check_sign(a)
    k = len(phases)
    toggled = _toggled(k, hedges)
    builder = DiagramBuilder()
    ws = _neighbourhood(builder, [phase - a for phase in phases], toggled)
    for w, n in zip(ws, legs):
        attach_outputs(builder, w, n)
    r = 1 - k + len(toggled) - len(hedges)
    return tensor(builder.build(), nf_diagram(r, 1 if a % 4 == 1 else 7))


def _spoke_parts(spokes) -> Tuple[List[int], List[int]]:
    hs, internal = [], []
    for h, e, rest, _ in spokes:
        hs.append(h)
        internal += [e, rest[0]]
    return hs, internal


def lcomp_site(d: Diagram, v: int):
    """
    The lcomp site at `v`, or None unless `v` is a Z(±π/2) whose every leg runs through a
    private Hadamard to a distinct Z neighbour.
    """
    if not is_kind(d, v, "Z") or phase_of(d, v) not in (1, 3):
        return None
    spokes = hadamard_spokes(d, v)
    if spokes is None:
        return None
    ws = [w for *_, w in spokes]
    among = hadamard_edges_among(d, ws)
    if among is None:
        return None
    hs, internal = _spoke_parts(spokes)
    for h, e1, e2 in among.values():
        hs.append(h)
        internal += [e1, e2]
    legs: List[HalfEdge] = []
    counts = []
    for w in ws:
        own = legs_except(d, w, internal)
        legs += own
        counts.append(len(own))
    params = (
        phase_of(d, v),
        tuple(phase_of(d, w) for w in ws),
        tuple(counts),
        tuple(sorted(among)),
    )
    return MatchSite((v, *hs, *ws), tuple(internal), tuple(legs), 0, params)


def lcomp_forward(d: Diagram) -> List[MatchSite]:
    sites = [lcomp_site(d, v) for v in vertices(d, "Z")]
    return [site for site in sites if site is not None]


def lcomp_instances(legs: int):
    for a in (1, 3):
        for k in range(min(legs, 3) + 1):
            phase_choices = (
                itertools.product(PHASES, repeat=k) if k <= 2 else [(0, 1, 2), (3, 2, 1)]
            )
            for phases in phase_choices:
                for hedges in powerset(_all_pairs(k)):
                    yield (a, phases, (1,) * k, tuple(hedges))
            yield (a, (0,) * k, tuple(range(k)), ())


# pivot: adjacent interior Pauli spiders u, v are removed; neighbour classes A (u only),
# B (v only) and C (both) are complemented against each other


def _pivot_classes(params: Tuple) -> Tuple[List[int], List[Tuple[int, int]]]:
    _, _, group_a, group_b, group_c, _ = params
    classes = [0] * len(group_a) + [1] * len(group_b) + [2] * len(group_c)
    cross = [(i, j) for i, j in _all_pairs(len(classes)) if classes[i] != classes[j]]
    return classes, cross


def pivot_lhs(params: Tuple) -> Diagram:
    p, q, group_a, group_b, group_c, hedges = params
    classes, cross = _pivot_classes(params)
    _toggled(len(classes), hedges, cross)
    builder = DiagramBuilder()
    u = builder.add_vertex(VertexKind.z(2 * p))
    v = builder.add_vertex(VertexKind.z(2 * q))
    _h_edge(builder, u, v)
    members = list(group_a) + list(group_b) + list(group_c)
    ws = _neighbourhood(builder, [phase for phase, _ in members], hedges)
    for w, cls in zip(ws, classes):
        if cls != 1:
            _h_edge(builder, u, w)
        if cls != 0:
            _h_edge(builder, v, w)
    for w, (_, n) in zip(ws, members):
        attach_outputs(builder, w, n)
    return builder.build()


def pivot_rhs(params: Tuple) -> Diagram:
    p, q, group_a, group_b, group_c, hedges = params
    classes, cross = _pivot_classes(params)
    toggled = _toggled(len(classes), hedges, cross)
    shift = (2 * q, 2 * p, 2 * (p + q + 1))
    members = list(group_a) + list(group_b) + list(group_c)
    builder = DiagramBuilder()
    ws = _neighbourhood(
        builder, [phase + shift[cls] for (phase, _), cls in zip(members, classes)], toggled
    )
    for w, (_, n) in zip(ws, members):
        attach_outputs(builder, w, n)
    r = 1 + len(toggled) - len(hedges) - len(group_a) - len(group_b) - 2 * len(group_c)
    return tensor(builder.build(), nf_diagram(r, 4 * p * q))


def pivot_site(d: Diagram, u: int, v: int):
    """
    The pivot site on the edge u–H–v, or None unless both are interior Pauli Z spiders.
    """
    if phase_of(d, u) % 2 or phase_of(d, v) % 2:
        return None
    spokes_u = hadamard_spokes(d, u)
    spokes_v = hadamard_spokes(d, v)
    if spokes_u is None or spokes_v is None:
        return None
    near_u = [w for *_, w in spokes_u]
    near_v = [w for *_, w in spokes_v]
    if v not in near_u:
        return None
    group_a = [w for w in near_u if w != v and w not in near_v]
    group_b = [w for w in near_v if w != u and w not in near_u]
    group_c = [w for w in near_u if w in near_v]
    ws = group_a + group_b + group_c
    classes = [0] * len(group_a) + [1] * len(group_b) + [2] * len(group_c)
    among = hadamard_edges_among(d, ws, classes)
    if among is None:
        return None
    hs_u, internal_u = _spoke_parts(spokes_u)
    hs_v, internal_v = _spoke_parts(spokes_v)
    hs = list(dict.fromkeys(hs_u + hs_v))
    internal = list(dict.fromkeys(internal_u + internal_v))
    for h, e1, e2 in among.values():
        hs.append(h)
        internal += [e1, e2]
    legs: List[HalfEdge] = []
    members = []
    for w in ws:
        own = legs_except(d, w, internal)
        legs += own
        members.append((phase_of(d, w), len(own)))
    na, nb = len(group_a), len(group_b)
    params = (
        phase_of(d, u) // 2,
        phase_of(d, v) // 2,
        tuple(members[:na]),
        tuple(members[na:na + nb]),
        tuple(members[na + nb:]),
        tuple(sorted(among)),
    )
    return MatchSite((u, v, *hs, *ws), tuple(internal), tuple(legs), 0, params)


def pivot_forward(d: Diagram) -> List[MatchSite]:
    sites = []
    for u, v in itertools.combinations(vertices(d, "Z"), 2):
        site = pivot_site(d, u, v)
        if site is not None:
            sites.append(site)
    return sites


def pivot_instances(legs: int):
    for p, q in itertools.product((0, 1), repeat=2):
        for sizes in itertools.product((0, 1), repeat=3):
            n = sum(sizes)
            classes = [0] * sizes[0] + [1] * sizes[1] + [2] * sizes[2]
            cross = [(i, j) for i, j in _all_pairs(n) if classes[i] != classes[j]]
            phase_choices = (
                itertools.product(PHASES, repeat=n) if n <= 1 else [(0,) * n, (1, 2, 3)[:n]]
            )
            for phases in phase_choices:
                members = [(phase, 1) for phase in phases]
                groups = (
                    tuple(members[: sizes[0]]),
                    tuple(members[sizes[0]: sizes[0] + sizes[1]]),
                    tuple(members[sizes[0] + sizes[1]:]),
                )
                for hedges in powerset(cross):
                    yield (p, q, *groups, tuple(hedges))


# gslc-lc: local complementation of a graph state about vertex v, as local Cliffords
# X(-π/2) on v's leg and Z(π/2) on each neighbour's first leg


def _check_legs(legs: Sequence[int]) -> None:
    if any(n < 1 for n in legs):
        raise ValueError("every neighbour needs at least one leg")


def gslc_lc_lhs(params: Tuple) -> Diagram:
    phases, legs, hedges = params
    _check_legs(legs)
    builder = DiagramBuilder()
    v = builder.add_vertex(VertexKind.z(0))
    attach_outputs(builder, v, 1)
    ws = _neighbourhood(builder, phases, hedges)
    for w, n in zip(ws, legs):
        _h_edge(builder, v, w)
        attach_outputs(builder, w, n)
    return builder.build()


def gslc_lc_rhs(params: Tuple) -> Diagram:
    phases, legs, hedges = params
    _check_legs(legs)
    toggled = _toggled(len(phases), hedges)
    builder = DiagramBuilder()
    v = builder.add_vertex(VertexKind.z(0))
    builder.wire([v, builder.add_vertex(VertexKind.x(3)), builder.add_output()])
    ws = _neighbourhood(builder, phases, toggled)
    for w, n in zip(ws, legs):
        _h_edge(builder, v, w)
        builder.wire([w, builder.add_vertex(VertexKind.z(1)), builder.add_output()])
        attach_outputs(builder, w, n - 1)
    return tensor(builder.build(), nf_diagram(len(toggled) - len(hedges), 0))


def graph_vertex_spokes(d: Diagram, v: int):
    """
    For a Z(0) graph vertex with exactly one plain leg: (plain leg, spokes). None otherwise.
    """
    if not is_kind(d, v, "Z", 0) or has_self_loop(d, v):
        return None
    plain = [h for h in d.half_edges(v) if not is_kind(d, d.edges[h[0]][h[1]], "H")]
    if len(plain) != 1:
        return None
    spokes = hadamard_spokes(d, v, skip=plain)
    if spokes is None:
        return None
    return plain[0], spokes


def gslc_lc_site(d: Diagram, v: int):
    """
    The gslc-lc site at graph vertex `v`, or None.
    """
    found = graph_vertex_spokes(d, v)
    if found is None:
        return None
    plain, spokes = found
    ws = [w for *_, w in spokes]
    among = hadamard_edges_among(d, ws)
    if among is None:
        return None
    hs, internal = _spoke_parts(spokes)
    for h, e1, e2 in among.values():
        hs.append(h)
        internal += [e1, e2]
    legs: List[HalfEdge] = [plain]
    counts = []
    for w in ws:
        own = plain_first(d, legs_except(d, w, internal))
        if not own:
            return None
        legs += own
        counts.append(len(own))
    params = (tuple(phase_of(d, w) for w in ws), tuple(counts), tuple(sorted(among)))
    return MatchSite((v, *hs, *ws), tuple(internal), tuple(legs), 0, params)


def gslc_lc_forward(d: Diagram) -> List[MatchSite]:
    sites = [gslc_lc_site(d, v) for v in vertices(d, "Z", 0)]
    return [site for site in sites if site is not None]


def gslc_instances(legs: int):
    for k in range(min(legs, 3) + 1):
        for phases, counts in (((0,) * k, (1,) * k), ((1, 2, 3)[:k], (2, 1, 1)[:k])):
            for hedges in powerset(_all_pairs(k)):
                yield (phases, counts, tuple(hedges))


# graph-stabilizer: X(π) on a graph vertex's leg with Z(π) on each neighbour's first leg is
# the identity


def graph_stabilizer_lhs(params: Tuple) -> Diagram:
    phases, legs = params
    _check_legs(legs)
    builder = DiagramBuilder()
    v = builder.add_vertex(VertexKind.z(0))
    builder.wire([v, builder.add_vertex(VertexKind.x(2)), builder.add_output()])
    for phase, n in zip(phases, legs):
        w = builder.add_vertex(VertexKind.z(phase))
        _h_edge(builder, v, w)
        builder.wire([w, builder.add_vertex(VertexKind.z(2)), builder.add_output()])
        attach_outputs(builder, w, n - 1)
    return builder.build()


def graph_stabilizer_rhs(params: Tuple) -> Diagram:
    phases, legs = params
    _check_legs(legs)
    builder = DiagramBuilder()
    v = builder.add_vertex(VertexKind.z(0))
    attach_outputs(builder, v, 1)
    for phase, n in zip(phases, legs):
        w = builder.add_vertex(VertexKind.z(phase))
        _h_edge(builder, v, w)
        attach_outputs(builder, w, n)
    return builder.build()


def _pauli_node(d: Diagram, half_edge: HalfEdge, kind: str, avoid: Sequence[int]):
    """
    If `half_edge` leads to a two-legged Pauli node of `kind`, (node, edge, its far half-edge).
    """
    e, k = half_edge
    node = d.edges[e][k]
    if node in avoid or not two_leg(d, node, kind, 2):
        return None
    rest = other_half_edge(d, node, e)
    if rest is None or d.edges[rest[0]][rest[1]] in avoid:
        return None
    return node, e, rest


def graph_stabilizer_forward(d: Diagram) -> List[MatchSite]:
    sites = []
    for v in vertices(d, "Z", 0):
        found = graph_vertex_spokes(d, v)
        if found is None:
            continue
        plain, spokes = found
        hs, internal = _spoke_parts(spokes)
        ws = [w for *_, w in spokes]
        avoid = [v, *hs, *ws]
        flip_x = _pauli_node(d, plain, "X", avoid)
        if flip_x is None:
            continue
        nodes = [flip_x[0]]
        internal.append(flip_x[1])
        legs = [flip_x[2]]
        members = []
        for w in ws:
            own = legs_except(d, w, internal)
            flip_z = None
            for half_edge in own:
                flip_z = _pauli_node(d, half_edge, "Z", avoid + nodes)
                if flip_z is not None:
                    break
            if flip_z is None:
                break
            nodes.append(flip_z[0])
            internal.append(flip_z[1])
            legs.append(flip_z[2])
            legs += [h for h in own if h[0] != flip_z[1]]
            members.append((phase_of(d, w), len(own)))
        else:
            params = (tuple(m[0] for m in members), tuple(m[1] for m in members))
            sites.append(MatchSite((v, *hs, *ws, *nodes), tuple(internal), tuple(legs), 0, params))
    return sites


def graph_stabilizer_site(d: Diagram, v: int):
    """
    The backward graph-stabilizer site at graph vertex `v`, or None.
    """
    found = graph_vertex_spokes(d, v)
    if found is None:
        return None
    plain, spokes = found
    hs, internal = _spoke_parts(spokes)
    legs: List[HalfEdge] = [plain]
    phases, counts = [], []
    for *_, w in spokes:
        own = plain_first(d, legs_except(d, w, internal))
        if not own:
            return None
        legs += own
        phases.append(phase_of(d, w))
        counts.append(len(own))
    ws = [w for *_, w in spokes]
    return MatchSite((v, *hs, *ws), tuple(internal), tuple(legs), 0, (tuple(phases), tuple(counts)))


def graph_stabilizer_backward(d: Diagram) -> List[MatchSite]:
    sites = [graph_stabilizer_site(d, v) for v in vertices(d, "Z", 0)]
    return [site for site in sites if site is not None]


def graph_stabilizer_instances(legs: int):
    for k in range(min(legs, 3) + 1):
        yield ((0,) * k, (1,) * k)
        yield ((1, 2, 3)[:k], (2, 1, 1)[:k])


# clifford-word: a chain of two-legged nodes = its canonical word times e^(isπ/4)

CHAIN_KINDS = ("Z", "X", "H")


def clifford_word_lhs(params: Tuple) -> Diagram:
    return chain(clifford.word_kinds(params))


def clifford_word_rhs(params: Tuple) -> Diagram:
    index, s = clifford.classify(tuple(params))
    return tensor(chain(clifford.word_kinds(clifford.canonical_word(index))), nf_diagram(0, s))


def _chain_node(d: Diagram, node: int) -> bool:
    if node not in d.vertices or d.degree(node) != 2 or has_self_loop(d, node):
        return False
    return d.kind(node).kind in CHAIN_KINDS


def clifford_chain_site(d: Diagram, start: HalfEdge, nodes: Sequence[int]) -> MatchSite:
    """
    The forward clifford-word site for consecutive two-legged `nodes`, where `start` is the
    half-edge at the first node leading away from the chain.
    """
    internal = []
    previous = start
    for node in nodes:
        (e, k), = [h for h in d.half_edges(node) if h[0] != previous[0]]
        internal.append(e)
        previous = (e, k)
    internal.pop()
    word = tuple(d.kind(node).label() for node in nodes)
    return MatchSite(tuple(nodes), tuple(internal), (start, previous), 0, word)


def boundary_chain(d: Diagram, b: int):
    """
    Walks inward from boundary `b` through two-legged nodes. Returns (start, nodes) with the
    nodes listed from the inner end, or None if there are none.
    """
    (e, k), = d.half_edges(b)
    walked: List[int] = []
    node, came = d.edges[e][k], e
    while _chain_node(d, node) and node not in walked:
        walked.append(node)
        (e, k), = [h for h in d.half_edges(node) if h[0] != came]
        node, came = d.edges[e][k], e
    if not walked:
        return None
    inner = walked[-1]
    start = [h for h in d.half_edges(inner) if h[0] == came]
    if len(start) != 1:
        return None
    return start[0], list(reversed(walked))


def clifford_word_forward(d: Diagram) -> List[MatchSite]:
    sites = []
    for b in d.boundary:
        found = boundary_chain(d, b)
        if found is None:
            continue
        site = clifford_chain_site(d, *found)
        index, s = clifford.classify(site.params)
        if s != 0 or site.params != clifford.canonical_word(index):
            sites.append(site)
    return sites


def clifford_word_backward(d: Diagram) -> List[MatchSite]:
    sites = []
    for b in d.boundary:
        found = boundary_chain(d, b)
        if found is None:
            continue
        site = clifford_chain_site(d, *found)
        index, s = clifford.classify(site.params)
        if s == 0 and site.params == clifford.canonical_word(index):
            sites.append(site)
    return sites


def hadamard_reduced(word: Sequence[str]) -> bool:
    return not any(a == b == "H" for a, b in pairwise(word))


def clifford_word_instances(legs: int):
    yield ()
    for length in (1, 2):
        words = itertools.product(clifford.GENERATORS + ("H",), repeat=length)
        yield from filter(hadamard_reduced, words)
    yield ("Z1", "X1", "Z1")
    yield ("H", "Z2", "H", "X3")


DERIVED_RULES = [
    RewriteRule("free-loop", "a free loop is a Z(0) with a self-loop",
                free_loop_lhs, free_loop_rhs, single_instance,
                free_loop_forward, free_loop_backward, derived=True, closed=False),
    RewriteRule("colour-h", "an X spider is a Z spider with Hadamards toggled on every leg",
                colour_h_lhs, colour_h_rhs, colour_h_instances,
                colour_h_forward, colour_h_backward, derived=True, closed=False),
    RewriteRule("hadamard-loop", "a Hadamard self-loop is star ⊗ pair(0,0) and a π phase",
                hadamard_loop_lhs, hadamard_loop_rhs, hadamard_loop_instances,
                hadamard_loop_forward, hadamard_loop_backward, derived=True),
    RewriteRule("hadamard-hopf", "two parallel Hadamard edges between Z spiders cost a star",
                hadamard_hopf_lhs, hadamard_hopf_rhs, hadamard_hopf_instances,
                hadamard_hopf_forward, hadamard_hopf_backward, derived=True, closed=False),
    RewriteRule("hadamard-identity", "a plain wire is H–Z(0)–H",
                hadamard_identity_lhs, hadamard_identity_rhs, single_instance,
                hadamard_identity_forward, hadamard_identity_backward, derived=True, closed=False),
    RewriteRule("lcomp", "an interior Z(±π/2) is removed by local complementation",
                lcomp_lhs, lcomp_rhs, lcomp_instances, lcomp_forward,
                derived=True, closed=False),
    RewriteRule("pivot", "adjacent interior Pauli spiders are removed by pivoting",
                pivot_lhs, pivot_rhs, pivot_instances, pivot_forward,
                derived=True, closed=False),
    RewriteRule("gslc-lc", "local complementation of a graph state with its local Cliffords",
                gslc_lc_lhs, gslc_lc_rhs, gslc_instances, gslc_lc_forward,
                derived=True, closed=False),
    RewriteRule("graph-stabilizer", "X(π) on a vertex and Z(π) on its neighbours fix a graph state",
                graph_stabilizer_lhs, graph_stabilizer_rhs, graph_stabilizer_instances,
                graph_stabilizer_forward, graph_stabilizer_backward, derived=True, closed=False),
    RewriteRule("clifford-word", "a chain of two-legged nodes is its canonical Clifford word",
                clifford_word_lhs, clifford_word_rhs, clifford_word_instances,
                clifford_word_forward, clifford_word_backward, derived=True, closed=False),
]
