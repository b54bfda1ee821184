"""
The primitive exactly scaled rules. Each rule lists its boundary as inputs then outputs; the
side scalars are stars and pairs written into the diagrams themselves.
"""
import itertools
from typing import List, Sequence, Tuple

from more_itertools import powerset

from scaledzx.core import tensor, tensor_all
from scaledzx.models.Diagram import Diagram, DiagramBuilder, HalfEdge
from scaledzx.models.MatchSite import MatchSite
from scaledzx.models.RewriteRule import RewriteRule
from scaledzx.models.VertexKind import VertexKind
from scaledzx.patterns import attach_inputs, attach_outputs, pair, pairs, star, x_spider, z_scalar, z_spider
from scaledzx.rules.matching import (
    has_self_loop,
    is_kind,
    isolated,
    legs_except,
    other_half_edge,
    pair_parts,
    phase_of,
    take_pairs,
    two_leg,
    vertices,
)

PHASES = range(4)


def _legs(upto: int) -> range:
    return range(upto + 1)


# spider: Z(a1)[m1] – Z(a2)[m2] = Z(a1+a2)[m1+m2]


def spider_lhs(params: Tuple) -> Diagram:
    a1, a2, m1, m2 = params
    builder = DiagramBuilder()
    u = builder.add_vertex(VertexKind.z(a1))
    attach_outputs(builder, u, m1)
    v = builder.add_vertex(VertexKind.z(a2))
    builder.add_edge(u, v)
    attach_outputs(builder, v, m2)
    return builder.build()


def spider_rhs(params: Tuple) -> Diagram:
    a1, a2, m1, m2 = params
    return z_spider(a1 + a2, 0, m1 + m2)


def spider_forward(d: Diagram) -> List[MatchSite]:
    sites = []
    zs = vertices(d, "Z")
    for u, v in itertools.combinations(zs, 2):
        between = d.edges_between(u, v)
        if not between:
            continue
        internal = min(between)
        legs_u = legs_except(d, u, [internal])
        legs_v = legs_except(d, v, [internal])
        sites.append(
            MatchSite(
                (u, v),
                (internal,),
                tuple(legs_u + legs_v),
                0,
                (phase_of(d, u), phase_of(d, v), len(legs_u), len(legs_v)),
            )
        )
    return sites


def spider_unfuse_site(d: Diagram, v: int, alpha1: int, first: Sequence[HalfEdge]) -> MatchSite:
    """
    Backward spider site splitting Z vertex `v` into Z(alpha1) holding the half-edges `first`
    and Z(phase - alpha1) holding the rest.
    """
    rest = [h for h in d.half_edges(v) if h not in first]
    phase = phase_of(d, v)
    return MatchSite(
        (v,),
        (),
        tuple(first) + tuple(rest),
        0,
        (alpha1 % 4, (phase - alpha1) % 4, len(first), len(rest)),
    )


def spider_backward(d: Diagram) -> List[MatchSite]:
    sites = []
    for v in vertices(d, "Z"):
        half_edges = d.half_edges(v)
        for alpha1 in PHASES:
            for m1 in range(len(half_edges) + 1):
                sites.append(spider_unfuse_site(d, v, alpha1, half_edges[:m1]))
    return sites


def spider_instances(legs: int):
    return itertools.product(PHASES, PHASES, _legs(legs), _legs(legs))


# loop: Z(k)[n] with a self-loop = Z(k)[n]


def loop_lhs(params: Tuple) -> Diagram:
    k, n = params
    builder = DiagramBuilder()
    v = builder.add_vertex(VertexKind.z(k))
    attach_outputs(builder, v, n)
    builder.add_edge(v, v)
    return builder.build()


def loop_rhs(params: Tuple) -> Diagram:
    k, n = params
    return z_spider(k, 0, n)


def loop_forward(d: Diagram) -> List[MatchSite]:
    sites = []
    for v in vertices(d, "Z"):
        loops = d.self_loops(v)
        if loops:
            legs = legs_except(d, v, [loops[0]])
            sites.append(MatchSite((v,), (loops[0],), tuple(legs), 0, (phase_of(d, v), len(legs))))
    return sites


def loop_backward(d: Diagram) -> List[MatchSite]:
    return [
        MatchSite((v,), (), tuple(d.half_edges(v)), 0, (phase_of(d, v), d.degree(v)))
        for v in vertices(d, "Z")
    ]


def loop_instances(legs: int):
    return itertools.product(PHASES, _legs(legs))


# cup: Z(0) with two legs = bare wire


def cup_lhs(params: Tuple) -> Diagram:
    return z_spider(0, 0, 2)


def cup_rhs(params: Tuple) -> Diagram:
    builder = DiagramBuilder()
    a = builder.add_output()
    b = builder.add_output()
    builder.add_edge(a, b)
    return builder.build()


def cup_forward(d: Diagram) -> List[MatchSite]:
    return [
        MatchSite((v,), (), tuple(d.half_edges(v)), 0, ())
        for v in vertices(d, "Z", 0)
        if d.degree(v) == 2
    ]


def cup_edge_site(e: int) -> MatchSite:
    return MatchSite((), (), ((e, 0), (e, 1)), 0, ())


def cup_backward(d: Diagram) -> List[MatchSite]:
    return [cup_edge_site(e) for e in d.edges]


# colour: Z(k)[n] = X(k) with a Hadamard on every leg


def colour_lhs(params: Tuple) -> Diagram:
    k, n = params
    return z_spider(k, 0, n)


def colour_rhs(params: Tuple) -> Diagram:
    k, n = params
    builder = DiagramBuilder()
    x = builder.add_vertex(VertexKind.x(k))
    for _ in range(n):
        h = builder.add_vertex(VertexKind.hadamard())
        builder.add_edge(x, h)
        builder.add_edge(h, builder.add_output())
    return builder.build()


def colour_forward(d: Diagram) -> List[MatchSite]:
    sites = []
    for v in vertices(d, "Z"):
        if has_self_loop(d, v) or any(is_kind(d, w, "H") for w in d.neighbours(v)):
            continue
        sites.append(MatchSite((v,), (), tuple(d.half_edges(v)), 0, (phase_of(d, v), d.degree(v))))
    return sites


def colour_backward_site(d: Diagram, x: int):
    """
    The backward colour site at X vertex `x`, or None when some leg of `x` is not a
    private Hadamard.
    """
    if has_self_loop(d, x):
        return None
    hadamards, internal, legs = [], [], []
    for e, k in d.half_edges(x):
        h = d.edges[e][k]
        if not is_kind(d, h, "H") or h in hadamards:
            return None
        rest = other_half_edge(d, h, e)
        if rest is None or d.edges[rest[0]][rest[1]] == x:
            return None
        hadamards.append(h)
        internal.append(e)
        legs.append(rest)
    return MatchSite(
        (x, *hadamards), tuple(internal), tuple(legs), 0, (phase_of(d, x), len(hadamards))
    )


def colour_backward(d: Diagram) -> List[MatchSite]:
    sites = []
    for x in vertices(d, "X"):
        site = colour_backward_site(d, x)
        if site is not None:
            sites.append(site)
    return sites


def colour_instances(legs: int):
    return itertools.product(PHASES, _legs(legs))


# bialgebra: pair(0,0) ⊗ K2,2 = X(0)–Z(0)


def k22() -> Diagram:
    builder = DiagramBuilder()
    a = builder.add_vertex(VertexKind.z(0))
    b = builder.add_vertex(VertexKind.z(0))
    c = builder.add_vertex(VertexKind.x(0))
    d = builder.add_vertex(VertexKind.x(0))
    attach_inputs(builder, a, 1)
    attach_inputs(builder, b, 1)
    for u in (a, b):
        for w in (c, d):
            builder.add_edge(u, w)
    attach_outputs(builder, c, 1)
    attach_outputs(builder, d, 1)
    return builder.build()


def bialgebra_lhs(params: Tuple) -> Diagram:
    return tensor(pair(), k22())


def bialgebra_rhs(params: Tuple) -> Diagram:
    builder = DiagramBuilder()
    x = builder.add_vertex(VertexKind.x(0))
    attach_inputs(builder, x, 2)
    z = builder.add_vertex(VertexKind.z(0))
    builder.add_edge(x, z)
    attach_outputs(builder, z, 2)
    return builder.build()


def _k22_sites(d: Diagram):
    """
    Yields (vertices, internal edges, legs) for every K2,2 of degree-3 Z(0)/X(0) spiders.
    """
    zs = [v for v in vertices(d, "Z", 0) if d.degree(v) == 3 and not has_self_loop(d, v)]
    xs = [v for v in vertices(d, "X", 0) if d.degree(v) == 3 and not has_self_loop(d, v)]
    for a, b in itertools.combinations(zs, 2):
        for c, w in itertools.combinations(xs, 2):
            internal = []
            for u in (a, b):
                for t in (c, w):
                    between = d.edges_between(u, t)
                    if len(between) != 1:
                        break
                    internal.append(between[0])
                else:
                    continue
                break
            else:
                legs = [legs_except(d, v, internal) for v in (a, b, c, w)]
                if all(len(leg) == 1 for leg in legs):
                    yield (a, b, c, w), tuple(internal), tuple(leg[0] for leg in legs)


def bialgebra_forward(d: Diagram) -> List[MatchSite]:
    sites = []
    for found, internal, legs in _k22_sites(d):
        chosen = take_pairs(d, 1)
        if chosen is None:
            break
        pvs, pes = pair_parts(chosen)
        sites.append(MatchSite(pvs + found, pes + internal, legs, 0, ()))
    return sites


def bialgebra_backward(d: Diagram) -> List[MatchSite]:
    sites = []
    for x in vertices(d, "X", 0):
        if d.degree(x) != 3 or has_self_loop(d, x):
            continue
        for z in vertices(d, "Z", 0):
            if d.degree(z) != 3 or has_self_loop(d, z):
                continue
            between = d.edges_between(x, z)
            if len(between) != 1:
                continue
            legs = legs_except(d, x, between) + legs_except(d, z, between)
            sites.append(MatchSite((x, z), tuple(between), tuple(legs), 0, ()))
    return sites


def bialgebra_unscaled_lhs(params: Tuple) -> Diagram:
    return k22()


# copy: X(0) state on Z(α) with k other legs, with k-1 pairs(0,0) = k X(0) states


def _copy_core(k: int, alpha: int) -> Diagram:
    builder = DiagramBuilder()
    s = builder.add_vertex(VertexKind.x(0))
    z = builder.add_vertex(VertexKind.z(alpha))
    builder.add_edge(s, z)
    attach_outputs(builder, z, k)
    return builder.build()


def copy_lhs(params: Tuple) -> Diagram:
    k, alpha = params
    if k < 1:
        raise ValueError("copy needs at least one output")
    return tensor(pairs(k - 1), _copy_core(k, alpha))


def copy_rhs(params: Tuple) -> Diagram:
    k, alpha = params
    return tensor_all([x_spider(0, 0, 1) for _ in range(k)])


def copy_forward(d: Diagram) -> List[MatchSite]:
    sites = []
    for s in vertices(d, "X", 0):
        if d.degree(s) != 1:
            continue
        (e, k), = d.half_edges(s)
        z = d.edges[e][k]
        if not is_kind(d, z, "Z") or d.degree(z) < 2:
            continue
        legs = legs_except(d, z, [e])
        chosen = take_pairs(d, len(legs) - 1, avoid=(s, z))
        if chosen is None:
            continue
        pvs, pes = pair_parts(chosen)
        sites.append(
            MatchSite(pvs + (s, z), pes + (e,), tuple(legs), 0, (len(legs), phase_of(d, z)))
        )
    return sites


def copy_backward(d: Diagram, max_states: int = 3) -> List[MatchSite]:
    states = [s for s in vertices(d, "X", 0) if d.degree(s) == 1]
    sites = []
    for chosen in powerset(states):
        if not chosen or len(chosen) > max_states:
            continue
        legs = tuple(d.half_edges(s)[0] for s in chosen)
        sites.append(MatchSite(tuple(chosen), (), legs, 0, (len(chosen), 0)))
    return sites


def copy_instances(legs: int):
    return itertools.product(range(1, legs + 1), PHASES)


def copy_unscaled_lhs(params: Tuple) -> Diagram:
    k, alpha = params
    return _copy_core(k, alpha)


# pi-copy and pi-comm: X(π) on one leg of a Z spider


def _pi_on_leg(alpha: int, k: int) -> Diagram:
    builder = DiagramBuilder()
    x = builder.add_vertex(VertexKind.x(2))
    builder.add_edge(x, builder.add_output())
    z = builder.add_vertex(VertexKind.z(alpha))
    builder.add_edge(x, z)
    attach_outputs(builder, z, k)
    return builder.build()


def _pi_on_others(alpha: int, k: int) -> Diagram:
    builder = DiagramBuilder()
    z = builder.add_vertex(VertexKind.z(alpha))
    builder.add_edge(z, builder.add_output())
    for _ in range(k):
        x = builder.add_vertex(VertexKind.x(2))
        builder.add_edge(z, x)
        builder.add_edge(x, builder.add_output())
    return builder.build()


def _pi_leg_sites(d: Diagram, phase=None):
    """
    Yields (x, z, edge x–z, legs) for X(π) two-legged vertices sitting on a leg of a Z spider.
    """
    for x in vertices(d, "X", 2):
        if not two_leg(d, x, "X", 2):
            continue
        for e, k in d.half_edges(x):
            z = d.edges[e][k]
            if z == x or not is_kind(d, z, "Z", phase):
                continue
            free = other_half_edge(d, x, e)
            if free is None or d.edges[free[0]][free[1]] == z:
                continue
            yield x, z, e, (free, *legs_except(d, z, [e]))


def _pi_fanout_sites(d: Diagram, phase=None):
    """
    Yields (z, x vertices, internal edges, legs) for Z spiders whose half-edges, all but one
    direct half-edge, each lead to a private two-legged X(π).
    """
    for z in vertices(d, "Z", phase):
        if has_self_loop(d, z):
            continue
        half_edges = d.half_edges(z)
        for direct in half_edges:
            xs, internal, legs = [], [], [direct]
            for e, k in half_edges:
                if (e, k) == direct:
                    continue
                x = d.edges[e][k]
                if not two_leg(d, x, "X", 2) or x in xs:
                    break
                free = other_half_edge(d, x, e)
                if free is None or d.edges[free[0]][free[1]] == z:
                    break
                xs.append(x)
                internal.append(e)
                legs.append(free)
            else:
                yield z, tuple(xs), tuple(internal), tuple(legs)


def pi_copy_lhs(params: Tuple) -> Diagram:
    (k,) = params
    return _pi_on_leg(0, k)


def pi_copy_rhs(params: Tuple) -> Diagram:
    (k,) = params
    return _pi_on_others(0, k)


def pi_copy_forward(d: Diagram) -> List[MatchSite]:
    return [
        MatchSite((x, z), (e,), legs, 0, (len(legs) - 1,))
        for x, z, e, legs in _pi_leg_sites(d, 0)
    ]


def pi_copy_backward(d: Diagram) -> List[MatchSite]:
    return [
        MatchSite((z, *xs), internal, legs, 0, (len(legs) - 1,))
        for z, xs, internal, legs in _pi_fanout_sites(d, 0)
    ]


def pi_copy_instances(legs: int):
    return ((k,) for k in _legs(legs))


def pi_comm_lhs(params: Tuple) -> Diagram:
    alpha, k = params
    return tensor(pair(), _pi_on_leg(alpha, k))


def pi_comm_rhs(params: Tuple) -> Diagram:
    alpha, k = params
    return tensor(pair(alpha, 2), _pi_on_others(-alpha, k))


def pi_comm_forward(d: Diagram) -> List[MatchSite]:
    sites = []
    for x, z, e, legs in _pi_leg_sites(d):
        chosen = take_pairs(d, 1)
        if chosen is None:
            break
        pvs, pes = pair_parts(chosen)
        sites.append(MatchSite(pvs + (x, z), pes + (e,), legs, 0, (phase_of(d, z), len(legs) - 1)))
    return sites


def pi_comm_backward(d: Diagram) -> List[MatchSite]:
    sites = []
    for z, xs, internal, legs in _pi_fanout_sites(d):
        alpha = -phase_of(d, z) % 4
        chosen = take_pairs(d, 1, alpha, 2, avoid=(z, *xs))
        if chosen is None:
            continue
        pvs, pes = pair_parts(chosen)
        sites.append(MatchSite(pvs + (z, *xs), pes + internal, legs, 0, (alpha, len(legs) - 1)))
    return sites


def pi_comm_instances(legs: int):
    return itertools.product(PHASES, _legs(legs))


# euler: pair(0,0) ⊗ pair(0,0) ⊗ H = pair(-π/2,-π/2) ⊗ Z(π/2)–X(π/2)–Z(π/2)


def hadamard_pattern() -> Diagram:
    builder = DiagramBuilder()
    h = builder.add_vertex(VertexKind.hadamard())
    attach_outputs(builder, h, 2)
    return builder.build()


def euler_chain() -> Diagram:
    builder = DiagramBuilder()
    z1 = builder.add_vertex(VertexKind.z(1))
    builder.add_edge(z1, builder.add_output())
    x = builder.add_vertex(VertexKind.x(1))
    z2 = builder.add_vertex(VertexKind.z(1))
    builder.wire([z1, x, z2])
    builder.add_edge(z2, builder.add_output())
    return builder.build()


def euler_lhs(params: Tuple) -> Diagram:
    return tensor(pairs(2), hadamard_pattern())


def euler_rhs(params: Tuple) -> Diagram:
    return tensor(pair(3, 3), euler_chain())


def euler_forward(d: Diagram) -> List[MatchSite]:
    chosen = take_pairs(d, 2)
    if chosen is None:
        return []
    pvs, pes = pair_parts(chosen)
    return [
        MatchSite(pvs + (h,), pes, tuple(d.half_edges(h)), 0, ())
        for h in vertices(d, "H")
    ]


def euler_backward(d: Diagram) -> List[MatchSite]:
    sites = []
    for x in vertices(d, "X", 1):
        if not two_leg(d, x, "X", 1):
            continue
        (e1, k1), (e2, k2) = d.half_edges(x)
        ends = sorted([(d.edges[e1][k1], e1), (d.edges[e2][k2], e2)])
        (z1, f1), (z2, f2) = ends
        if z1 == z2 or not (two_leg(d, z1, "Z", 1) and two_leg(d, z2, "Z", 1)):
            continue
        leg1, leg2 = other_half_edge(d, z1, f1), other_half_edge(d, z2, f2)
        if d.edges[leg1[0]][leg1[1]] == x or d.edges[leg2[0]][leg2[1]] == x:
            continue
        chosen = take_pairs(d, 1, 3, 3, avoid=(z1, x, z2))
        if chosen is None:
            continue
        pvs, pes = pair_parts(chosen)
        sites.append(MatchSite(pvs + (z1, x, z2), pes + (f1, f2), (leg1, leg2), 0, ()))
    return sites


# hopf: pair ⊗ pair ⊗ Z(0)[m] =2= X(0)[n] = Z(0)[m] ⊗ X(0)[n]


def hopf_lhs(params: Tuple) -> Diagram:
    m, n = params
    builder = DiagramBuilder()
    z = builder.add_vertex(VertexKind.z(0))
    attach_outputs(builder, z, m)
    x = builder.add_vertex(VertexKind.x(0))
    builder.add_edge(z, x)
    builder.add_edge(z, x)
    attach_outputs(builder, x, n)
    return tensor(pairs(2), builder.build())


def hopf_rhs(params: Tuple) -> Diagram:
    m, n = params
    return tensor(z_spider(0, 0, m), x_spider(0, 0, n))


def hopf_forward(d: Diagram) -> List[MatchSite]:
    sites = []
    for z in vertices(d, "Z", 0):
        for x in vertices(d, "X", 0):
            between = d.edges_between(z, x)
            if len(between) != 2:
                continue
            chosen = take_pairs(d, 2, avoid=(z, x))
            if chosen is None:
                return sites
            pvs, pes = pair_parts(chosen)
            legs_z = legs_except(d, z, between)
            legs_x = legs_except(d, x, between)
            sites.append(
                MatchSite(
                    pvs + (z, x), pes + tuple(between), tuple(legs_z + legs_x), 0,
                    (len(legs_z), len(legs_x)),
                )
            )
    return sites


def hopf_backward(d: Diagram) -> List[MatchSite]:
    return [
        MatchSite((z, x), (), tuple(d.half_edges(z) + d.half_edges(x)), 0, (d.degree(z), d.degree(x)))
        for z in vertices(d, "Z", 0)
        for x in vertices(d, "X", 0)
    ]


def hopf_instances(legs: int):
    return itertools.product(_legs(legs), _legs(legs))


# star: star ⊗ Z(0) scalar = empty


def star_lhs(params: Tuple) -> Diagram:
    return tensor(star(), z_scalar(0))


def star_rhs(params: Tuple) -> Diagram:
    return Diagram.empty()


def star_forward(d: Diagram) -> List[MatchSite]:
    stars = vertices(d, "star")
    scalars = isolated(d, "Z", 0)
    if not stars or not scalars:
        return []
    return [MatchSite((stars[0], scalars[0]), (), (), 0, ())]


def star_backward(d: Diagram) -> List[MatchSite]:
    return [MatchSite()]


def single_instance(legs: int):
    return [()]


# zero: with an isolated Z(π) present, spider edges may be cut and colours flipped


def _zero_marker(d: Diagram, avoid: Sequence[int] = ()):
    for t in isolated(d, "Z", 2):
        if t not in avoid:
            return t
    return None


def _two_spiders(first: int, a: int, cv: str, second: int, b: int, connected: bool) -> Diagram:
    builder = DiagramBuilder()
    builder.add_vertex(VertexKind.z(2))
    u = builder.add_vertex(VertexKind.z(first))
    attach_outputs(builder, u, a)
    v = builder.add_vertex(VertexKind(cv, second))
    attach_outputs(builder, v, b)
    if connected:
        builder.add_edge(u, v)
    return builder.build()


def zero_lhs(params: Tuple) -> Diagram:
    match params[0]:
        case "edge":
            _, cv, alpha, a, beta, b = params
            return _two_spiders(alpha, a, cv, beta, b, True)
        case "flip":
            _, alpha, n = params
            return tensor(z_scalar(2), z_spider(alpha, 0, n))
        case _:
            raise ValueError(f"Unknown zero rule variant {params[0]!r}")


def zero_rhs(params: Tuple) -> Diagram:
    match params[0]:
        case "edge":
            _, cv, alpha, a, beta, b = params
            return _two_spiders(alpha, a, cv, beta, b, False)
        case "flip":
            _, alpha, n = params
            return tensor(z_scalar(2), x_spider(alpha, 0, n))
        case _:
            raise ValueError(f"Unknown zero rule variant {params[0]!r}")


def zero_edge_site(d: Diagram, e: int):
    """
    The forward zero-rule site cutting spider edge `e`, or None.
    """
    u, v = d.edges[e]
    if u == v or u not in d.vertices or v not in d.vertices:
        return None
    if not (d.kind(u).is_spider and d.kind(v).is_spider):
        return None
    if d.kind(u).is_x:
        u, v = v, u
    if not d.kind(u).is_z:
        return None
    if d.kind(v).is_z and v < u:
        u, v = v, u
    t = _zero_marker(d, (u, v))
    if t is None:
        return None
    legs_u = legs_except(d, u, [e])
    legs_v = legs_except(d, v, [e])
    params = ("edge", d.kind(v).kind, phase_of(d, u), len(legs_u), phase_of(d, v), len(legs_v))
    return MatchSite((t, u, v), (e,), tuple(legs_u + legs_v), 0, params)


def zero_flip_site(d: Diagram, v: int, direction_kind: str = "Z"):
    t = _zero_marker(d, (v,))
    if t is None or not is_kind(d, v, direction_kind):
        return None
    return MatchSite((t, v), (), tuple(d.half_edges(v)), 0, ("flip", phase_of(d, v), d.degree(v)))


def zero_forward(d: Diagram) -> List[MatchSite]:
    sites = [zero_edge_site(d, e) for e in d.edges]
    sites += [zero_flip_site(d, v, "Z") for v in vertices(d, "Z")]
    return [site for site in sites if site is not None]


def zero_backward(d: Diagram) -> List[MatchSite]:
    sites = []
    for u in vertices(d, "Z"):
        for v in d.spiders():
            if v == u or (d.kind(v).is_z and v < u):
                continue
            t = _zero_marker(d, (u, v))
            if t is None:
                continue
            params = ("edge", d.kind(v).kind, phase_of(d, u), d.degree(u), phase_of(d, v), d.degree(v))
            sites.append(
                MatchSite((t, u, v), (), tuple(d.half_edges(u) + d.half_edges(v)), 0, params)
            )
    sites += [zero_flip_site(d, v, "X") for v in vertices(d, "X")]
    return [site for site in sites if site is not None]


def zero_instances(legs: int):
    for cv in ("Z", "X"):
        for alpha, beta in itertools.product(PHASES, PHASES):
            for a, b in itertools.product(_legs(legs), _legs(legs)):
                yield ("edge", cv, alpha, a, beta, b)
    for alpha, n in itertools.product(PHASES, _legs(legs)):
        yield ("flip", alpha, n)


# zero-scalar: Z(π) ⊗ Z(α) scalars = Z(π)


def zero_scalar_lhs(params: Tuple) -> Diagram:
    (alpha,) = params
    return tensor(z_scalar(2), z_scalar(alpha))


def zero_scalar_rhs(params: Tuple) -> Diagram:
    return z_scalar(2)


def zero_scalar_forward(d: Diagram) -> List[MatchSite]:
    t = _zero_marker(d)
    if t is None:
        return []
    return [
        MatchSite((t, w), (), (), 0, (phase_of(d, w),))
        for w in isolated(d, "Z")
        if w != t
    ]


def zero_scalar_backward(d: Diagram) -> List[MatchSite]:
    t = _zero_marker(d)
    if t is None:
        return []
    return [MatchSite((t,), (), (), 0, (alpha,)) for alpha in PHASES]


def zero_scalar_instances(legs: int):
    return ((alpha,) for alpha in PHASES)


PRIMITIVE_RULES = [
    RewriteRule("spider", "Z spiders joined by an edge fuse, phases add",
                spider_lhs, spider_rhs, spider_instances, spider_forward, spider_backward),
    RewriteRule("loop", "a self-loop on a Z spider is removed",
                loop_lhs, loop_rhs, loop_instances, loop_forward, loop_backward),
    RewriteRule("cup", "a two-legged Z(0) is a plain wire",
                cup_lhs, cup_rhs, single_instance, cup_forward, cup_backward),
    RewriteRule("colour", "a Z spider is an X spider with Hadamards on every leg",
                colour_lhs, colour_rhs, colour_instances, colour_forward, colour_backward),
    RewriteRule("bialgebra", "pair(0,0) ⊗ K2,2 is an X(0)–Z(0) edge",
                bialgebra_lhs, bialgebra_rhs, single_instance, bialgebra_forward, bialgebra_backward),
    RewriteRule("copy", "an X(0) state is copied through a Z spider, k-1 pairs(0,0) restore scale",
                copy_lhs, copy_rhs, copy_instances, copy_forward, copy_backward),
    RewriteRule("pi-copy", "X(π) on one leg of Z(0) moves to every other leg",
                pi_copy_lhs, pi_copy_rhs, pi_copy_instances, pi_copy_forward, pi_copy_backward),
    RewriteRule("pi-comm", "X(π) commutes through Z(α), flipping its sign; side scalar pair(α,π)",
                pi_comm_lhs, pi_comm_rhs, pi_comm_instances, pi_comm_forward, pi_comm_backward),
    RewriteRule("euler", "pair(0,0)² ⊗ H is pair(-π/2,-π/2) ⊗ Z(π/2)X(π/2)Z(π/2)",
                euler_lhs, euler_rhs, single_instance, euler_forward, euler_backward),
    RewriteRule("hopf", "two pairs(0,0) and a double Z(0)–X(0) edge disconnect",
                hopf_lhs, hopf_rhs, hopf_instances, hopf_forward, hopf_backward, derived=True),
    RewriteRule("star", "star ⊗ Z(0) scalar is empty",
                star_lhs, star_rhs, single_instance, star_forward, star_backward),
    RewriteRule("zero", "next to a Z(π) scalar, spider edges are cut and colours flipped",
                zero_lhs, zero_rhs, zero_instances, zero_forward, zero_backward),
    RewriteRule("zero-scalar", "a Z(π) scalar absorbs any Z scalar",
                zero_scalar_lhs, zero_scalar_rhs, zero_scalar_instances,
                zero_scalar_forward, zero_scalar_backward),
]

NEGATIVE_CONTROLS = [
    RewriteRule("copy-unscaled", "copy without its pairs(0,0)",
                copy_unscaled_lhs, copy_rhs, copy_instances, negative_control=True),
    RewriteRule("bialgebra-unscaled", "bialgebra without its pair(0,0)",
                bialgebra_unscaled_lhs, bialgebra_rhs, single_instance, negative_control=True),
]
