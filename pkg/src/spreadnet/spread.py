"""Spread nets: the three axioms, the spreading algorithm, folding and
spread-morphism checkers."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Mapping

from .errors import (DimensionMismatch, KNotInJ, NonInjectiveInputLabels,
                     NotAnMcNet, NotComposable, UnsafeNet)
from .mcnets import McNet, check_mcn_morphism, components, validate_mcnet
from .nets import Net, NetMorphism, Verdict
from .ticking import (EPSILON, TickingMap, VectorClock, VectorClockDomain,
                      op_mix)


@dataclass(frozen=True)
class SpreadNet:
    """An mc-net over a vector-clock domain with information map ``h`` and
    one ticking map per component."""

    mc: McNet
    vcd: VectorClockDomain
    _h: tuple = field(repr=False)
    taus: tuple = ()

    @staticmethod
    def build(mc: McNet, vcd: VectorClockDomain,
              h: Mapping[str, VectorClock], taus) -> "SpreadNet":
        return SpreadNet(mc, vcd, tuple(sorted(h.items())), tuple(taus))

    @cached_property
    def h(self) -> dict:
        return dict(self._h)

    def clock(self, place: str) -> VectorClock:
        return self.h[place]

    @property
    def support(self) -> McNet:
        return self.mc

    @property
    def labels_to_original(self) -> dict:
        return self.mc.net.labels


@dataclass(frozen=True)
class FoldingMorphism:
    """Total place/transition maps from a spreading onto the original net."""

    place_map: tuple
    trans_map: tuple

    @staticmethod
    def build(place_map: Mapping[str, str],
              trans_map: Mapping[str, str]) -> "FoldingMorphism":
        return FoldingMorphism(tuple(sorted(place_map.items())),
                               tuple(sorted(trans_map.items())))

    @cached_property
    def places(self) -> dict:
        return dict(self.place_map)

    @cached_property
    def trans(self) -> dict:
        return dict(self.trans_map)


@dataclass(frozen=True)
class SpreadResult:
    net: SpreadNet
    folding: FoldingMorphism
    saturated: bool


def _clock_str(clock: VectorClock) -> str:
    return ",".join("".join(w) for w in clock)


def validate_spread(s: SpreadNet) -> Verdict:
    """Check the three spread axioms exhaustively."""
    pre_check = validate_mcnet(s.mc)
    if not pre_check:
        raise NotAnMcNet("; ".join(pre_check.violations))
    net = s.mc.net
    vcd = s.vcd
    v = []

    eps = vcd.eps()
    for p in sorted(net.initial):
        if not vcd.same_clock(s.clock(p), eps):
            v.append(f"axiom 1: initial place {p} has clock "
                     f"({_clock_str(s.clock(p))}) != epsilon")

    seen: dict = {}
    for p in sorted(net.places):
        key = (net.label(p), vcd.canonical_clock(s.clock(p)))
        if key in seen:
            v.append(f"axiom 2: places {seen[key]} and {p} share label "
                     f"{key[0]} and clock ({_clock_str(key[1])})")
        else:
            seen[key] = p

    for t in sorted(net.transitions):
        gamma = {s.mc.component_of(p): s.clock(p) for p in net.pre(t)}
        J = frozenset(gamma)
        for p in sorted(net.post(t)):
            k = s.mc.component_of(p)
            try:
                mixed = op_mix(vcd, gamma, J, k)
            except KNotInJ:
                v.append(f"axiom 3: component of {p} not among pre components of {t}")
                continue
            expected = s.taus[k - 1](vcd, mixed, net.label(t), net.label(t))
            if not vcd.same_clock(s.clock(p), expected):
                v.append(f"axiom 3: h({p}) = ({_clock_str(s.clock(p))}) but "
                         f"ticking {t} yields ({_clock_str(expected)})")
    return Verdict.collect(v)


def _place_id(label: str, clock: VectorClock) -> str:
    return f"{label}({_clock_str(clock)})"


def _trans_id(image: str, preset) -> str:
    return f"{image}[{'+'.join(sorted(preset))}]"


def spread(mc: McNet, vcd: VectorClockDomain, taus,
           max_events: int = 10000,
           max_depth: int | None = None) -> SpreadResult:
    """Spread ``mc`` over ``vcd``: saturate the output net by firing every
    input transition enabled at each reachable marking of the output,
    reusing places that agree on label and clock.

    ``max_events`` bounds the number of output transitions; ``max_depth``
    bounds the causal depth of output transitions (1 + max depth of their
    preset places).  The returned flag reports whether saturation was
    reached before any bound tripped.
    """
    verdict = validate_mcnet(mc)
    if not verdict:
        raise NotAnMcNet("; ".join(verdict.violations))
    net = mc.net
    labels = [net.label(x) for x in sorted(net.places | net.transitions)]
    if len(set(labels)) != len(labels):
        raise NonInjectiveInputLabels("input net must be injectively labeled")
    if vcd.dimension != mc.dimension:
        raise DimensionMismatch(
            f"domain dimension {vcd.dimension} != net dimension {mc.dimension}")
    if len(taus) != mc.dimension:
        raise DimensionMismatch("need one ticking map per component")
    for aut in components(mc):
        if vcd.domain(aut.index).alphabet != aut.alphabet:
            raise DimensionMismatch(
                f"domain alphabet for component {aut.index} is "
                f"{sorted(vcd.domain(aut.index).alphabet)}, expected "
                f"{sorted(aut.alphabet)}")
    taus = tuple(taus)

    phi_p: dict = {}          # output place -> original place
    phi_t: dict = {}          # output transition -> original transition
    clock_of: dict = {}       # output place -> vector clock
    depth_of: dict = {}       # output place -> causal depth at creation
    by_key: dict = {}         # (original label, clock) -> output place
    events: dict = {}         # (preset frozenset, original transition) -> id
    event_posts: dict = {}    # output transition -> tuple of post places
    event_pres: dict = {}     # output transition -> frozenset of pre places

    init_out = []
    for p in sorted(net.initial):
        pid = _place_id(net.label(p), vcd.eps())
        phi_p[pid] = p
        clock_of[pid] = vcd.eps()
        depth_of[pid] = 0
        by_key[(net.label(p), vcd.eps())] = pid
        init_out.append(pid)
    initial = frozenset(init_out)

    queue = deque([initial])
    visited = {initial}
    saturated = True
    while queue:
        marking = queue.popleft()
        image = {phi_p[p]: p for p in marking}
        for t in sorted(net.transitions):
            if not net.pre(t) <= set(image):
                continue
            preset = frozenset(image[p] for p in net.pre(t))
            key = (preset, t)
            if key not in events:
                depth = 1 + max(depth_of[p] for p in preset)
                if len(events) >= max_events or \
                        (max_depth is not None and depth > max_depth):
                    saturated = False
                    continue
                gamma = {mc.component_of(phi_p[p]): clock_of[p] for p in preset}
                J = frozenset(gamma)
                posts = []
                for p in sorted(net.post(t)):
                    k = mc.component_of(p)
                    clock = taus[k - 1](vcd, op_mix(vcd, gamma, J, k),
                                        net.label(t), net.label(t))
                    pid = by_key.get((net.label(p), clock))
                    if pid is None:
                        pid = _place_id(net.label(p), clock)
                        phi_p[pid] = p
                        clock_of[pid] = clock
                        depth_of[pid] = depth
                        by_key[(net.label(p), clock)] = pid
                    posts.append(pid)
                tid = _trans_id(t, preset)
                events[key] = tid
                phi_t[tid] = t
                event_posts[tid] = tuple(posts)
                event_pres[tid] = preset
            tid = events[key]
            leftover = marking - event_pres[tid]
            post_set = frozenset(event_posts[tid])
            if leftover & post_set:
                raise UnsafeNet(f"spreading produced a double token firing {tid}")
            successor = leftover | post_set
            if successor not in visited:
                visited.add(successor)
                queue.append(successor)

    out_net = Net.build(
        phi_p,
        {tid: (event_pres[tid], event_posts[tid]) for tid in phi_t},
        initial,
        {**{p: net.label(phi_p[p]) for p in phi_p},
         **{tid: net.label(phi_t[tid]) for tid in phi_t}},
    )
    init_of_comp = {phi_p[p]: p for p in initial}
    nu_out = {p: init_of_comp[mc.nu[phi_p[p]]] for p in phi_p}
    out_mc = McNet.build(out_net, nu_out)
    spread_net = SpreadNet.build(out_mc, vcd, clock_of, taus)
    folding = FoldingMorphism.build(phi_p, phi_t)
    return SpreadResult(spread_net, folding, saturated)


def check_folding(src: McNet, dst: McNet, f: FoldingMorphism) -> Verdict:
    """Totality, induced-morphism conditions and the economy condition."""
    v = []
    for p in sorted(src.net.places):
        if p not in f.places:
            v.append(f"place map not total: {p} unmapped")
    for t in sorted(src.net.transitions):
        if t not in f.trans:
            v.append(f"transition map not total: {t} unmapped")
    if v:
        return Verdict.collect(v)

    label_map: dict = {}
    for x, y in list(f.places.items()) + list(f.trans.items()):
        lx = src.net.label(x)
        ly = dst.net.label(y)
        if label_map.setdefault(lx, ly) != ly:
            v.append(f"induced label map ill-defined at {lx}")
    morphism = NetMorphism.build(f.trans, set(f.places.items()), label_map)
    v.extend(check_mcn_morphism(src, dst, morphism).violations)

    by_key: dict = {}
    for t in sorted(src.net.transitions):
        key = (src.net.pre(t), f.trans[t])
        if key in by_key:
            v.append(f"economy violated: {by_key[key]} and {t} share preset "
                     f"and image {f.trans[t]}")
        else:
            by_key[key] = t
    return Verdict.collect(v)


@dataclass(frozen=True, eq=False)
class DomainMapping:
    """A mapping between vector-clock domains, applied clockwise."""

    fn: Callable[[VectorClock], VectorClock]

    def __call__(self, clock: VectorClock) -> VectorClock:
        return self.fn(clock)

    @staticmethod
    def identity() -> "DomainMapping":
        return DomainMapping(lambda clock: clock)


@dataclass(frozen=True, eq=False)
class SpreadMorphism:
    """A pair of an mcn-morphism and a domain mapping between spread nets."""

    src: SpreadNet
    dst: SpreadNet
    base: NetMorphism
    delta: DomainMapping

    @staticmethod
    def identity(s: SpreadNet) -> "SpreadMorphism":
        return SpreadMorphism(s, s, NetMorphism.identity(s.mc.net),
                              DomainMapping.identity())


def _component_images(f: SpreadMorphism) -> dict:
    """src component index -> set of dst component indices related via the
    initial-place relation."""
    out: dict = {}
    for p, p2 in f.base.place_rel:
        if p in f.src.mc.net.initial and p2 in f.dst.mc.net.initial:
            out.setdefault(f.src.mc.component_index[p], set()).add(
                f.dst.mc.component_index[p2])
    return out


def check_spread_morphism(f: SpreadMorphism) -> Verdict:
    """Check the base mcn-morphism, that the domain mapping respects classes,
    the ticking commutation law, and clock preservation on related places."""
    v = list(check_mcn_morphism(f.src.mc, f.dst.mc, f.base).violations)
    src, dst = f.src, f.dst
    clocks = sorted(set(src.h.values()))

    for i, a in enumerate(clocks):
        for b in clocks[i + 1:]:
            if src.vcd.same_clock(a, b) and not dst.vcd.same_clock(f.delta(a),
                                                                   f.delta(b)):
                v.append(f"domain mapping splits equivalent clocks "
                         f"({_clock_str(a)}) and ({_clock_str(b)})")

    comp_images = _component_images(f)
    src_comps = {aut.index: aut for aut in components(src.mc)}
    dst_comps = {aut.index: aut for aut in components(dst.mc)}
    for t in sorted(src.mc.net.transitions):
        t2 = f.base.trans.get(t)
        if t2 is None:
            continue
        for i in sorted(src.mc.pre_components(t)):
            if t not in src_comps[i].net.transitions:
                continue
            for i2 in sorted(comp_images.get(i, ())):
                if t2 not in dst_comps[i2].net.transitions:
                    continue
                for alpha in clocks:
                    lhs = dst.taus[i2 - 1](dst.vcd, f.delta(alpha), t2,
                                           dst.mc.net.label(t2))
                    rhs = f.delta(src.taus[i - 1](src.vcd, alpha, t,
                                                  src.mc.net.label(t)))
                    if not dst.vcd.same_clock(lhs, rhs):
                        v.append(f"ticking does not commute at ({t},{t2}), "
                                 f"component {i}, clock ({_clock_str(alpha)})")

    for p, p2 in sorted(f.base.place_rel):
        if not dst.vcd.same_clock(f.delta(src.clock(p)), dst.clock(p2)):
            v.append(f"clock of {p} maps to ({_clock_str(f.delta(src.clock(p)))}) "
                     f"but h({p2}) = ({_clock_str(dst.clock(p2))})")
    return Verdict.collect(v)


def compose_spread_morphisms(f: SpreadMorphism,
                             g: SpreadMorphism) -> SpreadMorphism:
    """Componentwise composition; fails if the middle spread nets differ."""
    if f.dst != g.src:
        raise NotComposable("target of the first morphism is not the source "
                            "of the second")
    trans = {t: g.base.trans[t1] for t, t1 in f.base.trans.items()
             if t1 in g.base.trans}
    rel = {(p, p2) for p, p1 in f.base.place_rel
           for q1, p2 in g.base.place_rel if p1 == q1}
    label = {l: g.base.label[l1] for l, l1 in f.base.label.items()
             if l1 in g.base.label}
    base = NetMorphism.build(trans, rel, label)
    f_fn, g_fn = f.delta, g.delta
    return SpreadMorphism(f.src, g.dst, base,
                          DomainMapping(lambda clock: g_fn(f_fn(clock))))
