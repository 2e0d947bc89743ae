"""Independent reference constructions for cross-validation: a branching
process unfolder, a direct trellis builder, and labeled-net isomorphism.

These deliberately share no machinery with the spreading algorithm: the
unfolder tracks a concurrency relation on conditions instead of clocks, and
the trellis builder plays a timed token game on the original net.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import NotAnMcNet
from .mcnets import McNet, validate_mcnet
from .nets import Net


def unfold_bp_oracle(mc: McNet, max_depth: int) -> Net:
    """Occurrence-net prefix of the unfolding, truncated at causal depth
    ``max_depth`` (no cut-offs).  Nodes are labeled with the original net's
    places and transitions."""
    verdict = validate_mcnet(mc)
    if not verdict:
        raise NotAnMcNet("; ".join(verdict.violations))
    net = mc.net

    place_of: dict = {}
    producer: dict = {}
    depth: dict = {}
    co: dict = {}
    by_place: dict = {p: [] for p in net.places}
    events: dict = {}       # (transition, preset frozenset) -> event id
    event_pre: dict = {}
    event_post: dict = {}
    event_label: dict = {}

    counter = iter(range(10 ** 9))

    def new_condition(place: str, prod: Optional[str], d: int) -> str:
        cid = f"c{next(counter)}"
        place_of[cid] = place
        producer[cid] = prod
        depth[cid] = d
        by_place[place].append(cid)
        return cid

    initial = [new_condition(p, None, 0) for p in sorted(net.initial)]
    all_init = set(initial)
    for c in initial:
        co[c] = all_init - {c}

    frontier = deque(initial)

    def cosets_containing(c: str, places: list) -> list:
        """Co-sets hitting each place of ``places`` exactly once, with ``c``
        in the slot of its own place."""
        slots = []
        used_c = False
        for p in places:
            if not used_c and p == place_of[c]:
                slots.append([c])
                used_c = True
            else:
                slots.append(None)
        results: list = []

        def rec(i: int, chosen: tuple, allowed: frozenset) -> None:
            if i == len(places):
                results.append(frozenset(chosen))
                return
            pool = slots[i] if slots[i] is not None else \
                sorted(b for b in by_place[places[i]] if b in allowed)
            for b in pool:
                if slots[i] is None or b in allowed:
                    rec(i + 1, chosen + (b,), allowed & frozenset(co[b]))
            return

        rec(0, (), frozenset(co[c]) | {c})
        return results

    ecount = iter(range(10 ** 9))
    while frontier:
        c = frontier.popleft()
        for t in sorted(net.transitions):
            pre_places = sorted(net.pre(t))
            if place_of[c] not in pre_places:
                continue
            for preset in cosets_containing(c, pre_places):
                key = (t, preset)
                if key in events:
                    continue
                d = 1 + max(depth[b] for b in preset)
                if d > max_depth:
                    continue
                eid = f"e{next(ecount)}"
                events[key] = eid
                event_pre[eid] = preset
                event_label[eid] = t
                shared = frozenset.intersection(
                    *(frozenset(co[b]) for b in sorted(preset))) - preset
                posts = [new_condition(p, eid, d) for p in sorted(net.post(t))]
                for i, b in enumerate(posts):
                    co[b] = set(shared) | {s for j, s in enumerate(posts) if j != i}
                    frontier.append(b)
                for other in shared:
                    co[other].update(posts)
                event_post[eid] = tuple(posts)

    return Net.build(
        place_of,
        {e: (event_pre[e], event_post[e]) for e in event_pre},
        initial,
        {**place_of, **event_label},
    )


def trellis_oracle(mc: McNet, max_height: int,
                   max_events: Optional[int] = None) -> Net:
    """Height-truncated trellis: per component the nodes are (place, time)
    pairs, built by a timed token game on the original net.  Events whose
    causal depth exceeds ``max_height`` are cut; ``max_events`` additionally
    caps the event count in deterministic exploration order."""
    verdict = validate_mcnet(mc)
    if not verdict:
        raise NotAnMcNet("; ".join(verdict.violations))
    net = mc.net

    node_of: dict = {}      # (place, time) -> node id
    place_of: dict = {}
    depth: dict = {}
    events: dict = {}       # (transition, preset frozenset) -> event id
    event_pre: dict = {}
    event_post: dict = {}
    event_label: dict = {}
    times: dict = {}        # node id -> time

    def node(place: str, time: int, d: int) -> str:
        key = (place, time)
        if key not in node_of:
            nid = f"{place}@{time}"
            node_of[key] = nid
            place_of[nid] = place
            times[nid] = time
            depth[nid] = d
        return node_of[key]

    initial = [node(p, 0, 0) for p in sorted(net.initial)]
    start = frozenset(initial)
    queue = deque([start])
    visited = {start}
    ecount = iter(range(10 ** 9))
    while queue:
        marking = queue.popleft()
        token = {mc.component_of(place_of[n]): n for n in marking}
        for t in sorted(net.transitions):
            preset = []
            for p in sorted(net.pre(t)):
                n = token[mc.component_of(p)]
                if place_of[n] != p:
                    preset = None
                    break
                preset.append(n)
            if preset is None:
                continue
            preset = frozenset(preset)
            key = (t, preset)
            if key not in events:
                d = 1 + max(depth[n] for n in preset)
                if d > max_height:
                    continue
                if max_events is not None and len(events) >= max_events:
                    continue
                eid = f"e{next(ecount)}"
                events[key] = eid
                event_pre[eid] = preset
                event_label[eid] = t
                time_of_comp = {mc.component_of(place_of[n]): times[n]
                                for n in preset}
                posts = [node(p, time_of_comp[mc.component_of(p)] + 1, d)
                         for p in sorted(net.post(t))]
                event_post[eid] = tuple(posts)
            eid = events[key]
            successor = (marking - event_pre[eid]) | frozenset(event_post[eid])
            if successor not in visited:
                visited.add(successor)
                queue.append(successor)

    return Net.build(
        place_of,
        {e: (event_pre[e], event_post[e]) for e in event_pre},
        initial,
        {**place_of, **event_label},
    )


@dataclass(frozen=True)
class LabeledIso:
    """A label-, flow- and initial-marking-preserving bijection."""

    place_bijection: tuple
    trans_bijection: tuple

    @property
    def mapping(self) -> dict:
        return dict(self.place_bijection + self.trans_bijection)


def _signatures(a: Net, b: Net) -> tuple:
    """Joint color refinement of both nets: colors are interned per round so
    comparing them across the nets is exact and cheap."""
    def seed(net, x):
        return (x in net.places, net.label(x), x in net.initial,
                len(net.pre(x)), len(net.post(x)))

    nodes_a = a.places | a.transitions
    nodes_b = b.places | b.transitions
    colors = {}
    sig_a = {x: colors.setdefault(seed(a, x), len(colors)) for x in nodes_a}
    sig_b = {x: colors.setdefault(seed(b, x), len(colors)) for x in nodes_b}
    count = len(colors)
    while True:
        colors = {}
        nxt_a = {}
        nxt_b = {}
        for net, sig, nxt in ((a, sig_a, nxt_a), (b, sig_b, nxt_b)):
            for x in sig:
                key = (sig[x],
                       tuple(sorted(sig[y] for y in net.pre(x))),
                       tuple(sorted(sig[y] for y in net.post(x))))
                nxt[x] = colors.setdefault(key, len(colors))
        if len(colors) == count:
            return sig_a, sig_b
        count = len(colors)
        sig_a, sig_b = nxt_a, nxt_b


def isomorphic(a: Net, b: Net) -> Optional[LabeledIso]:
    """Search for a labeled isomorphism via signature refinement plus
    backtracking; returns ``None`` when the nets are not isomorphic."""
    if (len(a.places) != len(b.places)
            or len(a.transitions) != len(b.transitions)
            or len(a.flow) != len(b.flow)
            or len(a.initial) != len(b.initial)):
        return None
    sig_a, sig_b = _signatures(a, b)

    groups_a: dict = {}
    groups_b: dict = {}
    for x, s in sig_a.items():
        groups_a.setdefault(s, []).append(x)
    for x, s in sig_b.items():
        groups_b.setdefault(s, []).append(x)
    if set(groups_a) != set(groups_b):
        return None
    if any(len(groups_a[s]) != len(groups_b[s]) for s in groups_a):
        return None

    # breadth-first from the initial marking so each new node usually has a
    # mapped neighbor constraining its candidates
    order = []
    seen = set()
    frontier = deque(sorted(a.initial, key=lambda x: (sig_a[x], x)))
    seen.update(frontier)
    while frontier:
        x = frontier.popleft()
        order.append(x)
        for y in sorted(a.post(x) | a.pre(x)):
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    for x in sorted(sig_a, key=lambda x: (sig_a[x], x)):
        if x not in seen:
            seen.add(x)
            order.append(x)

    mapping: dict = {}
    used: set = set()

    def consistent(x: str, y: str) -> bool:
        # degrees agree via the signatures, so subset checks in one
        # direction plus image counting give full edge consistency
        for side_a, side_b in ((a.pre(x), b.pre(y)), (a.post(x), b.post(y))):
            count = 0
            for u in side_a:
                v = mapping.get(u)
                if v is not None:
                    if v not in side_b:
                        return False
                    count += 1
            if sum(1 for v in side_b if v in used) != count:
                return False
        return True

    def search() -> bool:
        pending = [iter(sorted(groups_b[sig_a[order[0]]]))] if order else []
        while pending:
            i = len(pending) - 1
            if i == len(order):
                return True
            x = order[i]
            for y in pending[-1]:
                if y in used or not consistent(x, y):
                    continue
                mapping[x] = y
                used.add(y)
                if i + 1 == len(order):
                    return True
                pending.append(iter(sorted(groups_b[sig_a[order[i + 1]]])))
                break
            else:
                pending.pop()
                if pending:
                    prev = order[len(pending) - 1]
                    used.remove(mapping.pop(prev))
        return not order

    if not search():
        return None
    assert {(mapping[x], mapping[y]) for x, y in a.flow} == set(b.flow)
    assert {mapping[p] for p in a.initial} == set(b.initial)
    assert all(b.label(mapping[x]) == a.label(x) for x in mapping)
    return LabeledIso(
        tuple(sorted((p, mapping[p]) for p in a.places)),
        tuple(sorted((t, mapping[t]) for t in a.transitions)),
    )
