"""Safe labeled Petri nets: token game, bounded reachability, net morphisms.

Markings of safe nets are plain ``frozenset``s of place ids.  All values are
immutable after construction and every operation is a pure function.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import NetDefinitionError, NotEnabled, UnsafeFiring, UnsafeNet

Marking = frozenset


def _freeze_labels(labels: Mapping[str, str]) -> tuple[tuple[str, str], ...]:
    return tuple(sorted(labels.items()))


@dataclass(frozen=True)
class Net:
    """A labeled Petri net with set-valued (1-safe) markings.

    ``flow`` contains pairs ``(place, transition)`` and ``(transition, place)``.
    ``labels`` is total on places and transitions; ordinary nets are those
    where each node is labeled by its own id.
    """

    places: frozenset
    transitions: frozenset
    flow: frozenset
    initial: frozenset
    _labels: tuple = field(repr=False)

    @staticmethod
    def build(places: Iterable[str],
              transitions: Mapping[str, tuple[Iterable[str], Iterable[str]]],
              initial: Iterable[str],
              labels: Mapping[str, str] | None = None) -> "Net":
        """Construct a net from per-transition (preset, postset) pairs."""
        place_set = frozenset(places)
        trans_set = frozenset(transitions)
        flow = set()
        for t, (pre, post) in transitions.items():
            for p in pre:
                flow.add((p, t))
            for p in post:
                flow.add((t, p))
        if labels is None:
            labels = {x: x for x in place_set | trans_set}
        return Net(place_set, trans_set, frozenset(flow), frozenset(initial),
                   _freeze_labels(labels))

    def __post_init__(self):
        if self.places & self.transitions:
            raise NetDefinitionError("places and transitions must be disjoint")
        if not self.initial <= self.places:
            raise NetDefinitionError("initial marking must be a set of places")
        nodes = self.places | self.transitions
        for x, y in self.flow:
            if not ((x in self.places and y in self.transitions)
                    or (x in self.transitions and y in self.places)):
                raise NetDefinitionError(f"flow arc ({x},{y}) is not bipartite")
        labeled = {k for k, _ in self._labels}
        if labeled != nodes:
            raise NetDefinitionError("labeling must be total on places and transitions")
        for t in self.transitions:
            if not self.pre(t) or not self.post(t):
                raise NetDefinitionError(f"transition {t} has empty preset or postset")

    @cached_property
    def labels(self) -> dict:
        return dict(self._labels)

    @cached_property
    def _pre(self) -> dict:
        m: dict = {x: set() for x in self.places | self.transitions}
        for x, y in self.flow:
            m[y].add(x)
        return {k: frozenset(v) for k, v in m.items()}

    @cached_property
    def _post(self) -> dict:
        m: dict = {x: set() for x in self.places | self.transitions}
        for x, y in self.flow:
            m[x].add(y)
        return {k: frozenset(v) for k, v in m.items()}

    def pre(self, x: str) -> frozenset:
        return self._pre[x]

    def post(self, x: str) -> frozenset:
        return self._post[x]

    def label(self, x: str) -> str:
        return self.labels[x]


@dataclass(frozen=True)
class FiringSequence:
    """A firing sequence together with the markings it traverses."""

    steps: tuple
    markings: tuple

    @property
    def configuration(self) -> tuple:
        """The fired transitions as a sorted multiset."""
        return tuple(sorted(self.steps))

    @property
    def final_marking(self) -> frozenset:
        return self.markings[-1]


def enabled(net: Net, m: frozenset) -> frozenset:
    """Transitions whose whole preset is marked at ``m``."""
    return frozenset(t for t in net.transitions if net.pre(t) <= m)


def fire(net: Net, m: frozenset, t: str) -> frozenset:
    """Fire ``t`` at ``m``: the new marking is ``m - pre(t) + post(t)``."""
    pre, post = net.pre(t), net.post(t)
    if not pre <= m:
        raise NotEnabled(f"{t} is not enabled at {sorted(m)}")
    leftover = m - pre
    clash = leftover & post
    if clash:
        raise UnsafeFiring(f"firing {t} would double-mark {sorted(clash)}")
    return leftover | post


def fire_sequence(net: Net, steps: Iterable[str],
                  start: frozenset | None = None) -> FiringSequence:
    """Fire ``steps`` in order from ``start`` (default: the initial marking)."""
    m = net.initial if start is None else start
    markings = [m]
    steps = tuple(steps)
    for t in steps:
        m = fire(net, m, t)
        markings.append(m)
    return FiringSequence(steps, tuple(markings))


@dataclass(frozen=True)
class ReachabilityResult:
    markings: frozenset
    saturated: bool
    edges: tuple  # (marking, transition, marking) triples

    def __contains__(self, m) -> bool:
        return frozenset(m) in self.markings


def reachable_markings(net: Net, bound: int) -> ReachabilityResult:
    """BFS closure of the initial marking under firing.

    Explores firing sequences of length at most ``bound``; ``saturated``
    reports whether the closure was complete below the bound.  Raises
    :class:`UnsafeNet` if any firing violates 1-safety.
    """
    start = net.initial
    seen = {start: 0}
    queue = deque([start])
    edges = []
    saturated = True
    while queue:
        m = queue.popleft()
        depth = seen[m]
        successors = []
        for t in sorted(enabled(net, m)):
            try:
                m2 = fire(net, m, t)
            except UnsafeFiring as exc:
                raise UnsafeNet(str(exc)) from exc
            successors.append((t, m2))
        if depth == bound:
            if any(m2 not in seen for _, m2 in successors):
                saturated = False
            continue
        for t, m2 in successors:
            edges.append((m, t, m2))
            if m2 not in seen:
                seen[m2] = depth + 1
                queue.append(m2)
    return ReachabilityResult(frozenset(seen), saturated, tuple(edges))


@dataclass(frozen=True)
class Verdict:
    """Outcome of a structural check, carrying human-readable violations."""

    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    @staticmethod
    def collect(violations: Iterable[str]) -> "Verdict":
        return Verdict(tuple(violations))


@dataclass(frozen=True)
class NetMorphism:
    """A net morphism: partial transition map, place relation, label map."""

    trans_map: tuple   # sorted (t, t') pairs
    place_rel: frozenset  # (p, p') pairs
    label_map: tuple   # sorted (label, label') pairs

    @staticmethod
    def build(trans_map: Mapping[str, str], place_rel: Iterable,
              label_map: Mapping[str, str]) -> "NetMorphism":
        return NetMorphism(tuple(sorted(trans_map.items())),
                           frozenset(place_rel),
                           tuple(sorted(label_map.items())))

    @staticmethod
    def identity(net: Net) -> "NetMorphism":
        return NetMorphism.build({t: t for t in net.transitions},
                                 {(p, p) for p in net.places},
                                 {l: l for l in net.labels.values()})

    @cached_property
    def trans(self) -> dict:
        return dict(self.trans_map)

    @cached_property
    def label(self) -> dict:
        return dict(self.label_map)

    def place_image(self, m: Iterable) -> frozenset:
        return frozenset(p2 for p, p2 in self.place_rel if p in set(m))


def check_net_morphism(src: Net, dst: Net, f: NetMorphism) -> Verdict:
    """Verify every condition of a safe-net morphism, listing violations."""
    v: list[str] = []
    rel = f.place_rel
    for p, p2 in rel:
        if p not in src.places or p2 not in dst.places:
            v.append(f"place pair ({p},{p2}) outside the nets")
    for t, t2 in f.trans.items():
        if t not in src.transitions or t2 not in dst.transitions:
            v.append(f"transition pair ({t},{t2}) outside the nets")
    if v:
        return Verdict.collect(v)

    for p2 in sorted(dst.initial):
        origins = [p for p in sorted(src.initial) if (p, p2) in rel]
        if len(origins) != 1:
            v.append(f"initial place {p2} has {len(origins)} initial preimages")

    for p, p2 in sorted(rel):
        for t in sorted(src.pre(p)):
            t2 = f.trans.get(t)
            if t2 is None or t2 not in dst.pre(p2):
                v.append(f"transition map not total on pre({p}) -> pre({p2}) at {t}")
        for t in sorted(src.post(p)):
            t2 = f.trans.get(t)
            if t2 is None or t2 not in dst.post(p2):
                v.append(f"transition map not total on post({p}) -> post({p2}) at {t}")

    for t, t2 in sorted(f.trans.items()):
        for p2 in sorted(dst.pre(t2)):
            origins = [p for p in sorted(src.pre(t)) if (p, p2) in rel]
            if len(origins) != 1:
                v.append(f"opposite relation not a function pre({t2}) -> pre({t}) at {p2}")
        for p2 in sorted(dst.post(t2)):
            origins = [p for p in sorted(src.post(t)) if (p, p2) in rel]
            if len(origins) != 1:
                v.append(f"opposite relation not a function post({t2}) -> post({t}) at {p2}")

    for t, t2 in sorted(f.trans.items()):
        if dst.label(t2) != f.label.get(src.label(t)):
            v.append(f"label mismatch on transition {t}: "
                     f"{dst.label(t2)} != image of {src.label(t)}")
    for p, p2 in sorted(rel):
        if dst.label(p2) != f.label.get(src.label(p)):
            v.append(f"label mismatch on place pair ({p},{p2})")

    return Verdict.collect(v)


def morphism_preserves_markings(src: Net, dst: Net, f: NetMorphism,
                                bound: int) -> Verdict:
    """Replay every bounded firing of ``src`` through the morphism."""
    v = []
    result = reachable_markings(src, bound)
    for m, t, m2 in result.edges:
        t2 = f.trans.get(t)
        if t2 is None:
            continue
        im, im2 = f.place_image(m), f.place_image(m2)
        if not dst.pre(t2) <= im:
            v.append(f"image of {sorted(m)} does not enable {t2}")
            continue
        if fire(dst, im, t2) != im2:
            v.append(f"firing {t2} at image of {sorted(m)} misses image of {sorted(m2)}")
    return Verdict.collect(v)
