"""Multi-clock nets: component partition, per-component automata, morphisms."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

from .errors import NotAnMcNet
from .nets import Net, NetMorphism, Verdict, check_net_morphism


@dataclass(frozen=True)
class McNet:
    """A safe net plus the partition map sending each place to the initial
    place of its sequential component."""

    net: Net
    _nu: tuple = field(repr=False)

    @staticmethod
    def build(net: Net, nu: Mapping[str, str]) -> "McNet":
        return McNet(net, tuple(sorted(nu.items())))

    @cached_property
    def nu(self) -> dict:
        return dict(self._nu)

    @cached_property
    def component_index(self) -> dict:
        """Initial place -> component index, in sorted-id order, 1-based."""
        return {p: i for i, p in enumerate(sorted(self.net.initial), start=1)}

    @property
    def dimension(self) -> int:
        return len(self.net.initial)

    def component_of(self, place: str) -> int:
        return self.component_index[self.nu[place]]

    def pre_components(self, t: str) -> frozenset:
        return frozenset(self.component_of(p) for p in self.net.pre(t))


@dataclass(frozen=True)
class ComponentAutomaton:
    """One sequential component of a multi-clock net."""

    index: int
    net: Net

    @property
    def initial_place(self) -> str:
        (p,) = self.net.initial
        return p

    @cached_property
    def alphabet(self) -> frozenset:
        return frozenset(self.net.label(t) for t in self.net.transitions)


def validate_mcnet(mc: McNet) -> Verdict:
    """Check the four multi-clock conditions on the partition map."""
    v = []
    net = mc.net
    nu = mc.nu
    if set(nu) != set(net.places):
        v.append("partition map is not total on places")
        return Verdict.collect(v)
    for p in sorted(net.places):
        if nu[p] not in net.initial:
            v.append(f"nu({p}) = {nu[p]} is not an initial place")
    for p in sorted(net.initial):
        if nu[p] != p:
            v.append(f"nu is not the identity on initial place {p}")
    for t in sorted(net.transitions):
        for side, places in (("pre", net.pre(t)), ("post", net.post(t))):
            images = [nu[p] for p in places if p in nu]
            if len(images) != len(set(images)):
                v.append(f"nu is not injective on {side}({t})")
        pre_img = {nu[p] for p in net.pre(t) if p in nu}
        post_img = {nu[p] for p in net.post(t) if p in nu}
        if pre_img != post_img:
            v.append(f"nu(pre({t})) != nu(post({t}))")
    return Verdict.collect(v)


def components(mc: McNet) -> list[ComponentAutomaton]:
    """Split a validated mc-net into its sequential automata."""
    verdict = validate_mcnet(mc)
    if not verdict:
        raise NotAnMcNet("; ".join(verdict.violations))
    net = mc.net
    out = []
    for init in sorted(net.initial):
        index = mc.component_index[init]
        block = frozenset(p for p in net.places if mc.nu[p] == init)
        trans = {t for t in net.transitions
                 if net.pre(t) & block and net.post(t) & block}
        sub = Net.build(
            block,
            {t: (net.pre(t) & block, net.post(t) & block) for t in trans},
            {init},
            {x: net.label(x) for x in block | trans},
        )
        for t in trans:
            assert len(sub.pre(t)) == 1 and len(sub.post(t)) == 1
        out.append(ComponentAutomaton(index, sub))
    return out


def check_mcn_morphism(src: McNet, dst: McNet, f: NetMorphism) -> Verdict:
    """A net morphism that additionally preserves the component partitions."""
    base = check_net_morphism(src.net, dst.net, f)
    v = list(base.violations)
    for p, p2 in sorted(f.place_rel):
        if (src.nu[p], dst.nu[p2]) not in f.place_rel:
            v.append(f"partition not preserved: ({p},{p2}) related but "
                     f"({src.nu[p]},{dst.nu[p2]}) is not")
    return Verdict.collect(v)
