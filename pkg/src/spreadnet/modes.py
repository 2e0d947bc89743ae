"""Preset spreading modes: branching process, trellis, trivial, custom."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DimensionMismatch
from .mcnets import McNet, components
from .spread import SpreadNet, SpreadResult, spread
from .ticking import (EquationDomain, FreeDomain, TickingMap, TrellisDomain,
                      VectorClockDomain)

BP = "bp"
TRELLIS = "trellis"
TRIVIAL = "trivial"
CUSTOM = "custom"

DEFAULT_MAX_EVENTS = 10000


@dataclass(frozen=True)
class ComponentSpec:
    """Custom-mode description of one component's domain and ticking map."""

    alphabet: tuple
    equations: tuple  # (Word, Word) pairs
    max_word_len: int
    tau: str = TickingMap.APPEND_MATCHING


@dataclass(frozen=True)
class ModeSpec:
    kind: str
    components: tuple = ()  # ComponentSpec per component, custom mode only
    max_events: int = DEFAULT_MAX_EVENTS
    max_depth: int | None = None

    @staticmethod
    def bp(max_depth: int | None = None,
           max_events: int = DEFAULT_MAX_EVENTS) -> "ModeSpec":
        return ModeSpec(BP, max_events=max_events, max_depth=max_depth)

    @staticmethod
    def trellis(max_depth: int | None = None,
                max_events: int = DEFAULT_MAX_EVENTS) -> "ModeSpec":
        return ModeSpec(TRELLIS, max_events=max_events, max_depth=max_depth)

    @staticmethod
    def trivial() -> "ModeSpec":
        return ModeSpec(TRIVIAL)

    @staticmethod
    def custom(component_specs, max_events: int = DEFAULT_MAX_EVENTS,
               max_depth: int | None = None) -> "ModeSpec":
        return ModeSpec(CUSTOM, tuple(component_specs), max_events, max_depth)


def _trivial_domain(alphabet) -> EquationDomain:
    # every letter equals the empty word, so all bounded words collapse
    return EquationDomain.build(alphabet, [((a,), ()) for a in sorted(alphabet)],
                                max_word_len=1)


def instantiate(mode: ModeSpec, mc: McNet):
    """Build the vector-clock domain and ticking maps for ``mode``.

    Returns ``(vcd, taus)`` matching the dimension of ``mc``.
    """
    auts = components(mc)
    if mode.kind == BP:
        domains = [FreeDomain(aut.alphabet) for aut in auts]
        taus = [TickingMap(TickingMap.APPEND_MATCHING, aut.index) for aut in auts]
    elif mode.kind == TRELLIS:
        domains = [TrellisDomain(aut) for aut in auts]
        taus = [TickingMap(TickingMap.APPEND_LOCAL_RESET, aut.index) for aut in auts]
    elif mode.kind == TRIVIAL:
        domains = [_trivial_domain(aut.alphabet) for aut in auts]
        taus = [TickingMap(TickingMap.CONSTANT_EPS, aut.index) for aut in auts]
    elif mode.kind == CUSTOM:
        if len(mode.components) != len(auts):
            raise DimensionMismatch(
                f"{len(mode.components)} component specs for a net of "
                f"dimension {len(auts)}")
        domains = []
        taus = []
        for aut, spec in zip(auts, mode.components):
            if frozenset(spec.alphabet) != aut.alphabet:
                raise DimensionMismatch(
                    f"component {aut.index} alphabet {sorted(spec.alphabet)} "
                    f"does not match transitions {sorted(aut.alphabet)}")
            domains.append(EquationDomain.build(spec.alphabet, spec.equations,
                                                spec.max_word_len))
            taus.append(TickingMap(spec.tau, aut.index))
    else:
        raise ValueError(f"unknown mode {mode.kind!r}")
    return VectorClockDomain.of(domains), tuple(taus)


def spread_with_mode(mc: McNet, mode: ModeSpec) -> SpreadResult:
    vcd, taus = instantiate(mode, mc)
    return spread(mc, vcd, taus, max_events=mode.max_events,
                  max_depth=mode.max_depth)


def trivial_spread_net(mc: McNet) -> SpreadNet:
    """The injectively labeled net itself, annotated with all-empty clocks
    and constant-epsilon ticking maps."""
    vcd, taus = instantiate(ModeSpec.trivial(), mc)
    return SpreadNet.build(mc, vcd, {p: vcd.eps() for p in mc.net.places}, taus)
