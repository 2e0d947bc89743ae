"""JSON file formats and graph export.

Three document kinds: a net file (places with their component, transitions
with presets and postsets, the initial marking), a mode file (which spreading
mode to run and, for custom mode, the per-component domains), and a spread
file (the annotated output net plus its folding morphism).

Clock words serialize as plain letter strings, the empty word as ""; the
formats therefore require single-character letters.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

from .errors import ParseError
from .mcnets import McNet
from .modes import (BP, CUSTOM, DEFAULT_MAX_EVENTS, TRELLIS, TRIVIAL,
                    ComponentSpec, ModeSpec)
from .nets import Net
from .spread import FoldingMorphism, SpreadResult
from .ticking import EPSILON, TickingMap, Word

_MODES = (BP, TRELLIS, TRIVIAL, CUSTOM)
_TAUS = (TickingMap.APPEND_MATCHING, TickingMap.APPEND_LOCAL_RESET,
         TickingMap.CONSTANT_EPS)


def _require(doc: Mapping, key: str, kind: type):
    if not isinstance(doc, Mapping) or key not in doc:
        raise ParseError(f"missing field {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise ParseError(f"field {key!r} must be {kind.__name__}")
    return value


def _word_to_text(w: Word) -> str:
    for a in w:
        if len(a) != 1:
            raise ParseError(f"letter {a!r} is not a single character; "
                             "the file format cannot represent it")
    return "".join(w)


def _text_to_word(text) -> Word:
    if not isinstance(text, str):
        raise ParseError(f"word {text!r} must be a string")
    return tuple(text)


def parse_net(text: str) -> McNet:
    """Read a net document; labels are the ids themselves."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid document: {exc}") from exc
    places = {}
    for entry in _require(doc, "places", list):
        pid = _require(entry, "id", str)
        if pid in places:
            raise ParseError(f"duplicate place id {pid!r}")
        places[pid] = _require(entry, "component", str)
    transitions = {}
    for entry in _require(doc, "transitions", list):
        tid = _require(entry, "id", str)
        if tid in transitions or tid in places:
            raise ParseError(f"duplicate id {tid!r}")
        pre = _require(entry, "pre", list)
        post = _require(entry, "post", list)
        for p in pre + post:
            if p not in places:
                raise ParseError(f"transition {tid!r} references unknown place {p!r}")
        transitions[tid] = (pre, post)
    initial = _require(doc, "initial", list)
    for p in initial:
        if p not in places:
            raise ParseError(f"initial place {p!r} is not declared")
    try:
        net = Net.build(places, transitions, initial)
    except Exception as exc:
        raise ParseError(str(exc)) from exc
    return McNet.build(net, places)


def emit_net(mc: McNet) -> str:
    net = mc.net
    doc = {
        "places": [{"id": p, "component": mc.nu[p]}
                   for p in sorted(net.places)],
        "transitions": [{"id": t, "pre": sorted(net.pre(t)),
                         "post": sorted(net.post(t))}
                        for t in sorted(net.transitions)],
        "initial": sorted(net.initial),
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_mode(text: str) -> ModeSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid document: {exc}") from exc
    kind = _require(doc, "mode", str)
    if kind not in _MODES:
        raise ParseError(f"unknown mode {kind!r}")
    bounds = doc.get("bounds", {})
    if not isinstance(bounds, Mapping):
        raise ParseError("field 'bounds' must be an object")
    max_events = bounds.get("maxEvents", DEFAULT_MAX_EVENTS)
    max_depth = bounds.get("maxDepth")
    if not isinstance(max_events, int) or max_events <= 0:
        raise ParseError("maxEvents must be a positive integer")
    if max_depth is not None and (not isinstance(max_depth, int) or max_depth <= 0):
        raise ParseError("maxDepth must be a positive integer")
    if kind != CUSTOM:
        if "components" in doc:
            raise ParseError(f"mode {kind!r} takes no component specs")
        return ModeSpec(kind, max_events=max_events, max_depth=max_depth)
    specs = []
    for entry in _require(doc, "components", list):
        alphabet = tuple(_require(entry, "alphabet", list))
        for a in alphabet:
            if not isinstance(a, str) or len(a) != 1:
                raise ParseError(f"alphabet letter {a!r} must be one character")
        equations = []
        for eq in _require(entry, "equations", list):
            if not isinstance(eq, list) or len(eq) != 2:
                raise ParseError(f"equation {eq!r} must be a [lhs, rhs] pair")
            equations.append((_text_to_word(eq[0]), _text_to_word(eq[1])))
        max_word_len = _require(entry, "maxWordLen", int)
        tau = entry.get("tau", TickingMap.APPEND_MATCHING)
        if tau not in _TAUS:
            raise ParseError(f"unknown ticking map {tau!r}")
        specs.append(ComponentSpec(alphabet, tuple(equations), max_word_len, tau))
    return ModeSpec(CUSTOM, tuple(specs), max_events, max_depth)


def emit_mode(mode: ModeSpec) -> str:
    doc: dict = {"mode": mode.kind}
    if mode.kind == CUSTOM:
        doc["components"] = [
            {"alphabet": list(spec.alphabet),
             "equations": [[_word_to_text(a), _word_to_text(b)]
                           for a, b in spec.equations],
             "maxWordLen": spec.max_word_len,
             "tau": spec.tau}
            for spec in mode.components
        ]
    bounds: dict = {"maxEvents": mode.max_events}
    if mode.max_depth is not None:
        bounds["maxDepth"] = mode.max_depth
    doc["bounds"] = bounds
    return json.dumps(doc, indent=2) + "\n"


@dataclass(frozen=True)
class SpreadDocument:
    """Serializable view of a spreading: the annotated net, its component
    map, the folding morphism and the saturation flag."""

    mc: McNet
    clocks: tuple      # sorted (place, clock) pairs
    folding: FoldingMorphism
    saturated: bool

    @staticmethod
    def of(result: SpreadResult) -> "SpreadDocument":
        s = result.net
        return SpreadDocument(s.mc, tuple(sorted(s.h.items())),
                              result.folding, result.saturated)


def emit_spread(doc: SpreadDocument) -> str:
    net = doc.mc.net
    clocks = dict(doc.clocks)
    body = {
        "places": [{"id": p, "label": net.label(p),
                    "component": doc.mc.nu[p],
                    "clock": [_word_to_text(w) for w in clocks[p]]}
                   for p in sorted(net.places)],
        "transitions": [{"id": t, "label": net.label(t),
                         "pre": sorted(net.pre(t)), "post": sorted(net.post(t))}
                        for t in sorted(net.transitions)],
        "initial": sorted(net.initial),
        "folding": {"places": {p: q for p, q in sorted(doc.folding.place_map)},
                    "transitions": {t: u for t, u in sorted(doc.folding.trans_map)}},
        "saturated": doc.saturated,
    }
    return json.dumps(body, indent=2) + "\n"


def parse_spread(text: str) -> SpreadDocument:
    try:
        body = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid document: {exc}") from exc
    labels = {}
    nu = {}
    clocks = {}
    for entry in _require(body, "places", list):
        pid = _require(entry, "id", str)
        labels[pid] = _require(entry, "label", str)
        nu[pid] = _require(entry, "component", str)
        clocks[pid] = tuple(_text_to_word(w)
                            for w in _require(entry, "clock", list))
    transitions = {}
    for entry in _require(body, "transitions", list):
        tid = _require(entry, "id", str)
        labels[tid] = _require(entry, "label", str)
        transitions[tid] = (_require(entry, "pre", list),
                            _require(entry, "post", list))
    initial = _require(body, "initial", list)
    folding = _require(body, "folding", dict)
    saturated = _require(body, "saturated", bool)
    try:
        net = Net.build(set(nu), transitions, initial, labels)
    except Exception as exc:
        raise ParseError(str(exc)) from exc
    morphism = FoldingMorphism.build(_require(folding, "places", dict),
                                     _require(folding, "transitions", dict))
    return SpreadDocument(McNet.build(net, nu),
                          tuple(sorted(clocks.items())), morphism, saturated)


def emit_dot(doc: SpreadDocument) -> str:
    """Graphviz text: places are circles annotated "label,(clock)",
    transitions are boxes; nodes and edges in sorted order."""
    net = doc.mc.net
    clocks = dict(doc.clocks)
    lines = ["digraph spread {"]
    for p in sorted(net.places):
        text = ",".join(_word_to_text(w) for w in clocks[p])
        lines.append(f'  "{p}" [shape=circle, label="{net.label(p)},({text})"];')
    for t in sorted(net.transitions):
        lines.append(f'  "{t}" [shape=box, label="{net.label(t)}"];')
    for x, y in sorted(net.flow):
        lines.append(f'  "{x}" -> "{y}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_oracle_net(net: Net) -> str:
    """Plain labeled net document for unfolding and trellis outputs."""
    doc = {
        "places": [{"id": p, "label": net.label(p)} for p in sorted(net.places)],
        "transitions": [{"id": t, "label": net.label(t),
                         "pre": sorted(net.pre(t)), "post": sorted(net.post(t))}
                        for t in sorted(net.transitions)],
        "initial": sorted(net.initial),
    }
    return json.dumps(doc, indent=2) + "\n"
