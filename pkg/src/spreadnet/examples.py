"""Ready-made nets: the two-component running example with its custom
ticking domains, and a three-component net with a non-injective labeling."""

from __future__ import annotations

from .mcnets import McNet
from .modes import ComponentSpec, ModeSpec
from .nets import Net
from .ticking import word


def running_example() -> McNet:
    """Two sequential components: a 3-state loop over {a, b, c} and a
    2-state loop over {d, e}, synchronizing on u and z."""
    net = Net.build(
        {"a", "b", "c", "d", "e"},
        {
            "s": ({"a"}, {"b"}),
            "t": ({"a"}, {"b"}),
            "u": ({"b", "d"}, {"c", "e"}),
            "v": ({"c"}, {"b"}),
            "w": ({"e"}, {"d"}),
            "z": ({"c", "e"}, {"a", "d"}),
        },
        {"a", "d"},
    )
    nu = {"a": "a", "b": "a", "c": "a", "d": "d", "e": "d"}
    return McNet.build(net, nu)


def running_example_custom_mode(max_events: int = 10000) -> ModeSpec:
    """Finite-equation domains that fold the running example onto ten
    places: component 1 identifies the s and t branches and closes its two
    loops, component 2 identifies its u-w and u-z loops."""
    comp1 = ComponentSpec(
        alphabet=("s", "t", "u", "v", "z"),
        equations=(
            (word("s"), word("t")),
            (word("suzs"), word("s")),
            (word("suzt"), word("s")),
            (word("suvu"), word("su")),
        ),
        max_word_len=4,
    )
    comp2 = ComponentSpec(
        alphabet=("u", "w", "z"),
        equations=(
            (word("uw"), word("uz")),
            (word("uzu"), word("u")),
        ),
        max_word_len=4,
    )
    return ModeSpec.custom((comp1, comp2), max_events=max_events)


def three_component_example() -> McNet:
    """Three components with two u-labeled transitions; the labeling is not
    injective, so this net is not spreadable itself but exercises the
    validators and morphism checkers."""
    net = Net.build(
        {"a", "b", "c", "d", "e", "f", "g", "h", "k", "l"},
        {
            "u1": ({"a", "f"}, {"c", "g"}),
            "s": ({"c", "g"}, {"d", "h"}),
            "v": ({"a"}, {"b"}),
            "w": ({"f", "l"}, {"g", "l"}),
            "u2": ({"d", "h"}, {"e", "k"}),
        },
        {"a", "f", "l"},
        labels={"a": "a", "b": "b", "c": "c", "d": "d", "e": "e",
                "f": "f", "g": "g", "h": "h", "k": "k", "l": "l",
                "u1": "u", "s": "s", "v": "v", "w": "w", "u2": "u"},
    )
    nu = {"a": "a", "b": "a", "c": "a", "d": "a", "e": "a",
          "f": "f", "g": "f", "h": "f", "k": "f", "l": "l"}
    return McNet.build(net, nu)
