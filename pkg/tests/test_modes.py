import graphlib
import random

import pytest

from spreadnet import (
    EPSILON,
    DimensionMismatch,
    ComponentSpec,
    ModeSpec,
    TickingMap,
    components,
    isomorphic,
    running_example,
    running_example_custom_mode,
    spread_with_mode,
    trivial_spread_net,
    validate_spread,
    word,
)

from gen import random_mcnet


def test_custom_mode_folds_running_example_to_ten_places():
    mc = running_example()
    result = spread_with_mode(mc, running_example_custom_mode())
    net = result.net.mc.net
    assert result.saturated
    assert len(net.places) == 10
    assert len(net.transitions) == 10


def test_custom_mode_requires_matching_alphabets():
    mc = running_example()
    spec = ComponentSpec(("s",), (), 2)
    with pytest.raises(DimensionMismatch):
        spread_with_mode(mc, ModeSpec.custom([spec, spec]))


def test_bp_mode_output_is_an_occurrence_prefix():
    mc = running_example()
    for depth in (1, 2, 3, 4):
        net = spread_with_mode(mc, ModeSpec.bp(max_depth=depth)).net.mc.net
        for p in net.places:
            assert len(net.pre(p)) <= 1  # at most one producer
        # acyclic: causal order admits a topological sort
        sorter = graphlib.TopologicalSorter(
            {x: set(net.pre(x)) for x in net.places | net.transitions})
        sorter.prepare()


def test_bp_mode_expands_conflicts():
    mc = running_example()
    result = spread_with_mode(mc, ModeSpec.bp(max_depth=3))
    net = result.net.mc.net
    assert len(net.places) == 16
    assert len(net.transitions) == 10
    clocks = {(net.label(p), result.net.clock(p)) for p in net.places}
    assert ("a", (word("suz"), word("uz"))) in clocks
    assert ("a", (word("tuz"), word("uz"))) in clocks


def test_trellis_mode_is_time_graded():
    mc = running_example()
    result = spread_with_mode(mc, ModeSpec.trellis(max_depth=5))
    s = result.net
    for p in s.mc.net.places:
        comp = s.mc.component_of(p)
        clock = s.clock(p)
        for i, entry in enumerate(clock, start=1):
            if i != comp:
                assert entry == EPSILON  # local-reset clears foreign entries


def test_trellis_mode_event_bounded_prefix():
    mc = running_example()
    result = spread_with_mode(mc, ModeSpec.trellis(max_events=10))
    net = result.net.mc.net
    assert len(net.places) == 12
    assert len(net.transitions) == 10
    merges = [p for p in net.places if len(net.pre(p)) > 1]
    (p7,) = [p for p in merges if net.label(p) == "d"]
    dom2 = result.net.vcd.domain(2)
    assert dom2.same_class(result.net.clock(p7)[1], word("uz"))
    assert sorted(net.label(t) for t in net.pre(p7)) == ["w", "z"]


def test_trivial_mode_support_is_the_input():
    rng = random.Random(41)
    mc = running_example()
    nets = [mc] + [random_mcnet(rng, dimension=rng.randint(1, 3))
                   for _ in range(10)]
    for mc in nets:
        result = spread_with_mode(mc, ModeSpec.trivial())
        assert result.saturated
        assert isomorphic(result.net.mc.net, mc.net) is not None


def test_trivial_spread_net_annotates_with_empty_clocks():
    mc = running_example()
    s = trivial_spread_net(mc)
    assert validate_spread(s).ok
    assert all(s.clock(p) == s.vcd.eps() for p in mc.net.places)


def test_every_mode_satisfies_the_axioms():
    mc = running_example()
    modes = [running_example_custom_mode(), ModeSpec.bp(max_depth=3),
             ModeSpec.trellis(max_depth=4), ModeSpec.trivial()]
    for mode in modes:
        result = spread_with_mode(mc, mode)
        assert validate_spread(result.net).ok
