import pytest

from spreadnet import (
    Net,
    NetDefinitionError,
    NetMorphism,
    NotEnabled,
    UnsafeFiring,
    check_net_morphism,
    enabled,
    fire,
    fire_sequence,
    morphism_preserves_markings,
    reachable_markings,
    running_example,
)


@pytest.fixture
def net():
    return running_example().net


def test_build_rejects_overlapping_ids():
    with pytest.raises(NetDefinitionError):
        Net.build({"x"}, {"x": ({"x"}, {"x"})}, {"x"})


def test_build_rejects_empty_preset():
    with pytest.raises(NetDefinitionError):
        Net.build({"a"}, {"t": ((), {"a"})}, {"a"})


def test_pre_post_sets(net):
    assert net.pre("u") == {"b", "d"}
    assert net.post("u") == {"c", "e"}
    assert net.pre("a") == {"z"}
    assert net.post("a") == {"s", "t"}


def test_enabled_at_initial(net):
    assert enabled(net, net.initial) == {"s", "t"}


def test_fire_moves_tokens(net):
    m = fire(net, net.initial, "s")
    assert m == {"b", "d"}
    with pytest.raises(NotEnabled):
        fire(net, m, "v")


def test_fire_detects_double_token():
    net = Net.build({"a", "b"}, {"t": ({"a"}, {"b"})}, {"a", "b"})
    with pytest.raises(UnsafeFiring):
        fire(net, net.initial, "t")


def test_fire_sequence_tracks_markings(net):
    run = fire_sequence(net, ["s", "u", "z"])
    assert run.final_marking == {"a", "d"}
    assert run.markings[0] == net.initial
    assert run.configuration == ("s", "u", "z")


def test_reachable_markings_of_running_example(net):
    result = reachable_markings(net, bound=20)
    assert result.saturated
    expected = {frozenset(m) for m in
                [{"a", "d"}, {"b", "d"}, {"c", "e"}, {"b", "e"}, {"c", "d"}]}
    assert result.markings == expected


def test_reachability_bound_reports_truncation(net):
    result = reachable_markings(net, bound=1)
    assert not result.saturated
    assert frozenset(net.initial) in result


def test_identity_morphism_checks_out(net):
    f = NetMorphism.identity(net)
    assert check_net_morphism(net, net, f).ok
    assert morphism_preserves_markings(net, net, f, bound=6).ok


def test_morphism_label_mismatch_reported(net):
    f = NetMorphism.identity(net)
    broken = NetMorphism(f.trans_map,
                         f.place_rel - {("a", "a")} | {("a", "b")},
                         f.label_map)
    assert not check_net_morphism(net, net, broken).ok
