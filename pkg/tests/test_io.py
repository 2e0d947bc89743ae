import json
import random

import pytest

from spreadnet import ModeSpec, ParseError, running_example, \
    running_example_custom_mode, spread_with_mode
from spreadnet.cli import main
from spreadnet import fileio

from gen import random_mcnet


@pytest.fixture
def net_file(tmp_path):
    path = tmp_path / "net.json"
    path.write_text(fileio.emit_net(running_example()))
    return path


@pytest.fixture
def mode_file(tmp_path):
    path = tmp_path / "mode.json"
    path.write_text(fileio.emit_mode(running_example_custom_mode()))
    return path


def test_net_round_trip():
    rng = random.Random(5)
    nets = [running_example()] + [random_mcnet(rng, dimension=2)
                                  for _ in range(5)]
    for mc in nets:
        text = fileio.emit_net(mc)
        back = fileio.parse_net(text)
        assert back == mc
        assert fileio.emit_net(back) == text


def test_mode_round_trip():
    modes = [running_example_custom_mode(), ModeSpec.bp(max_depth=3),
             ModeSpec.trellis(), ModeSpec.trivial()]
    for mode in modes:
        text = fileio.emit_mode(mode)
        back = fileio.parse_mode(text)
        assert back == mode
        assert fileio.emit_mode(back) == text


def test_spread_round_trip():
    mc = running_example()
    for mode in (running_example_custom_mode(), ModeSpec.bp(max_depth=3)):
        doc = fileio.SpreadDocument.of(spread_with_mode(mc, mode))
        text = fileio.emit_spread(doc)
        back = fileio.parse_spread(text)
        assert back == doc
        assert fileio.emit_spread(back) == text


def test_parse_errors_are_reported():
    with pytest.raises(ParseError):
        fileio.parse_net("not json")
    with pytest.raises(ParseError):
        fileio.parse_net(json.dumps({"places": []}))
    with pytest.raises(ParseError):
        fileio.parse_mode(json.dumps({"mode": "nonsense"}))
    with pytest.raises(ParseError):
        fileio.parse_mode(json.dumps({"mode": "custom", "components":
                                      [{"alphabet": ["ab"], "equations": [],
                                        "maxWordLen": 2}]}))


def test_dot_output_single_place():
    from spreadnet import McNet, Net, trivial_spread_net
    net = Net.build({"a", "b"}, {"t": ({"a"}, {"b"})}, {"a"})
    mc = McNet.build(net, {"a": "a", "b": "a"})
    result = spread_with_mode(mc, ModeSpec.trivial())
    dot = fileio.emit_dot(fileio.SpreadDocument.of(result))
    assert dot.startswith("digraph")
    assert dot.count("shape=circle") == 2
    assert dot.count("shape=box") == 1
    assert dot.count("->") == 2


def test_dot_output_running_example_counts():
    mc = running_example()
    result = spread_with_mode(mc, running_example_custom_mode())
    dot = fileio.emit_dot(fileio.SpreadDocument.of(result))
    assert dot.count("shape=circle") + dot.count("shape=box") == 20
    assert dot.count("->") == len(result.net.mc.net.flow)


def test_cli_validate_ok(net_file):
    assert main(["validate", "--net", str(net_file)]) == 0


def test_cli_validate_rejects_asymmetric_partition(tmp_path, capsys):
    doc = {
        "places": [{"id": "a", "component": "a"},
                   {"id": "b", "component": "b"}],
        "transitions": [{"id": "t", "pre": ["a"], "post": ["b"]}],
        "initial": ["a", "b"],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    assert main(["validate", "--net", str(path)]) == 1
    assert "nu(pre(t)) != nu(post(t))" in capsys.readouterr().err


def test_cli_parse_error_exit_code(tmp_path):
    path = tmp_path / "garbage.json"
    path.write_text("{")
    assert main(["validate", "--net", str(path)]) == 2
    assert main(["validate", "--net", str(tmp_path / "missing.json")]) == 2


def test_cli_spread_writes_files(net_file, mode_file, tmp_path):
    out = tmp_path / "spread.json"
    dot = tmp_path / "spread.dot"
    code = main(["spread", "--net", str(net_file), "--mode", str(mode_file),
                 "--out", str(out), "--dot", str(dot)])
    assert code == 0
    doc = fileio.parse_spread(out.read_text())
    assert len(doc.mc.net.places) == 10
    assert doc.saturated
    assert dot.read_text().startswith("digraph")


def test_cli_spread_unsaturated_exit_code(net_file, tmp_path):
    mode = tmp_path / "bp.json"
    mode.write_text(fileio.emit_mode(ModeSpec.bp(max_depth=2)))
    out = tmp_path / "out.json"
    args = ["spread", "--net", str(net_file), "--mode", str(mode),
            "--out", str(out)]
    assert main(args) == 0
    assert main(args + ["--require-saturation"]) == 3


def test_cli_oracle_outputs(net_file, tmp_path):
    bp_out = tmp_path / "bp.json"
    tr_out = tmp_path / "trellis.json"
    assert main(["unfold-bp", "--net", str(net_file), "--depth", "3",
                 "--out", str(bp_out)]) == 0
    assert main(["trellis", "--net", str(net_file), "--height", "3",
                 "--out", str(tr_out)]) == 0
    bp = json.loads(bp_out.read_text())
    assert len(bp["places"]) == 16
    assert len(bp["transitions"]) == 10


def test_cli_compare_bp(net_file, capsys):
    assert main(["compare", "--net", str(net_file), "--against", "bp",
                 "--depth", "3"]) == 0
    assert "~" in capsys.readouterr().out


def test_cli_compare_trellis(net_file):
    assert main(["compare", "--net", str(net_file), "--against", "trellis",
                 "--depth", "4"]) == 0


def test_cli_compare_failure(net_file, tmp_path, capsys):
    mode = tmp_path / "trivial.json"
    mode.write_text(fileio.emit_mode(ModeSpec.trivial()))
    code = main(["compare", "--net", str(net_file), "--mode", str(mode),
                 "--against", "bp", "--depth", "3"])
    assert code == 1
    assert capsys.readouterr().err.strip()
