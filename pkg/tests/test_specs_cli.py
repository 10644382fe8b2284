import json
import subprocess
import sys

import pytest

from modgraph.caps import Caps, caps_from_env
from modgraph.cli import main
from modgraph.errors import SpecError
from modgraph.rings import ring_zmod
from modgraph.specs import (
    build_instance,
    dumps_spec,
    instance_name,
    make_spec,
    normalize_spec,
    spec_hash,
)

Z12_SPEC = {"version": 1, "ring": {"kind": "zmod", "n": 12}, "module": {"kind": "regular"}}


def test_normalize_round_trips_byte_identically():
    normalized = normalize_spec(Z12_SPEC)
    assert dumps_spec(normalize_spec(normalized)) == dumps_spec(normalized)
    assert spec_hash(normalized) == spec_hash(normalize_spec(json.loads(dumps_spec(normalized))))


def test_unknown_fields_rejected():
    with pytest.raises(SpecError):
        normalize_spec({**Z12_SPEC, "extra": 1})
    with pytest.raises(SpecError):
        normalize_spec({"version": 1, "ring": {"kind": "zmod", "n": 4, "bogus": 2}, "module": {"kind": "regular"}})
    with pytest.raises(SpecError):
        normalize_spec({"version": 1, "ring": {"kind": "nope"}, "module": {"kind": "regular"}})
    with pytest.raises(SpecError):
        normalize_spec({"version": 2, **{k: Z12_SPEC[k] for k in ("ring", "module")}})


def test_every_ring_kind_builds():
    z4 = ring_zmod(4)
    specs = [
        ({"kind": "gf", "p": 3, "k": 2}, 9),
        ({"kind": "zmod", "n": 10}, 10),
        ({"kind": "matrix", "p": 2, "k": 1, "m": 2}, 16),
        ({"kind": "triangular", "p": 2, "k": 2, "subfield_degree": 1}, 32),
        ({"kind": "product", "left": {"kind": "zmod", "n": 2}, "right": {"kind": "zmod", "n": 2}}, 4),
        ({"kind": "poly_quot", "p": 2, "relations": ["x^3"], "variables": ["x"]}, 8),
        ({"kind": "table", "add": z4.add.tolist(), "mul": z4.mul.tolist()}, 4),
    ]
    for ring_spec, size in specs:
        inst = build_instance(make_spec(ring_spec, {"kind": "regular"}))
        assert inst.ring.size == size, ring_spec["kind"]


def test_module_kinds_build():
    spec = make_spec(
        {"kind": "zmod", "n": 4},
        {
            "kind": "direct_sum",
            "left": {"kind": "quotient", "of": {"kind": "regular"}, "kernel_gens": [2]},
            "right": {"kind": "regular"},
        },
    )
    inst = build_instance(spec)
    assert inst.module.size == 8
    assert instance_name(spec) == "zmod(4)/sum(quot(regular;2),regular)"
    reg = ring_zmod(3)
    custom = make_spec(
        {"kind": "zmod", "n": 3},
        {"kind": "custom", "add": reg.add.tolist(), "act": reg.mul.tolist()},
    )
    assert build_instance(custom).module.size == 3


def test_caps_override_in_spec():
    spec = make_spec({"kind": "zmod", "n": 12}, {"kind": "regular"}, caps={"max_ring_size": 8})
    from modgraph.errors import CapExceeded

    with pytest.raises(CapExceeded):
        build_instance(spec)


def test_caps_env_parsing(monkeypatch):
    monkeypatch.setenv("MODGRAPH_CAPS", "max_ring_size=99, max_exact_vertices=7")
    caps = caps_from_env()
    assert caps.max_ring_size == 99 and caps.max_exact_vertices == 7
    monkeypatch.setenv("MODGRAPH_CAPS", "bogus=1")
    with pytest.raises(ValueError):
        caps_from_env()


@pytest.fixture()
def spec_file(tmp_path):
    path = tmp_path / "z12.json"
    path.write_text(json.dumps(Z12_SPEC))
    return str(path)


def test_cli_invariants_deterministic(spec_file, capsys):
    assert main(["invariants", spec_file]) == 0
    first = capsys.readouterr().out
    assert main(["invariants", spec_file]) == 0
    second = capsys.readouterr().out
    assert first == second
    payload = json.loads(first)
    assert payload["omega"] == 3 and payload["chi"] == 3
    assert payload["girth"] == 3 and payload["diameter"] == 2
    assert payload["connected"] is True


def test_cli_graph_formats(spec_file, capsys):
    assert main(["graph", spec_file, "--format", "dot"]) == 0
    dot = capsys.readouterr().out
    assert dot.startswith("graph intersection {")
    assert main(["graph", spec_file, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["order"] == 4


def test_cli_lattice_listing(spec_file, capsys):
    assert main(["lattice", spec_file]) == 0
    out = capsys.readouterr().out
    assert "6 submodules" in out


def test_cli_zoo(capsys):
    assert main(["zoo"]) == 0
    out = capsys.readouterr().out
    assert "triangular(F4,F2)/regular" in out


def test_cli_verify_single_instance(spec_file, capsys, tmp_path):
    jsonl = tmp_path / "reports.jsonl"
    code = main(["verify", spec_file, "--check", "C9-triangle-free,C10-connectivity",
                 "--jsonl", str(jsonl)])
    assert code == 0
    out = capsys.readouterr().out
    assert "C10-connectivity" in out
    lines = jsonl.read_text().strip().splitlines()
    assert len(lines) == 2


def test_cli_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["invariants", str(bad)]) == 2
    unknown = tmp_path / "unknown.json"
    unknown.write_text(json.dumps({**Z12_SPEC, "surprise": True}))
    assert main(["invariants", str(unknown)]) == 2
    big = tmp_path / "big.json"
    big.write_text(json.dumps({"version": 1, "ring": {"kind": "zmod", "n": 4000}, "module": {"kind": "regular"}}))
    assert main(["invariants", str(big)]) == 3
    assert main(["verify", str(bad)]) == 2
    assert main(["verify", "--family", "nonsense"]) == 2
    capsys.readouterr()


def test_cli_subprocess_byte_identical(spec_file):
    """End-to-end determinism through a fresh interpreter each run."""
    runs = [
        subprocess.run(
            [sys.executable, "-m", "modgraph.cli", "graph", spec_file, "--format", "json"],
            capture_output=True, check=True,
        ).stdout
        for _ in range(2)
    ]
    assert runs[0] == runs[1]


def test_cli_verify_family_subset(capsys):
    code = main(["verify", "--family", "size:8", "--check", "C10-connectivity"])
    assert code == 0
    out = capsys.readouterr().out
    assert "C10-connectivity" in out and "FAIL" not in out


def test_cli_respects_caps_env_var(spec_file, capsys, monkeypatch):
    monkeypatch.setenv("MODGRAPH_CAPS", "max_ring_size=8")
    assert main(["invariants", spec_file]) == 3  # Z/12 now exceeds the cap
    capsys.readouterr()


def test_cli_verify_exit_one_on_failing_check(spec_file, capsys, monkeypatch):
    """Exit code 1 is reserved for genuine check failures; inject one."""
    from modgraph import checks

    def always_fail(ctx):
        return checks.CheckReport("C0-injected", ctx.instance_id, checks.FAIL, "forced")

    monkeypatch.setitem(checks.ALL_CHECKS, "C0-injected", always_fail)
    assert main(["verify", spec_file, "--check", "C0-injected"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out
