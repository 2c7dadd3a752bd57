import json
import random

import pytest

from gridperc import (
    CoordinateRangeError,
    DuplicateSeedError,
    Instance,
    InstanceFormatError,
    closure,
    is_forbidden,
    make_grid,
    parse_instance,
    percolates,
    render_ascii,
    serialize_instance,
)
from gridperc import cli
from gridperc.cli import cmd_verify, main


def test_parse_known_instance():
    text = '{"rows":3,"cols":3,"r":3,"seeds":[[0,0],[2,0],[0,2],[2,2],[1,1]]}'
    inst = parse_instance(text)
    assert inst.rows == inst.cols == inst.r == 3
    assert percolates(inst.grid(), inst.r, inst.seed_set())


def test_parse_singleton():
    inst = parse_instance('{"rows":1,"cols":1,"r":3,"seeds":[[0,0]]}')
    assert inst.seeds == ((0, 0),)
    assert parse_instance(b'{"rows":1,"cols":1,"r":3,"seeds":[[0,0]]}') == inst


def test_parse_errors_are_distinct():
    with pytest.raises(InstanceFormatError):
        parse_instance("{not json")
    with pytest.raises(InstanceFormatError):
        parse_instance('{"rows":3,"cols":3,"r":3,"seeds":[[0]]}')
    with pytest.raises(InstanceFormatError):
        parse_instance('{"rows":3,"cols":3,"r":3,"seeds":[],"extra":1}')
    with pytest.raises(InstanceFormatError):
        parse_instance('{"rows":0,"cols":3,"r":3,"seeds":[]}')
    with pytest.raises(CoordinateRangeError):
        parse_instance('{"rows":3,"cols":3,"r":3,"seeds":[[3,0]]}')
    with pytest.raises(DuplicateSeedError):
        parse_instance('{"rows":3,"cols":3,"r":3,"seeds":[[1,1],[1,1]]}')


def test_round_trip_is_identity_on_canonical_instances():
    rng = random.Random(21)
    for _ in range(50):
        rows, cols = rng.randint(1, 6), rng.randint(1, 8)
        vertices = [(i, j) for i in range(rows) for j in range(cols)]
        seeds = tuple(sorted(rng.sample(vertices, rng.randint(0, len(vertices)))))
        inst = Instance(rows, cols, rng.randint(1, 4), seeds)
        text = serialize_instance(inst)
        assert parse_instance(text) == inst
        assert serialize_instance(parse_instance(text)) == text


def test_render_ascii_glyph_counts():
    g = make_grid(3, 3)
    seeds = g.vertex_set([(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)])
    art = render_ascii(g, closure(g, 3, seeds))
    assert art.count("#") == 5
    assert sum(art.count(d) for d in "123456789") == 4
    assert art.count(".") == 0


def test_render_ascii_extremes():
    g = make_grid(2, 3)
    assert render_ascii(g, closure(g, 3, g.full_set())) == "###\n###"
    assert render_ascii(g, closure(g, 3, g.empty_set())) == "...\n..."


def test_render_ascii_row_zero_at_bottom():
    g = make_grid(2, 3)
    art = render_ascii(g, closure(g, 3, g.vertex_set([(0, 0)])))
    assert art.splitlines() == ["...", "#.."]


def test_render_ascii_late_rounds_use_plus():
    g = make_grid(1, 12)
    art = render_ascii(g, closure(g, 1, g.vertex_set([(0, 0)])))
    assert art == "#123456789++"


def test_cli_construct_simulate_pipeline(tmp_path, capsys):
    inst_file = tmp_path / "inst.json"
    assert main(["construct", "--rows", "3", "--cols", "5", "--out", str(inst_file)]) == 0
    inst = parse_instance(inst_file.read_text())
    assert len(inst.seeds) == 8

    assert main(["simulate", "--in", str(inst_file)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["percolates"] is True
    assert payload["infected_count"] == 15

    assert main(["render", "--in", str(inst_file)]) == 0
    art = capsys.readouterr().out.rstrip("\n")
    assert len(art.splitlines()) == 3


def test_cli_solve_json_schema(capsys):
    assert main(["solve", "--rows", "3", "--cols", "4"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert set(payload) == {"optimum", "witness", "lower_bound", "nodes"}
    assert payload["optimum"] == 7
    assert len(payload["witness"]) == 7
    assert set(payload["lower_bound"]) == {"value", "source"}
    g = make_grid(3, 4)
    assert percolates(g, 3, g.vertex_set(tuple(v) for v in payload["witness"]))


def test_cli_catalog_export(capsys):
    assert main(["catalog", "--rows", "3", "--cols", "3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert sum(1 for item in payload if item["kind"] == "four-cycle") == 4
    g = make_grid(3, 3)
    for item in payload:
        support = g.vertex_set(tuple(v) for v in item["vertices"])
        assert is_forbidden(g, 3, support)


def test_cli_verify_width5(capsys):
    assert main(["verify", "--theorem", "2", "--m-range", "5..6", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"] is True
    assert [row["solver"] for row in payload["rows"]] == [12, 15]
    assert all(row["status"] == "match" for row in payload["rows"])


def test_cli_verify_width4_statuses(capsys):
    assert main(["verify", "--theorem", "3", "--m-range", "4..6", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    statuses = [row["status"] for row in payload["rows"]]
    assert statuses == ["within-interval", "match", "within-interval"]


def test_cli_verify_budget_zero_skips_solver(capsys):
    assert main(["verify", "--theorem", "1", "--m-range", "3..4",
                 "--budget", "0", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert all(row["status"] == "skipped" for row in payload["rows"])
    assert all(row["solver"] is None for row in payload["rows"])


def test_cmd_verify_mismatch_forces_nonzero_exit(monkeypatch):
    monkeypatch.setattr(cli, "percolates", lambda *args: False)
    rows, exit_code = cmd_verify(1, [3])
    assert rows[0].status == "mismatch"
    assert exit_code == 1


def test_cli_input_errors_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"rows":3,"cols":3,"r":3,"seeds":[[9,9]]}')
    assert main(["simulate", "--in", str(bad)]) == 2
    assert main(["simulate", "--in", str(tmp_path / "missing.json")]) == 2
    assert main(["solve", "--rows", "0", "--cols", "4"]) == 2
    assert main(["verify", "--theorem", "1", "--m-range", "1..2"]) == 2
    capsys.readouterr()


def test_cli_budget_exhaustion_exit_three(capsys):
    assert main(["solve", "--rows", "4", "--cols", "6", "--budget", "3"]) == 3
    capsys.readouterr()


def test_cli_verify_table_output(capsys):
    assert main(["verify", "--theorem", "1", "--m-range", "3..5"]) == 0
    out = capsys.readouterr().out
    assert "status" in out and "match" in out
    assert "3x5" in out
