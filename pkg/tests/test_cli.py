import json

import pytest

from hypercore.cli import run_cli
from hypercore.fileio import (
    read_edge_list,
    read_family_json,
    read_pairs,
    write_edge_list,
)
from hypercore.generators import cycle_graph, path_graph


def run_json(capsys, argv):
    code = run_cli(argv)
    captured = capsys.readouterr()
    return code, json.loads(captured.out) if captured.out.strip() else None, captured.err


def write_graph(tmp_path, g, name="g.txt"):
    from hypercore.fileio import LabelTable

    path = tmp_path / name
    write_edge_list(g, LabelTable([f"v{i}" for i in range(g.n)]), path)
    return path


def test_generate_and_roundtrip(tmp_path, capsys):
    out = tmp_path / "tree.txt"
    code, rep, err = run_json(
        capsys,
        ["--seed", "9", "generate", "--kind", "tree", "--n", "20", "--edges-out", str(out)],
    )
    assert code == 0
    assert rep["schema"] == "hypercore-report/1"
    assert rep["prng"] == "python-random-mt19937"
    assert rep["n"] == 20 and rep["m"] == 19
    g, table = read_edge_list(out)
    assert g.n == 20 and g.is_tree()
    # round-trip: the labeled edge set survives write + re-read exactly
    out2 = tmp_path / "tree2.txt"
    write_edge_list(g, table, out2)
    g2, table2 = read_edge_list(out2)
    labeled = {frozenset((table.label_of(u), table.label_of(v))) for u, v in g.edges()}
    labeled2 = {frozenset((table2.label_of(u), table2.label_of(v))) for u, v in g2.edges()}
    assert labeled == labeled2


def test_hyperbolicity_report(tmp_path, capsys):
    path = write_graph(tmp_path, path_graph(6))
    code, rep, err = run_json(capsys, ["hyperbolicity", "--edges", str(path)])
    assert code == 0
    assert rep["delta"] == {"value": 0.0, "doubled": 0}
    assert rep["exact"] is True
    assert rep["diameter"] == 5 and rep["radius"] == 3
    assert rep["interval_thinness"] == 0
    assert "delta" in err  # human-readable summary emitted


def test_core_and_traffic(tmp_path, capsys):
    path = write_graph(tmp_path, path_graph(10))
    code, rep, err = run_json(capsys, ["core", "--edges", str(path), "--profile", "all"])
    assert code == 0
    assert rep["center"] == "v4" and rep["radius"] == 0
    assert rep["intercepted_pairs"] == 29 and rep["total_pairs"] == 45

    code, rep, err = run_json(
        capsys,
        ["traffic", "--edges", str(path), "--demand", "uniform", "--set", "v4,v5"],
    )
    assert code == 0
    assert rep["demand_pairs"] == 90
    num, den = rep["mu"]["rational"].split("/")
    assert int(den) >= 1 and int(num) > 0


def test_traffic_with_demand_file(tmp_path, capsys):
    path = write_graph(tmp_path, cycle_graph(4))
    dem = tmp_path / "demand.txt"
    dem.write_text("v0 v2\n# comment\nv1 v3\n", encoding="utf-8")
    code, rep, err = run_json(
        capsys, ["traffic", "--edges", str(path), "--demand", str(dem), "--set", "v1"]
    )
    assert code == 0
    # (v0,v2): one of two geodesics passes v1 -> 1/2; (v1,v3): endpoint -> 1
    assert rep["mu"]["rational"] == "3/2"


def test_beamcore_cli(tmp_path, capsys):
    path = write_graph(tmp_path, path_graph(9))
    code, rep, err = run_json(capsys, ["beamcore", "--edges", str(path)])
    assert code == 0
    assert rep["midpoint"] == "v4"
    assert rep["radius"] == 0
    assert rep["all_beams_intercepted"] is True
    assert rep["structural"]["diam_rad_holds"] is True


def test_beamcore_forced_delta_failure_exits_2(tmp_path, capsys):
    path = write_graph(tmp_path, cycle_graph(6))
    code, rep, err = run_json(capsys, ["beamcore", "--edges", str(path), "--delta", "0"])
    assert code == 2
    assert rep["all_beams_intercepted"] is False


def test_helly_and_hitpack_cli(tmp_path, capsys):
    path = write_graph(tmp_path, cycle_graph(6))
    fam = tmp_path / "fam.json"
    fam.write_text(
        json.dumps(
            [
                {"name": "a", "vertices": ["v0", "v1", "v2"]},
                {"name": "b", "vertices": ["v2", "v3"]},
                {"name": "c", "vertices": ["v0", "v2", "v4"]},
            ]
        ),
        encoding="utf-8",
    )
    code, rep, err = run_json(capsys, ["helly", "--edges", str(path), "--family", str(fam)])
    assert code == 0
    assert rep["all_hit"] is True

    code, rep, err = run_json(capsys, ["hitpack", "--edges", str(path), "--family", str(fam)])
    assert code == 0
    assert len(rep["hitting_set"]) == len(rep["packing"])
    assert rep["certificates"] == {"hitting": True, "packing": True}


def test_kappa_cli(tmp_path, capsys):
    path = write_graph(tmp_path, path_graph(12))
    fam = tmp_path / "kfam.json"
    fam.write_text(
        json.dumps(
            [
                {"name": "m0", "parts": [["v0", "v1"], ["v6", "v7"]]},
                {"name": "m1", "parts": [["v3"], ["v9", "v10"]]},
            ]
        ),
        encoding="utf-8",
    )
    code, rep, err = run_json(
        capsys, ["kappa", "--edges", str(path), "--family", str(fam), "--r", "0"]
    )
    assert code == 0
    assert rep["kappa"] == 2
    assert rep["lp_optima"]["gap_zero"] is True
    assert all(rep["certificates"].values())


def test_multicore_cli(tmp_path, capsys):
    path = write_graph(tmp_path, path_graph(12))
    com = tmp_path / "pairs.txt"
    com.write_text("v0 v3\nv8 v11\n", encoding="utf-8")
    code, rep, err = run_json(
        capsys, ["multicore", "--edges", str(path), "--commodity", str(com), "--radius", "0"]
    )
    assert code == 0
    assert rep["covered"] is True
    assert rep["size"] == 2


def test_out_flag_writes_file(tmp_path, capsys):
    path = write_graph(tmp_path, path_graph(4))
    target = tmp_path / "rep.json"
    code = run_cli(["--out", str(target), "hyperbolicity", "--edges", str(path)])
    assert code == 0
    rep = json.loads(target.read_text(encoding="utf-8"))
    assert rep["command"] == "hyperbolicity"
    assert capsys.readouterr().out == ""


def test_input_errors_exit_1(tmp_path, capsys):
    assert run_cli(["hyperbolicity", "--edges", str(tmp_path / "missing.txt")]) == 1
    assert run_cli(["--bogus-flag"]) == 1
    assert run_cli([]) == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("a b c\n", encoding="utf-8")
    assert run_cli(["hyperbolicity", "--edges", str(bad)]) == 1
    err = capsys.readouterr().err
    assert "error" in err


def test_file_format_errors(tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing here\n", encoding="utf-8")
    with pytest.raises(ValueError, match="no edges"):
        read_edge_list(empty)
    with pytest.raises(ValueError, match="no pairs"):
        read_pairs(empty)
    triple = tmp_path / "triple.txt"
    triple.write_text("a b\nx y z\n", encoding="utf-8")
    with pytest.raises(ValueError, match=":2:"):
        read_pairs(triple)
    fam = tmp_path / "fam.json"
    fam.write_text("[]", encoding="utf-8")
    with pytest.raises(ValueError, match="nonempty"):
        read_family_json(fam)
    fam.write_text(json.dumps([{"name": "a", "vertices": []}]), encoding="utf-8")
    with pytest.raises(ValueError, match="no vertices"):
        read_family_json(fam)


def test_unknown_label_errors(tmp_path, capsys):
    path = write_graph(tmp_path, path_graph(4))
    code = run_cli(["traffic", "--edges", str(path), "--set", "nope"])
    assert code == 1
    assert "unknown vertex label" in capsys.readouterr().err
