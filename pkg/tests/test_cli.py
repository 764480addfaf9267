import io
import json
import subprocess
import sys

import pytest

from fairgraph.cli import main

C5 = {"vertices": ["a", "b", "c", "d", "e"],
      "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "e"], ["e", "a"]]}
K3 = {"vertices": ["x", "y", "z"], "edges": [["x", "y"], ["y", "z"], ["x", "z"]]}
STAR = {"vertices": ["c", "l1", "l2", "l3"], "edges": [["c", "l1"], ["c", "l2"], ["c", "l3"]]}
C4 = {"vertices": ["1", "2", "3", "4"], "edges": [["1", "2"], ["2", "3"], ["3", "4"], ["4", "1"]]}
TRI = {"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"], ["a", "c"]],
       "colors": {"a": "one", "b": "one", "c": "two"}}


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(p)


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


class TestCompute:
    def test_c5_vertices(self, tmp_path):
        code, out, _ = run("compute", write(tmp_path, "g.json", C5), "--kind", "matching-vertices",
                           "--measure", "uniform")
        assert code == 0 and out.startswith("p = 4/5\n")
        doc = json.loads(out.split("\n", 1)[1])
        assert doc["value"] == "4/5" and doc["measure"] == "uniform"
        assert {c["coverage"] for c in doc["coverage"]} == {"4/5"}

    def test_k3_rawlsian_edges(self, tmp_path):
        code, out, _ = run("compute", write(tmp_path, "g.json", K3), "--kind", "matching-edges",
                           "--measure", "rawlsian")
        assert code == 0 and out.startswith("p = 1/3\n")

    def test_c5_vertex_cover(self, tmp_path):
        code, out, _ = run("compute", write(tmp_path, "g.json", C5), "--kind", "vertex-cover",
                           "--measure", "uniform")
        assert code == 0 and out.startswith("p = 3/5\n")

    def test_exact_method_and_output_file(self, tmp_path):
        dest = tmp_path / "dist.json"
        code, out, _ = run("compute", write(tmp_path, "g.json", C5), "--kind", "independent-set",
                           "--measure", "rawlsian", "--method", "exact", "-o", str(dest))
        assert code == 0 and out == "p = 2/5\n"
        assert json.loads(dest.read_text())["value"] == "2/5"

    def test_cap_exceeded(self, tmp_path):
        code, _, err = run("compute", write(tmp_path, "g.json", C5), "--kind", "independent-set",
                           "--measure", "uniform", "--method", "exact", "--cap", "3")
        assert code == 4 and "cap exceeded" in err

    def test_uncoverable(self, tmp_path):
        g = {"vertices": ["a", "b", "c"], "edges": [["a", "b"]]}
        code, _, err = run("compute", write(tmp_path, "g.json", g), "--kind", "matching-vertices",
                           "--measure", "rawlsian")
        assert code == 3 and "element uncoverable" in err

    def test_parse_errors(self, tmp_path):
        for bad in ("{not json", json.dumps({"vertices": ["a"]}),
                    json.dumps({"vertices": ["a", "b"], "edges": [["a", "a"]]}),
                    json.dumps({"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]})):
            code, _, _ = run("compute", write(tmp_path, "g.json", bad), "--kind", "clique", "--measure", "uniform")
            assert code == 2
        code, _, _ = run("compute", str(tmp_path / "missing.json"), "--kind", "clique", "--measure", "uniform")
        assert code == 2

    def test_groups(self, tmp_path):
        groups = {"groups": {"g1": ["a", "b"], "g2": ["c"]}, "absolute": {"g1": [1, 1], "g2": [1, 1]}}
        code, out, _ = run("compute", write(tmp_path, "g.json", TRI), "--kind", "matching-vertices",
                           "--measure", "rawlsian", "--groups", write(tmp_path, "c.json", groups))
        assert code == 0 and out.startswith("p = 1/2\n")

    def test_empty_restricted_family(self, tmp_path):
        groups = {"groups": {"g1": ["a", "b", "c"]}, "absolute": {"g1": [3, 3]}}
        code, _, err = run("compute", write(tmp_path, "g.json", TRI), "--kind", "matching-vertices",
                           "--measure", "rawlsian", "--groups", write(tmp_path, "c.json", groups))
        assert code == 3 and "empty restricted family" in err


class TestBounds:
    def test_star(self, tmp_path):
        code, out, _ = run("bounds", write(tmp_path, "g.json", STAR))
        doc = json.loads(out)
        assert code == 0 and doc["rawlsian_vertex_lower"] == "1/3"

    def test_c4(self, tmp_path):
        doc = json.loads(run("bounds", write(tmp_path, "g.json", C4))[1])
        assert (doc["edge_fairness_lower"], doc["edge_fairness_upper"]) == ("1/3", "1/2")

    def test_edgeless(self, tmp_path):
        code, _, err = run("bounds", write(tmp_path, "g.json", {"vertices": ["a"], "edges": []}))
        assert code == 3 and "no edges" in err


def test_invariants(tmp_path):
    doc = json.loads(run("invariants", write(tmp_path, "g.json", C5))[1])
    assert doc["matching_number"] == 2 and doc["fractional_matching_number"] == "5/2"


class TestEbm:
    def test_triangle(self, tmp_path):
        code, out, _ = run("ebm", write(tmp_path, "g.json", TRI), "--require", "one=1,two=1")
        doc = json.loads(out)
        assert code == 0 and doc["matching"] in ([["a", "c"]], [["b", "c"]]) and doc["weight"] == "2"

    def test_zero(self, tmp_path):
        code, out, _ = run("ebm", write(tmp_path, "g.json", TRI), "--require", "one=0")
        assert json.loads(out) == {"matching": [], "weight": "0"}

    def test_parity_infeasible(self, tmp_path):
        g = {"vertices": ["a", "b"], "edges": [["a", "b"]], "colors": {"a": "r", "b": "r"}}
        code, out, _ = run("ebm", write(tmp_path, "g.json", g), "--require", "r=1")
        assert code == 5 and out == "INFEASIBLE\n"

    def test_weights(self, tmp_path):
        w = write(tmp_path, "w.json", {"b": "7/2"})
        doc = json.loads(run("ebm", write(tmp_path, "g.json", TRI), "--require", "one=1,two=1", "--weights", w)[1])
        assert doc["matching"] == [["b", "c"]] and doc["weight"] == "9/2"

    def test_bad_requirement(self, tmp_path):
        assert run("ebm", write(tmp_path, "g.json", TRI), "--require", "one:1")[0] == 2
        assert run("ebm", write(tmp_path, "g.json", TRI), "--require", "nine=1")[0] == 2
        assert run("ebm", write(tmp_path, "g.json", C5), "--require", "x=0")[0] == 2


class TestSample:
    def test_point_mass(self, tmp_path):
        d = write(tmp_path, "d.json", {"support": [{"member": [], "probability": "1"}]})
        assert run("sample", d, "--seed", "3", "--count", "3")[1] == "\n\n\n"

    def test_reproducible(self, tmp_path):
        d = write(tmp_path, "d.json", {"support": [{"member": ["a"], "probability": "1/2"},
                                                   {"member": ["b"], "probability": "1/2"}]})
        first = run("sample", d, "--seed", "11", "--count", "50")[1]
        assert first == run("sample", d, "--seed", "11", "--count", "50")[1]
        assert set(first.split()) == {"a", "b"}

    def test_malformed(self, tmp_path):
        d = write(tmp_path, "d.json", {"support": [{"member": [], "probability": "9/10"}]})
        assert run("sample", d, "--seed", "1")[0] == 2

    def test_round_trip(self, tmp_path):
        dest = tmp_path / "dist.json"
        run("compute", write(tmp_path, "g.json", K3), "--kind", "matching-edges", "--measure", "uniform",
            "-o", str(dest))
        code, out, _ = run("sample", str(dest), "--seed", "5", "--count", "30")
        assert code == 0 and set(out.split()) <= {"x-y", "x-z", "y-z"}


def test_console_entry_point(tmp_path):
    path = write(tmp_path, "g.json", K3)
    proc = subprocess.run([sys.executable, "-m", "fairgraph.cli", "compute", path, "--kind", "clique",
                           "--measure", "uniform"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("p = 1\n")


@pytest.mark.parametrize("argv", [["--kind", "nope"], []])
def test_argparse_errors(tmp_path, argv):
    with pytest.raises(SystemExit) as info:
        run("compute", write(tmp_path, "g.json", K3), *argv)
    assert info.value.code == 2
