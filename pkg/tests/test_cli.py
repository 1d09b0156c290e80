import json

from wheelembed.cli import main
from wheelembed.families import circulant, hypertree
from wheelembed.graphs import graph_from_json, graph_to_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_graph(tmp_path, G, filename):
    target = tmp_path / filename
    target.write_text(graph_to_json(G))
    return str(target)


class TestGen:
    def test_hypertree_json(self, capsys):
        code, out, _ = run(capsys, "gen", "hypertree", "4")
        assert code == 0
        G = graph_from_json(out)
        assert (G.order, len(G.edges)) == (15, 21)

    def test_round_trip_through_file(self, capsys, tmp_path):
        target = tmp_path / "c8.json"
        code, _, _ = run(capsys, "gen", "circulant", "8", "1", "2", "--out", str(target))
        assert code == 0
        G = graph_from_json(target.read_text())
        expected = circulant(8, {1, 2})
        assert (G.order, G.edges, G.name) == (expected.order, expected.edges, expected.name)

    def test_byte_identical_output(self, capsys):
        _, first, _ = run(capsys, "gen", "torus", "3", "3")
        _, second, _ = run(capsys, "gen", "torus", "3", "3")
        assert first == second

    def test_bad_parameter_exits_one(self, capsys):
        code, _, err = run(capsys, "gen", "wheel", "2")
        assert code == 1
        assert "order >= 4" in err

    def test_unknown_family_exits_one(self, capsys):
        code, _, _ = run(capsys, "gen", "moebius", "3")
        assert code == 1


class TestEmbedAndMetrics:
    def test_preorder_embedding_and_metrics(self, capsys, tmp_path):
        code, _, _ = run(capsys, "gen", "star", "15", "--out", str(tmp_path / "g.json"))
        assert code == 0
        code, _, _ = run(capsys, "gen", "hypertree", "4", "--out", str(tmp_path / "h.json"))
        assert code == 0
        code, out, _ = run(capsys, "embed", "--guest", str(tmp_path / "g.json"),
                           "--host", str(tmp_path / "h.json"), "--method", "preorder",
                           "--out", str(tmp_path / "emb.json"))
        assert code == 0
        emb_data = json.loads((tmp_path / "emb.json").read_text())
        assert emb_data["vmap"][0] == 1
        code, out, _ = run(capsys, "metrics", "--guest", str(tmp_path / "g.json"),
                           "--host", str(tmp_path / "h.json"),
                           "--embedding", str(tmp_path / "emb.json"), "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["max_dilation"] == 3
        assert payload["wirelength"] == sum(payload["dilation_per_edge"].values())
        assert payload["wirelength"] == sum(payload["congestion_per_edge"].values())

    def test_identity_method(self, capsys, tmp_path):
        g = write_graph(tmp_path, circulant(6, {1}), "g.json")
        code, out, _ = run(capsys, "embed", "--guest", g, "--host", g, "--method", "identity")
        assert code == 0
        assert json.loads(out)["vmap"] == [1, 2, 3, 4, 5, 6]

    def test_windmill_method_checks_shapes(self, capsys, tmp_path):
        g = write_graph(tmp_path, circulant(6, {1}), "g.json")
        code, _, err = run(capsys, "embed", "--guest", g, "--host", g, "--method", "windmill")
        assert code == 1

    def test_metrics_text_table(self, capsys, tmp_path):
        g = write_graph(tmp_path, circulant(6, {1}), "g.json")
        code, _, _ = run(capsys, "embed", "--guest", g, "--host", g,
                         "--method", "identity", "--out", str(tmp_path / "e.json"))
        assert code == 0
        code, out, _ = run(capsys, "metrics", "--guest", g, "--host", g,
                           "--embedding", str(tmp_path / "e.json"))
        assert code == 0
        assert "wirelength" in out
        assert "host edge" in out

    def test_random_metrics_deterministic(self, capsys, tmp_path):
        g = write_graph(tmp_path, circulant(8, {1, 2}), "g.json")
        args = ("metrics", "--guest", g, "--host", g, "--random", "5",
                "--seed", "3", "--format", "json")
        code, first, _ = run(capsys, *args)
        assert code == 0
        _, second, _ = run(capsys, *args)
        assert first == second
        payload = json.loads(first)
        assert len(payload["samples"]) == 5
        assert all(s["dilation_sum_equals_congestion_sum"] for s in payload["samples"])


class TestBoundAndVerify:
    def test_bound_wirelength(self, capsys, tmp_path):
        h = write_graph(tmp_path, circulant(8, {1, 2}), "h.json")
        code, out, _ = run(capsys, "bound", "--metric", "wl", "--kind", "wheel",
                           "--host", h, "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert (payload["bound"], payload["achieved"], payload["sharp"]) == (17, 17, True)

    def test_bound_dilation(self, capsys, tmp_path):
        from wheelembed.families import star, cycle as cycle_family
        g = write_graph(tmp_path, star(7), "g.json")
        h = write_graph(tmp_path, cycle_family(7), "h.json")
        code, out, _ = run(capsys, "bound", "--metric", "dil", "--guest", g,
                           "--host", h, "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert (payload["bound"], payload["sharp"]) == (3, True)

    def test_bound_congestion(self, capsys, tmp_path):
        from wheelembed.families import windmill
        g = write_graph(tmp_path, windmill(8), "g.json")
        h = write_graph(tmp_path, circulant(16, {1, 4}), "h.json")
        code, out, _ = run(capsys, "bound", "--metric", "ec", "--guest", g,
                           "--host", h, "--format", "json")
        assert code == 0
        assert json.loads(out)["bound"] == 4

    def test_not_sharp_is_still_exit_zero(self, capsys, tmp_path):
        from wheelembed.families import star
        h = write_graph(tmp_path, star(8), "h.json")
        code, out, _ = run(capsys, "bound", "--metric", "wl", "--kind", "wheel",
                           "--host", h, "--format", "json")
        assert code == 0
        assert json.loads(out)["sharp"] is False

    def test_verify_windmill_sweep(self, capsys):
        code, out, _ = run(capsys, "verify", "ec-windmill", "--sweep", "3..6",
                           "--format", "json")
        assert code == 0
        rows = json.loads(out)
        assert [row["n"] for row in rows] == [3, 4, 5, 6]
        assert all(row["sharp"] for row in rows)

    def test_verify_dilation_text_table(self, capsys):
        code, out, _ = run(capsys, "verify", "dil-hypertree", "--kind", "star",
                           "--level", "4")
        assert code == 0
        assert "True" in out

    def test_verify_wirelength_sweep(self, capsys):
        code, out, _ = run(capsys, "verify", "wl-fan", "--sweep", "6..8",
                           "--format", "json")
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 3
        assert all(row["sharp"] for row in rows)


class TestHam:
    def test_petersen_cycle_query(self, capsys, tmp_path):
        from wheelembed.families import generalized_petersen
        g = write_graph(tmp_path, generalized_petersen(5, 2), "g.json")
        code, out, _ = run(capsys, "ham", "--graph", g, "--query", "cycle")
        assert code == 0
        payload = json.loads(out)
        assert payload["verdict"] is False
        assert payload["witness"] is None

    def test_ffault_query(self, capsys, tmp_path):
        g = write_graph(tmp_path, circulant(8, {1, 2}), "g.json")
        code, out, _ = run(capsys, "ham", "--graph", g, "--query", "ffault-ham", "--f", "1")
        assert code == 0
        payload = json.loads(out)
        assert payload["verdict"] is True
        assert payload["failing_fault"] is None

    def test_path_with_ends(self, capsys, tmp_path):
        from wheelembed.families import path as path_family
        g = write_graph(tmp_path, path_family(4), "g.json")
        code, out, _ = run(capsys, "ham", "--graph", g, "--query", "path",
                           "--ends", "1,4")
        assert json.loads(out)["witness"] == [1, 2, 3, 4]

    def test_budget_exhaustion_exits_two(self, capsys, tmp_path):
        g = write_graph(tmp_path, circulant(12, {1, 2, 3}), "g.json")
        code, _, err = run(capsys, "ham", "--graph", g, "--query", "cycle",
                           "--node-limit", "2")
        assert code == 2
        assert "inconclusive" in err


class TestOracleCommand:
    def test_wirelength(self, capsys, tmp_path):
        from wheelembed.families import cycle, path as path_family
        g = write_graph(tmp_path, cycle(4), "g.json")
        h = write_graph(tmp_path, path_family(4), "h.json")
        code, out, _ = run(capsys, "oracle", "--guest", g, "--host", h, "--metric", "wl")
        assert code == 0
        payload = json.loads(out)
        assert payload["optimum"] == 6
        assert payload["exact"] is True

    def test_limit_violation_exits_one(self, capsys, tmp_path):
        from wheelembed.families import cycle
        g = write_graph(tmp_path, cycle(10), "g.json")
        code, _, _ = run(capsys, "oracle", "--guest", g, "--host", g,
                         "--metric", "dil", "--limit", "9")
        assert code == 1


class TestExport:
    def test_plain_dot(self, capsys, tmp_path):
        from wheelembed.families import cycle
        g = write_graph(tmp_path, cycle(3), "g.json")
        code, out, _ = run(capsys, "export", "--graph", g)
        assert code == 0
        assert out.splitlines()[0] == 'graph "cycle-3" {'
        assert "1 -- 2;" in out

    def test_hypertree_dot_counts(self, capsys, tmp_path):
        g = write_graph(tmp_path, hypertree(4), "g.json")
        code, out, _ = run(capsys, "export", "--graph", g)
        lines = out.splitlines()
        assert sum(1 for line in lines if line.endswith(";") and "--" not in line) == 15
        assert sum(1 for line in lines if "--" in line) == 21

    def test_annotated_labels_sum_to_wirelength(self, capsys, tmp_path):
        from wheelembed.families import windmill
        g = write_graph(tmp_path, windmill(4), "g.json")
        h = write_graph(tmp_path, circulant(8, {1, 2}), "h.json")
        code, _, _ = run(capsys, "embed", "--guest", g, "--host", h, "--method",
                         "windmill", "--out", str(tmp_path / "emb.json"))
        assert code == 0
        code, out, _ = run(capsys, "metrics", "--guest", g, "--host", h,
                           "--embedding", str(tmp_path / "emb.json"), "--format", "json")
        wirelength = json.loads(out)["wirelength"]
        code, out, _ = run(capsys, "export", "--graph", h, "--guest", g,
                           "--embedding", str(tmp_path / "emb.json"))
        assert code == 0
        labels = [int(part.split('"')[1]) for part in out.splitlines() if "label" in part]
        assert sum(labels) == wirelength

    def test_missing_file_exits_one(self, capsys):
        code, _, _ = run(capsys, "export", "--graph", "/nonexistent/graph.json")
        assert code == 1


def test_version_exits_zero(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0
    assert "wheelembed" in out


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "gen" in out
