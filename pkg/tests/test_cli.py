import json

import pytest

from weyl_order import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestSingleShot:
    def test_poset_artifacts(self, tmp_path, capsys):
        code, out, _ = run(capsys, "poset", "--lambda", "2,1", "--k", "2",
                           "--out-dir", str(tmp_path), "--dot")
        assert code == 0
        assert "3 classes, 2 cover edges" in out
        payload = json.loads((tmp_path / "poset_lam2-1_k2.json").read_text())
        assert payload["num_classes"] == 3
        assert payload["hasse"] == [[0, 1, "type_two"], [1, 2, "type_two"]]
        dot = (tmp_path / "poset_lam2-1_k2.dot").read_text()
        assert dot.startswith("digraph")

    def test_max(self, tmp_path, capsys):
        code, out, _ = run(capsys, "max", "--lambda", "2,1", "--k", "2",
                           "--out-dir", str(tmp_path), "--json")
        assert code == 0
        assert "bottom (2,1)/(0,0)" in out
        assert "top    (1,1)/(1,0)" in out
        payload = json.loads((tmp_path / "max_lam2-1_k2.json").read_text())
        assert payload["top"]["parts"][0]["omega"] == [1, 1]

    def test_covers(self, tmp_path, capsys):
        code, out, _ = run(capsys, "covers", "--lambda", "2,0", "--k", "2",
                           "--out-dir", str(tmp_path), "--json")
        assert code == 0
        assert "[type_one]" in out
        payload = json.loads((tmp_path / "covers_lam2-0_k2.json").read_text())
        assert [c["kind"] for c in payload["covers"]] == ["type_one"]

    def test_dim(self, tmp_path, capsys):
        code, out, _ = run(capsys, "dim", "--type", "C2",
                           "--tuple", "2,1/0,0",
                           "--out-dir", str(tmp_path), "--json")
        assert code == 0
        assert out.strip() == "35 * 1 = 35"
        payload = json.loads((tmp_path / "dim_C2.json").read_text())
        assert payload["dim"] == 35 and payload["part_dims"] == [35, 1]

    def test_size(self, capsys):
        code, out, _ = run(capsys, "size", "--lambda", "2,1", "--k", "2")
        assert code == 0
        assert "ordered tuples: 6" in out
        assert "classes (closed form): 3" in out

    def test_size_k3_has_no_closed_form_line(self, capsys):
        code, out, _ = run(capsys, "size", "--lambda", "2,1", "--k", "3")
        assert code == 0
        assert "closed form" not in out


class TestVerify:
    ARGS = ("verify", "--families", "A", "--max-coord", "1", "--max-k", "2")

    def test_small_sweep_passes(self, tmp_path, capsys):
        code, out, _ = run(capsys, *self.ARGS, "--out-dir", str(tmp_path))
        assert code == 0
        assert "0 violations" in out
        payload = json.loads((tmp_path / "verify_report.json").read_text())
        assert payload["num_violations"] == 0
        assert payload["num_checks"] == len(payload["items"]) > 0
        csv_text = (tmp_path / "verify_report.csv").read_text()
        assert csv_text.splitlines()[0] == "item,ok,skipped"

    def test_parallel_run_is_deterministic(self, tmp_path, capsys):
        a, b = tmp_path / "a", tmp_path / "b"
        assert run(capsys, *self.ARGS, "--jobs", "1", "--out-dir", str(a))[0] == 0
        assert run(capsys, *self.ARGS, "--jobs", "2", "--out-dir", str(b))[0] == 0
        assert (a / "verify_report.json").read_bytes() == \
            (b / "verify_report.json").read_bytes()

    def test_selftest_corrupt_trips_the_sweep(self, tmp_path, capsys):
        code, out, _ = run(capsys, *self.ARGS, "--selftest-corrupt",
                           "--out-dir", str(tmp_path))
        assert code == 1
        assert "VIOLATION" in out

    def test_unknown_family(self, tmp_path, capsys):
        code, _, err = run(capsys, "verify", "--families", "Q",
                           "--out-dir", str(tmp_path))
        assert code == 2
        assert "unknown family" in err

    def test_guarded_items_are_skipped_not_failed(self, tmp_path, capsys):
        code, out, _ = run(capsys, *self.ARGS, "--guard", "3",
                           "--out-dir", str(tmp_path))
        assert code == 0
        payload = json.loads((tmp_path / "verify_report.json").read_text())
        assert payload["skipped"]
        assert payload["num_violations"] == 0


class TestFailureModes:
    def test_bad_weight(self, capsys):
        code, _, err = run(capsys, "size", "--lambda", "2,x")
        assert code == 2
        assert "cannot parse weight" in err

    def test_unknown_system(self, capsys):
        code, _, err = run(capsys, "dim", "--type", "E8",
                           "--tuple", "1,0/0,0")
        assert code == 2

    def test_guard_exit_code(self, tmp_path, capsys):
        code, _, err = run(capsys, "poset", "--lambda", "4,4", "--k", "2",
                           "--guard", "10", "--out-dir", str(tmp_path))
        assert code == 3
        assert "guard exceeded" in err

    def test_guard_env_var(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("WEYL_ORDER_GUARD", "10")
        code, *_ = run(capsys, "poset", "--lambda", "4,4", "--k", "2",
                       "--out-dir", str(tmp_path))
        assert code == 3
        # an explicit flag beats the environment
        code, *_ = run(capsys, "poset", "--lambda", "4,4", "--k", "2",
                       "--guard", "1000", "--out-dir", str(tmp_path))
        assert code == 0

    def test_argparse_error_becomes_exit_2(self, capsys):
        assert cli.main(["poset"]) == 2  # --lambda is required
        capsys.readouterr()
