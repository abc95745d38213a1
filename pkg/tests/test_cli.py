import json
import subprocess
import sys
import time

import pytest

from cyclic_lrc import cli


def run(capsys, *argv):
    rc = cli.main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


@pytest.fixture(scope="module")
def q4_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("codes") / "q4.json"
    assert cli.main(["construct", "--family", "thm-even", "--q", "4", "--out", str(path)]) == 0
    return path


class TestConstruct:
    def test_q4(self, capsys, tmp_path):
        rc, out, err = run(capsys, "construct", "--family", "thm-even", "--q", "4")
        data = json.loads(out)
        assert rc == 0 and (data["n"], data["k"], data["deg_g"], data["lambda"]) == (15, 7, 8, 1)
        assert "family" in err and "deg_g" in err

    def test_thm3(self, capsys):
        rc, out, _ = run(capsys, "construct", "--family", "thm3", "--q", "8", "--m", "4")
        assert rc == 0 and json.loads(out)["n"] == 585 and json.loads(out)["k"] == 386

    def test_thm4_lambda_not_one(self, capsys):
        rc, out, _ = run(capsys, "construct", "--family", "thm4", "--q", "5", "--m", "2")
        assert rc == 0 and json.loads(out)["lambda"] != 1

    def test_inadmissible(self, capsys):
        rc, out, err = run(capsys, "construct", "--family", "thm-even", "--q", "5")
        assert rc == 2 and out == "" and "3 | (q - 1)" in err

    def test_missing_m(self, capsys):
        rc, _, err = run(capsys, "construct", "--family", "thm3", "--q", "8")
        assert rc == 2 and "requires m" in err

    def test_argparse_rejects(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["construct", "--family", "bogus", "--q", "4"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_byte_identical(self, capsys, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for p in (a, b):
            run(capsys, "construct", "--family", "prop3", "--q", "7", "--out", str(p))
        assert a.read_bytes() == b.read_bytes()


class TestVerify:
    def test_q4(self, capsys, q4_file):
        rc, out, _ = run(capsys, "verify", "--code", str(q4_file))
        rep = json.loads(out)
        assert rc == 0 and rep["d_exact"] == 6 and rep["singleton_optimal"]
        assert rep["claims_checked"] and rep["mismatches"] == []
        assert list(rep)[:7] == ["n", "k", "d_lower", "d_exact", "r", "singleton_defect", "perfect"]

    @pytest.mark.parametrize("family,q,m,d", [("thm3", 8, "2", 5), ("thm4", 5, "2", 5),
                                              ("prop3", 7, None, 5), ("thm-odd", 13, None, 6)])
    def test_round_trip(self, capsys, tmp_path, family, q, m, d):
        path = tmp_path / "c.json"
        argv = ["construct", "--family", family, "--q", str(q), "--out", str(path)]
        if m:
            argv += ["--m", m]
        assert run(capsys, *argv)[0] == 0
        rc, out, _ = run(capsys, "verify", "--code", str(path))
        assert rc == 0 and json.loads(out)["d_exact"] == d

    def test_q5_m6_structured(self, capsys, tmp_path):
        path = tmp_path / "q5.json"
        run(capsys, "construct", "--family", "thm4", "--q", "5", "--m", "6", "--out", str(path))
        t0 = time.perf_counter()
        rc, out, _ = run(capsys, "verify", "--code", str(path), "--method", "structured")
        rep = json.loads(out)
        assert rc == 0 and rep["d_exact"] == 5 and rep["perfect"] and rep["n"] == 3906
        assert time.perf_counter() - t0 < 300

    def test_truncated(self, capsys, tmp_path, q4_file):
        bad = tmp_path / "bad.json"
        bad.write_text(q4_file.read_text()[:50])
        rc, _, err = run(capsys, "verify", "--code", str(bad))
        assert rc == 2 and err.startswith("error:")

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "verify", "--code", str(tmp_path / "nope.json"))[0] == 2

    def test_claim_mismatch(self, capsys, tmp_path, q4_file):
        data = json.loads(q4_file.read_text())
        data["claims"]["d"] = 7
        path = tmp_path / "lie.json"
        path.write_text(json.dumps(data))
        rc, out, err = run(capsys, "verify", "--code", str(path))
        assert rc == 3 and "mismatch: d" in err
        assert json.loads(out)["mismatches"] == ["d: claimed 7, verified 6"]


class TestWitness:
    def test_prop3(self, capsys):
        rc, out, _ = run(capsys, "witness", "--family", "prop3", "--q", "7")
        data = json.loads(out)
        assert rc == 0 and data["weight"] == 5 and data["member"]

    def test_thm3(self, capsys):
        rc, out, _ = run(capsys, "witness", "--family", "thm3", "--q", "8", "--m", "2")
        assert rc == 0 and json.loads(out)["member"]

    def test_prop3_even_q(self, capsys):
        rc, _, err = run(capsys, "witness", "--family", "prop3", "--q", "4")
        assert rc == 2 and "q odd" in err

    def test_no_witness_family(self, capsys):
        rc, _, err = run(capsys, "witness", "--family", "thm-even", "--q", "4")
        assert rc == 2 and "no explicit witness" in err


class TestSearch:
    def test_thm_even(self, capsys):
        rc, out, _ = run(capsys, "search", "--max-q", "20", "--families", "thm-even")
        rows = json.loads(out)
        assert rc == 0 and [r["q"] for r in rows] == [4, 16]
        assert rows[1]["n"] == 51

    def test_thm_odd(self, capsys):
        rc, out, _ = run(capsys, "search", "--max-q", "30", "--families", "thm-odd")
        assert [r["q"] for r in json.loads(out)] == [13, 25]

    def test_thm3_respects_max_n(self, capsys):
        rc, out, _ = run(capsys, "search", "--max-q", "8", "--families", "thm3", "--max-n", "1000")
        assert [(r["q"], r["m"]) for r in json.loads(out)] == [(8, 2), (8, 4)]

    def test_empty(self, capsys):
        rc, out, _ = run(capsys, "search", "--max-q", "3", "--families", "thm-even")
        assert rc == 0 and json.loads(out) == []

    def test_unknown_family(self, capsys):
        rc, _, err = run(capsys, "search", "--max-q", "9", "--families", "thm-even,nope")
        assert rc == 2 and "nope" in err


class TestSimulate:
    def test_q4(self, capsys, q4_file):
        rc, out, _ = run(capsys, "simulate", "--code", str(q4_file), "--erasures", "1",
                         "--trials", "500", "--seed", "3")
        rep = json.loads(out)
        assert rc == 0 and rep["repaired_fraction"] == 1.0 and rep["average_repair_degree"] == 2.0

    def test_reproducible(self, capsys, q4_file):
        argv = ["simulate", "--code", str(q4_file), "--erasures", "2", "--trials", "800", "--seed", "5"]
        a = run(capsys, *argv)[1]
        b = run(capsys, *argv, "--jobs", "2")[1]
        assert a == b

    def test_too_many_erasures(self, capsys, q4_file):
        rc, _, err = run(capsys, "simulate", "--code", str(q4_file), "--erasures", "16",
                         "--trials", "5", "--seed", "0")
        assert rc == 2 and "erasure count" in err

    def test_no_locality(self, capsys, tmp_path):
        from cyclic_lrc.codes import build_code, save_code
        from cyclic_lrc.gf import make_field
        path = tmp_path / "bin.json"
        save_code(build_code(make_field(2, 4), 2, 15, 0, [1, 2, 4, 8]), path)
        rc, _, err = run(capsys, "simulate", "--code", str(path), "--erasures", "1",
                         "--trials", "5", "--seed", "0")
        assert rc == 2 and "locality" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cyclic_lrc", "construct", "--family", "thm-even",
                           "--q", "16"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["n"] == 51
