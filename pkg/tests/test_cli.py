import json

import pytest
from click.testing import CliRunner

from selfadj.cli import main


@pytest.fixture
def run():
    runner = CliRunner()

    def _run(*args):
        return runner.invoke(main, [str(a) for a in args])

    return _run


@pytest.fixture
def family_file(run, tmp_path):
    def _make(*args, name="op.json"):
        res = run("family", *args)
        assert res.exit_code == 0, res.output
        path = tmp_path / name
        path.write_text(res.output)
        return path

    return _make


def write(tmp_path, obj, name="op.json"):
    path = tmp_path / name
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return path


DEGENERATE = {"order": 4, "coeffs": {"4": ["1", "0", "-2", "0", "1"], "3": ["0", "-8", "0", "8"],
                                     "2": ["8"], "1": ["0", "-24"]}, "interval": ["-1", "1"]}


class TestFamily:
    def test_legendre6(self, run):
        res = run("family", "J6.I.a", "--C", 36, "--D", -8)
        out = json.loads(res.output)
        assert res.exit_code == 0
        assert out["order"] == 6 and out["interval"] == ["-1", "1"]
        assert out["lambdas"][:3] == ["0", "-8", "-216"]

    def test_laguerre_classical(self, run):
        out = json.loads(run("family", "L4", "--a", 4, "--b", -2, "--A", -5).output)
        assert out["coeffs"] == {"1": ["-1", "1"], "2": ["2", "-5", "1"], "3": ["0", "4", "-2"],
                                 "4": ["0", "0", "1"]}

    def test_constraint(self, run):
        res = run("family", "L4", "--a", 2, "--b", -2, "--A", 0)
        assert res.exit_code == 2
        assert "requires a > 2" in res.output

    def test_bad_parameter_value(self, run):
        res = run("family", "L4", "--a", "0.5", "--b", -2, "--A", 0)
        assert res.exit_code == 2

    def test_unknown(self, run):
        assert run("family", "Q9").exit_code == 2

    def test_seeded(self, run):
        a = run("family", "J8.IV", "--seed", 3).output
        assert a == run("family", "J8.IV", "--seed", 3).output
        assert json.loads(a)["family"] == "J8.IV"

    def test_reading(self, run):
        out = json.loads(run("family", "J8.I.g", "--D", 1, "--F", 1, "--G", 1, "--reading", "printed").output)
        assert out["reading"] == "printed"


class TestVerify:
    def test_ex41(self, run, family_file):
        res = run("verify", family_file("EX4.1"))
        assert res.exit_code == 1
        assert json.loads(res.output)["failures"] == ["boundary hi #5: b4'' - 3b3' + 5b2"]

    def test_hermite(self, run, family_file):
        res = run("verify", family_file("H4", "--m1", 0, "--m2", 1, "--A", -4))
        assert res.exit_code == 0
        assert json.loads(res.output)["overall"] is True

    def test_csv(self, run, family_file):
        res = run("verify", family_file("H4", "--m1", 0, "--m2", 1, "--A", -4), "--format", "csv")
        assert res.output.splitlines()[0] == "section,id,item,verdict,pass"

    def test_interval_flags(self, run, tmp_path):
        path = write(tmp_path, {k: v for k, v in DEGENERATE.items() if k != "interval"})
        assert run("verify", path).exit_code == 2
        res = run("verify", path, "--lo", -1, "--hi", 1)
        assert json.loads(res.output)["interval"] == ["-1", "1"]

    def test_schema_error(self, run, tmp_path):
        path = write(tmp_path, {"order": 8, "coeffs": {"9": ["1"], "8": ["1"]}})
        res = run("verify", path)
        assert res.exit_code == 2
        assert "coeffs['9']" in res.output

    def test_json_error_location(self, run, tmp_path):
        res = run("verify", write(tmp_path, '{"order": 4,\n "coeffs": }'))
        assert res.exit_code == 2 and "line 2" in res.output

    def test_float_rejected(self, run, tmp_path):
        path = write(tmp_path, {"order": 2, "coeffs": {"2": [1], "1": [0, 0.5]}})
        assert run("verify", path, "--lo", 0, "--hi", 1).exit_code == 2

    def test_unsupported(self, run, tmp_path):
        path = write(tmp_path, {"order": 2, "coeffs": {"2": ["-2", "0", "1"], "1": ["1"]}})
        assert run("verify", path, "--lo", 0, "--hi", 2).exit_code == 2

    def test_missing_file(self, run, tmp_path):
        assert run("verify", tmp_path / "none.json").exit_code == 2


class TestEigen:
    def test_degenerate(self, run, tmp_path):
        out = json.loads(run("eigen", write(tmp_path, DEGENERATE), "--max-degree", 3).output)
        assert out["groups"] == [[0], [2], [1, 3]]
        assert out["polys"][3] == ["0", "-3/5", "0", "1"]
        assert out["orthogonalized"] is True

    def test_hermite8(self, run, family_file):
        path = family_file("H8", "--D", -256, "--F", -64, "--G", 16)
        out = json.loads(run("eigen", path, "--max-degree", 4).output)
        assert out["lambdas"] == ["0", "16", "256", "1296", "4096"]

    def test_degree_zero(self, run, tmp_path):
        out = json.loads(run("eigen", write(tmp_path, DEGENERATE), "--max-degree", 0).output)
        assert out["lambdas"] == ["0"] and out["polys"] == [["1"]]

    def test_unsupported_weight_warns(self, run, tmp_path):
        # p = exp(-1/x) / x has an essential factor at 0
        op = {"order": 2, "coeffs": {"2": ["0", "0", "1"], "1": ["1", "1"]}, "interval": ["0", "+inf"]}
        path = write(tmp_path, op)
        res = run("eigen", path, "--max-degree", 3)
        assert res.exit_code == 0
        out = json.loads(res.output)
        assert out["orthogonalized"] is False and "warning" in out

    def test_csv(self, run, tmp_path):
        res = run("eigen", write(tmp_path, DEGENERATE), "--max-degree", 3, "--format", "csv")
        assert res.output.splitlines()[4] == "3,-24,2,0 -3/5 0 1"

    def test_inconsistent(self, run, tmp_path):
        path = write(tmp_path, {"order": 2, "coeffs": {"2": ["0", "0", "1"], "1": ["1", "-2"]}})
        assert run("eigen", path, "--lo", 0, "--hi", "+inf", "--max-degree", 2).exit_code == 1


class TestGramClassifyCatalog:
    def test_gram_hermite(self, run, family_file):
        out = json.loads(run("gram", family_file("H4", "--m1", 0, "--m2", 1, "--A", -4), "--max-degree", 4).output)
        G = out["gram"]
        for i in range(5):
            assert G[i][i] not in ("0",) and not G[i][i].startswith("-")
            assert all(G[i][j] == "0" for j in range(5) if j != i)

    def test_gram_csv(self, run, tmp_path):
        res = run("gram", write(tmp_path, DEGENERATE), "--max-degree", 3, "--format", "csv")
        assert res.output.splitlines()[0] == "p0,p1,p2,p3"

    def test_classify_legendre(self, run, family_file):
        out = json.loads(run("classify", family_file("J4.b0", "--a", -2, "--A", 14)).output)
        assert [(r["root"], r["kind"]) for r in out["roots"]] == [("-1", "Logarithmic"), ("1", "Logarithmic")]
        admissible = [c["interval"] for c in out["intervals"] if c["admissible"]]
        assert admissible == [["-1", "1"]]

    def test_catalog(self, run):
        assert len(json.loads(run("catalog").output)) == 55

    def test_catalog_csv_and_seed(self, run):
        rows = run("catalog", "--format", "csv").output.splitlines()
        assert len(rows) == 56
        out = json.loads(run("catalog", "--seed", 11).output)
        assert all(len(e["draws"]) == 3 for e in out if e["params"])

    def test_byte_stable(self, run, tmp_path):
        path = write(tmp_path, DEGENERATE)
        for args in (("catalog", "--seed", 5), ("eigen", path), ("verify", path), ("gram", path)):
            assert run(*args).output == run(*args).output
