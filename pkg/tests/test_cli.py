import json

import pytest

from bchcoeff.cli import run


def lines_of(capsys):
    out, err = capsys.readouterr()
    return out, err


class TestCoeff:
    def test_word(self, capsys):
        assert run(["coeff", "--word", "AAB"]) == 0
        out, _ = lines_of(capsys)
        assert "c = 1/12" in out

    def test_runs(self, capsys):
        assert run(["coeff", "--runs", "2,1"]) == 0
        out, _ = lines_of(capsys)
        assert "c = 1/12" in out

    def test_b_first(self, capsys):
        assert run(["coeff", "--runs", "1,1", "--b-first"]) == 0
        out, _ = lines_of(capsys)
        assert "c = -1/2" in out

    def test_methods(self, capsys):
        for method in ("alg2", "goldberg", "bernoulli", "oracle"):
            assert run(["coeff", "--word", "AB", "--method", method]) == 0
            out, _ = lines_of(capsys)
            assert "c = 1/2" in out

    def test_reference_row(self, capsys):
        assert run(["coeff", "--runs", "14,12"]) == 0
        out, _ = lines_of(capsys)
        assert "c = -63102076049869/846912068365871834726400000" in out

    def test_digits_only(self, capsys):
        assert run(["coeff", "--runs", "14,12", "--digits-only"]) == 0
        out, _ = lines_of(capsys)
        assert "14 numerator digits" in out
        assert "27 denominator digits" in out
        assert "sign -" in out

    def test_json(self, capsys):
        assert run(["--json", "coeff", "--word", "AB"]) == 0
        out, _ = lines_of(capsys)
        payload = json.loads(out)
        assert payload["coeff"] == "1/2"
        assert payload["runs"] == [1, 1]
        assert payload["a_first"] is True

    def test_word_and_runs_conflict(self, capsys):
        assert run(["coeff", "--word", "AB", "--runs", "1,1"]) == 2
        _, err = lines_of(capsys)
        assert "error:" in err

    def test_neither_given(self, capsys):
        assert run(["coeff"]) == 2

    def test_bad_runs(self, capsys):
        assert run(["coeff", "--runs", "2,x"]) == 2
        _, err = lines_of(capsys)
        assert "error:" in err

    def test_bad_word(self, capsys):
        assert run(["coeff", "--word", "ABC"]) == 2

    def test_oracle_guard(self, capsys):
        assert run(["coeff", "--runs", "20,20", "--method", "oracle"]) == 2
        _, err = lines_of(capsys)
        assert "error:" in err and "16" in err


class TestDenom:
    def test_plain(self, capsys):
        assert run(["denom", "--n", "13"]) == 0
        out, _ = lines_of(capsys)
        assert "d_13 = 210" in out
        assert "13! * d_13 = 1307674368000" in out

    def test_factor(self, capsys):
        assert run(["denom", "--n", "13", "--factor"]) == 0
        out, _ = lines_of(capsys)
        assert "2 * 3 * 5 * 7" in out
        assert run(["denom", "--n", "15", "--factor"]) == 0
        out, _ = lines_of(capsys)
        assert "2^2 * 3" in out

    def test_factor_of_one(self, capsys):
        assert run(["denom", "--n", "4", "--factor"]) == 0
        out, _ = lines_of(capsys)
        assert "d_4 = 1" in out

    def test_json(self, capsys):
        assert run(["--json", "denom", "--n", "13"]) == 0
        out, _ = lines_of(capsys)
        payload = json.loads(out)
        assert payload == {
            "n": 13,
            "d_n": 210,
            "capital": 1307674368000,
            "factorization": [[2, 1], [3, 1], [5, 1], [7, 1]],
        }

    def test_rejects(self, capsys):
        assert run(["denom", "--n", "0"]) == 2


class TestWitness:
    def test_pass(self, capsys):
        assert run(["witness", "--n", "26", "--p", "7"]) == 0
        out, _ = lines_of(capsys)
        assert "branch=lemma2" in out
        assert "runs=14,12" in out
        assert out.strip().endswith("PASS")

    def test_json(self, capsys):
        assert run(["--json", "witness", "--n", "15", "--p", "2"]) == 0
        out, _ = lines_of(capsys)
        payload = json.loads(out)
        assert payload["runs"] == [8, 4, 2, 1]
        assert payload["branch"] == "power-m"
        assert payload["valuation"] == payload["target"] == 13
        assert payload["pass"] is True

    def test_rejects_nonprime(self, capsys):
        assert run(["witness", "--n", "26", "--p", "4"]) == 2


class TestVerifyCommand:
    def test_suite_passes(self, capsys):
        assert run(["verify", "--suite", "min-degree"]) == 0
        out, err = lines_of(capsys)
        assert "| PASS" in out
        assert "| FAIL" not in out
        assert "checks passed" in err

    def test_max_n(self, capsys):
        assert run(["verify", "--suite", "witness", "--max-n", "6"]) == 0
        out, _ = lines_of(capsys)
        assert len([l for l in out.splitlines() if l]) == 8

    def test_json(self, capsys):
        assert run(["--json", "verify", "--suite", "min-degree"]) == 0
        out, _ = lines_of(capsys)
        for line in out.splitlines():
            assert json.loads(line)["pass"] is True

    def test_unknown_suite_rejected_by_parser(self):
        with pytest.raises(SystemExit):
            run(["verify", "--suite", "bogus"])


class TestQsetCommand:
    def test_singleton(self, capsys):
        assert run(["qset", "--n", "15", "--p", "2"]) == 0
        out, _ = lines_of(capsys)
        assert "1 extreme partition" in out
        assert "8,4,2,1" in out

    def test_json(self, capsys):
        assert run(["--json", "qset", "--n", "9", "--p", "3"]) == 0
        out, _ = lines_of(capsys)
        payload = json.loads(out)
        assert payload["partitions"] == [[6, 3], [3, 3, 3]]
        assert payload["l"] == 0

    def test_guard(self, capsys):
        assert run(["qset", "--n", "99", "--p", "2"]) == 2
        _, err = lines_of(capsys)
        assert "error:" in err and "31" in err


class TestLcmCommand:
    def test_agreement(self, capsys):
        assert run(["lcm", "--n", "8"]) == 0
        out, _ = lines_of(capsys)
        assert "agreement: PASS" in out
        assert "120960" in out

    def test_guard(self, capsys):
        assert run(["lcm", "--n", "50"]) == 2


class TestTableCommand:
    def test_dn_matches_data_file(self, capsys, data_dir):
        assert run(["table", "--name", "dn"]) == 0
        out, _ = lines_of(capsys)
        assert out == (data_dir / "b338025.txt").read_text()

    def test_t1(self, capsys):
        assert run(["table", "--name", "t1"]) == 0
        out, _ = lines_of(capsys)
        lines = out.splitlines()
        assert len(lines) == 7
        assert lines[0] == (
            "n=26 p=7 l=1 m=2 runs=14,12 "
            "c=-63102076049869/846912068365871834726400000 e=1 a=6"
        )
        assert "c=0 e=0 a=0" in lines[1]

    def test_t1_json(self, capsys):
        assert run(["--json", "table", "--name", "t1"]) == 0
        out, _ = lines_of(capsys)
        rows = [json.loads(line) for line in out.splitlines()]
        assert len(rows) == 7
        assert rows[2]["coeff"] == "5260127/12693891496366080000"
        assert rows[2]["a"] == 4

    def test_t2_digits_only(self, capsys):
        assert run(["table", "--name", "t2", "--digits-only"]) == 0
        out, _ = lines_of(capsys)
        lines = out.splitlines()
        assert len(lines) == 3
        assert "digits=168/248" in lines[0]
        assert "e=3 a=1" in lines[2]
        assert "c =" not in out

    def test_t2_full(self, capsys):
        assert run(["table", "--name", "t2"]) == 0
        out, _ = lines_of(capsys)
        assert "c = " in out
        assert "digits=330/460" in out

    def test_mindegree(self, capsys):
        assert run(["table", "--name", "mindegree"]) == 0
        out, _ = lines_of(capsys)
        assert "p=2 l=4 n=65535" in out
        assert "p=5 l=2 n=31249" in out


class TestOracleCheck:
    def test_small(self, capsys):
        assert run(["oracle-check", "--max-n", "4"]) == 0
        out, err = lines_of(capsys)
        assert out.count("three-route-agreement") == 4
        assert "4/4 checks passed" in err


class TestParser:
    def test_no_command(self):
        with pytest.raises(SystemExit):
            run([])

    def test_json_after_subcommand(self, capsys):
        assert run(["denom", "--n", "5", "--json"]) == 0
        out, _ = lines_of(capsys)
        assert json.loads(out)["d_n"] == 6
