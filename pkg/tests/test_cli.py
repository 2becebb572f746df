"""The scoreplay command line and the braces-notation round trip."""

import pytest
from hypothesis import given, settings

from scoreplay import notation, parse_game
from scoreplay.cli import run, split_rulesets

from _expected import (HACK_PATH_TEXTS, NONINVERTIBLE_TEXT,
                       RATIONAL_SUM_ARGS, RATIONAL_SUM_TEXT, TBF_TEXT)
from _strategies import games


def out_of(capsys, args, code=0):
    assert run(args) == code
    captured = capsys.readouterr()
    assert captured.err == ""
    return captured.out


def err_of(capsys, args):
    assert run(args) == 1
    captured = capsys.readouterr()
    assert captured.out == ""
    return captured.err


class TestEval:
    def test_switch(self, capsys):
        assert out_of(capsys, ["eval", "{1|0|.}"]) == "SL=1 SR=0 outcome=L\n"

    def test_fraction_scores(self, capsys):
        out = out_of(capsys, ["eval", "{3/2|0|-1.5}"])
        assert out == "SL=3/2 SR=-3/2 outcome=N\n"


class TestSum:
    def test_disjunctive_rational(self, capsys):
        out = out_of(capsys, ["sum", *RATIONAL_SUM_ARGS])
        assert out.strip() == notation(parse_game(RATIONAL_SUM_TEXT))

    def test_selective_short_rule(self, capsys):
        args = ["sum", "--op", "sel", "--rule", "short",
                "{1|0|.}", "{.|0|-1}"]
        assert out_of(capsys, args) == "0\n"


class TestNegate:
    def test_switch(self, capsys):
        assert out_of(capsys, ["negate", "{1|0|-1}"]) == "{1|0|-1}\n"

    def test_structurally_symmetric_fixed_point(self, capsys):
        out = out_of(capsys, ["negate", NONINVERTIBLE_TEXT])
        assert out.strip() == NONINVERTIBLE_TEXT


class TestReduce:
    def test_default_budget(self, capsys):
        assert out_of(capsys, ["reduce", "{1,2|0|.}"]) == "{2|0|.}\n"

    def test_truncated_budget_is_flagged(self, capsys):
        args = ["reduce", "--budget", "depth=2,cand=500", "{1,2|0|.}"]
        assert out_of(capsys, args) == "{2|0|.} HEURISTIC\n"


class TestDistinguish:
    def test_witness_line(self, capsys):
        out = out_of(capsys, ["distinguish", "{1|0|.}", "0"])
        assert out == "X=0 class=OUTCOME op(G,X)=L op(H,X)=TIE\n"

    def test_none_when_identical(self, capsys):
        args = ["distinguish", "--budget", "cand=200", "0", "0"]
        assert out_of(capsys, args) == "NONE\n"


class TestGs:
    def test_one_ruleset_for_all_heaps(self, capsys):
        args = ["gs", "--rulesets", "123:1,2,3", "--op", "disj",
                "--heaps", "4,3"]
        assert out_of(capsys, args) == "1\n"

    def test_mixed_rulesets_sequential(self, capsys):
        args = ["gs", "--rulesets", "123:1,2,3,30033:1,0,0,4,5",
                "--op", "seq", "--heaps", "1,4"]
        assert out_of(capsys, args) == "-3\n"

    def test_subtraction_shorthand(self, capsys):
        args = ["gs", "--rulesets", "sub{4,5}", "--op", "disj",
                "--heaps", "13"]
        assert out_of(capsys, args) == "3\n"


class TestGsTable:
    def test_tsv(self, capsys):
        args = ["gs-table", "--rulesets", "123:1,2,3,123:1,2,3",
                "--op", "disj", "--n", "3", "--m", "3"]
        assert out_of(capsys, args) == ("0\t1\t0\t3\n"
                                        "1\t0\t1\t2\n"
                                        "0\t1\t0\t3\n"
                                        "3\t2\t3\t0\n")

    def test_markdown(self, capsys):
        args = ["gs-table", "--rulesets", "123:1,2,3,123:1,2,3",
                "--op", "disj", "--n", "3", "--m", "1", "--format", "md"]
        assert out_of(capsys, args) == ("| m\\n | 0 | 1 | 2 | 3 |\n"
                                        "|---|---|---|---|---|\n"
                                        "| 0 | 0 | 1 | 0 | 3 |\n"
                                        "| 1 | 1 | 0 | 1 | 2 |\n")


class TestPeriod:
    def test_found(self, capsys):
        args = ["period", "--ruleset", "3333:2,2,2,2", "--op", "disj",
                "--max", "30"]
        assert out_of(capsys, args) == "preperiod=0 period=5 block=0,2,2,2,2\n"

    def test_longer_period_than_default_cap(self, capsys):
        # The scan caps preperiod and period at (max+1)//4; covering the
        # {4,5} subtraction game's preperiod 27 needs --max of at least 107.
        base = ["period", "--ruleset", "sub{4,5}", "--op", "disj", "--max"]
        assert out_of(capsys, base + ["30"]) == "NONE\n"
        assert out_of(capsys, base + ["120"]) == \
            "preperiod=27 period=10 block=3,2,1,0,1,2,3,4,5,4\n"


class TestBoards:
    def test_tf(self, capsys):
        assert out_of(capsys, ["tf", "TBF"]) == TBF_TEXT + "\n"

    def test_hack_variants(self, capsys, tmp_path):
        path = tmp_path / "path.hack"
        path.write_text("ground 1\nedge 1 2 R\nedge 2 3 B\n")
        for variant in (1, 2, 3):
            out = out_of(capsys, ["hack", str(path),
                                  "--variant", str(variant)])
            assert out == HACK_PATH_TEXTS[variant] + "\n"


class TestErrors:
    def test_parse_error(self, capsys):
        err = err_of(capsys, ["eval", "{1|0"])
        assert err.startswith("error: parse error at position 4")

    def test_table_needs_two_rulesets(self, capsys):
        args = ["gs-table", "--rulesets", "123:1,2,3", "--op", "disj",
                "--n", "2", "--m", "2"]
        assert err_of(capsys, args) == "error: gs-table needs exactly two rulesets\n"

    def test_bad_budget(self, capsys):
        err = err_of(capsys, ["reduce", "--budget", "junk=1", "{1|0|.}"])
        assert err.startswith("error: bad budget item")

    def test_missing_hack_file(self, capsys):
        err = err_of(capsys, ["hack", "/nonexistent/file.hack"])
        assert err.startswith("error:")


class TestSplitRulesets:
    def test_regroups_point_commas(self):
        assert split_rulesets("123:1,2,3,123:1,2,3") == \
            ["123:1,2,3", "123:1,2,3"]
        assert split_rulesets("sub{4,5}") == ["sub{4,5}"]
        assert split_rulesets("sub{4,5},30033:1,0,0,4,5") == \
            ["sub{4,5}", "30033:1,0,0,4,5"]
        assert split_rulesets("3:1/2") == ["3:1/2"]


class TestRoundTrip:
    def test_canonical_texts(self):
        for text in ("0", "-3/2", "{1|0|.}", "{.|0|-1}",
                     "{{9/2|7/2|4},{9/2|7/2|-5/2}|5/2|{-5/2|-7/2|-3},{4|3|-3}}",
                     NONINVERTIBLE_TEXT):
            assert notation(parse_game(text)) == text

    @settings(max_examples=120, deadline=None)
    @given(games(max_leaves=10))
    def test_parse_inverts_notation(self, g):
        assert parse_game(notation(g)) is g

    def test_whitespace_and_decimals(self):
        assert parse_game(" { 1.5 | 0 | . } ") is parse_game("{3/2|0|.}")
