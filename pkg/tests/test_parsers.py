import pytest
from pytest import mark
from checks import data_path, load_plan_fixture, load_scenario_fixture, read_expected

from neutromaps.algebra import NeutroValue, TieRule
from neutromaps.exceptions import KindMismatchError, NonConvergenceError, ParseError, ScenarioError, UnknownLabelError, ValidationFailed
from neutromaps.models import ComposeOp, Emit, LinkRule, MapKind, RunKind, Side
from neutromaps.parsers import load_valid_matrix, normalise_text, parse_matrix, parse_plan, parse_scenario, parse_table
from neutromaps.parsers.text import content_lines, header, split_list
from neutromaps.runner import run_scenario, with_overrides


def test_normalise_text():
    assert normalise_text("  A\u200b1\t\t0 \ufeff") == "A1 0"
    # full-width forms agree with ASCII
    assert normalise_text("\uff21\uff11") == "A1"


def test_content_lines_skip_comments_and_blanks():
    text = "# heading\n\nkind: cognitive\n   # indented comment\nrows: A B\n"
    assert list(content_lines(text)) == [(3, "kind: cognitive"), (5, "rows: A B")]


def test_header_and_split_list():
    assert header("Rows:  A B") == ("rows", "A B")
    assert header("0 1 I") is None
    assert split_list("0.3, 0.7,1  0.2") == ["0.3", "0.7", "1", "0.2"]


def test_parse_cognitive_matrix():
    m = parse_matrix("kind: cognitive\nrows: A B C\n0 1 I\n0 0 2+I\n-1 0 0\n")
    assert m.kind is MapKind.COGNITIVE
    assert m.col_space == m.row_space
    assert m.entry("A", "C") == NeutroValue(0, 1)
    assert m.entry("B", "C") == NeutroValue(2, 1)
    assert m.entry("C", "A") == NeutroValue(-1, 0)


def test_parse_cognitive_matrix_accepts_matching_cols():
    m = parse_matrix("kind: cognitive\nrows: A B\ncols: A B\n0 1\n0 0\n")
    assert m.shape == (2, 2)


def test_parse_bam_matrix_scale():
    m = parse_matrix("kind: bam\nrows: X1 X2\ncols: Y1\nscale: 5\n3\n-5\n")
    assert m.scale == 5


@mark.parametrize("text, line, message", [
    ("rows: A B\n0 1\n0 0\n", 1, "missing 'kind:'"),
    ("kind: tree\nrows: A\n0\n", 1, "unknown kind"),
    ("kind: cognitive\nrows: A B\n0 1\n", 3, "expected 2 matrix rows"),
    ("kind: cognitive\nrows: A B\n0 1\n0 0 0\n", 4, "expected 2 entries"),
    ("kind: cognitive\nrows: A B\n0 x\n0 0\n", 3, "'x' is not a value token"),
    ("kind: cognitive\nrows: A A\n0 0\n0 0\n", 2, "duplicate label 'A'"),
    ("kind: cognitive\nrows: A B\ncols: B A\n0 1\n0 0\n", 3, "same rows and cols"),
    ("kind: relational\nrows: A B\n0 1\n0 0\n", 1, "missing 'cols:'"),
    ("kind: relational\nrows: A\ncols: B\nscale: 3\n1\n", 4, "only bam matrices"),
    ("kind: cognitive\nrows: A\nshape: 1\n0\n", 3, "unknown header 'shape'"),
    ("kind: cognitive\nkind: cognitive\nrows: A\n0\n", 2, "repeated header 'kind'"),
])
def test_parse_matrix_errors(text, line, message):
    with pytest.raises(ParseError) as error:
        parse_matrix(text, path="m.mat")
    assert error.value.line == line
    assert message in str(error.value)
    assert str(error.value).startswith(f"m.mat:{line}: ")


def test_parse_table():
    table = parse_table("# ages\nP Q\n20-25 5 10 5\n26-30 5 0 15\n")
    assert table.row_labels == ("20-25", "26-30")
    assert table.col_labels == ("P", "Q")
    assert table.intervals.tolist() == [5.0, 5.0]
    assert table.counts.tolist() == [[10.0, 5.0], [0.0, 15.0]]


@mark.parametrize("text, message", [
    ("", "empty table"),
    ("P Q\n", "no data rows"),
    ("P Q\nr1 5 1\n", "expected a label, an interval and 2 counts"),
    ("P Q\nr1 0 1 2\n", "not a positive number"),
    ("P Q\nr1 5 1 -2\n", "not a non-negative integer"),
    ("P Q\nr1 5 1 2\nr1 5 1 2\n", "duplicate row label"),
    ("P P\nr1 5 1 2\n", "duplicate attribute label"),
])
def test_parse_table_errors(text, message):
    with pytest.raises(ParseError) as error:
        parse_table(text)
    assert message in str(error.value)


def test_parse_plan_resolves_blocks():
    plan = load_plan_fixture("disjoint.plan")
    assert plan.kind is MapKind.COGNITIVE
    assert len(plan.blocks) == 3
    assert plan.blocks[1].rows.labels == ("A2", "A3", "A4", "A10")
    assert plan.rows.labels[-1] == "A12"


def test_parse_plan_with_injected_loader():
    blocks = {"first.mat": parse_matrix("kind: relational\nrows: P\ncols: Q R\n1 I\n")}
    plan = parse_plan(
        "kind: relational\nrows: D1 D2\ncols: R1 R2 R3\nclass: D2 | R1 R3\nblock: first.mat\n",
        load=lambda path: blocks[path],
    )
    assert plan.blocks[0].col_labels.labels == ("R1", "R3")
    assert plan.cols.labels == ("R1", "R2", "R3")


@mark.parametrize("text, message", [
    ("kind: cognitive\nrows: A B\nclass: A B\n", "class without a block"),
    ("kind: cognitive\nrows: A B\nblock: x.mat\n", "block without a class"),
    ("rows: A B\nclass: A B\nblock: x.mat\n", "missing 'kind:'"),
    ("kind: relational\nrows: A B\nclass: A | B\nblock: x.mat\n", "missing 'cols:'"),
    ("kind: cognitive\nrows: A B\n", "plan has no blocks"),
    ("kind: cognitive\nrows: A B\nclass: A B\nblock: x.mat\nrows: A\n", "must come before the first class"),
    ("kind: cognitive\nrows: A B\nweight: 2\n", "unknown key 'weight'"),
])
def test_parse_plan_errors(text, message):
    with pytest.raises(ParseError) as error:
        parse_plan(text, load=lambda path: None)
    assert message in str(error.value)


def test_parse_plan_block_kind_must_match():
    relational = parse_matrix("kind: relational\nrows: P\ncols: Q\n1\n")
    with pytest.raises(KindMismatchError):
        parse_plan("kind: cognitive\nrows: A\nclass: A\nblock: x.mat\n", load=lambda path: relational)


def test_parse_fcm_scenario():
    scenario = load_scenario_fixture("expert1.scenario")
    assert scenario.kind is RunKind.FCM
    assert scenario.seed == ("A'1",)
    assert scenario.emits(Emit.TRACE)
    assert not scenario.emits(Emit.SUMMARY)
    assert scenario.matrix.shape == (7, 7)
    assert scenario.max_iters is None


def test_parse_scenario_policy_keys():
    scenario = load_scenario_fixture("twelve_indet_tie.scenario")
    assert scenario.policy.tie is TieRule.INDET
    assert scenario.policy.k_on == 1


def test_parse_scenario_detects_range_seed():
    assert load_scenario_fixture("nrm_range.scenario").side is Side.RANGE
    assert load_scenario_fixture("nrm_domain.scenario").side is Side.DOMAIN


def test_parse_compose_scenarios():
    combined = load_scenario_fixture("experts_combined.scenario")
    assert combined.compose is ComposeOp.COMBINE
    assert len(combined.matrices) == 5
    assert combined.policy.k_on == 3
    linked = load_scenario_fixture("link.scenario")
    assert linked.rule is LinkRule.REAL_FIRST
    assert linked.transpose_b
    assert load_scenario_fixture("overlap.scenario").plan is not None


def test_combine_scenario_defaults_to_combined_policy():
    text = "kind=compose\ncompose=combine\nmatrices=expert1.mat expert2.mat\n"
    scenario = parse_scenario(text, path=data_path("matrices", "scenario"))
    assert scenario.policy.k_on == 2
    assert scenario.policy.k_indet == 2


def test_parse_bam_scenario():
    scenario = load_scenario_fixture("bam.scenario")
    assert scenario.bam_input == (3, 4, -1, -3, -2, 1)
    assert scenario.bam.thresholds_u == (0,) * 6
    assert scenario.bam.thresholds_v == (0,) * 4


def test_parse_cetd_scenario():
    scenario = load_scenario_fixture("cetd_ages3.scenario")
    assert scenario.cetd.alphas == (0.3, 0.7, 1.0)
    assert scenario.cetd.decimals == 2
    assert scenario.table.shape == (3, 6)


def test_irrelevant_key_warns(capsys):
    load_scenario_fixture("ignored_key.scenario")
    assert "Warning: line 4: 'alphas' is ignored by fcm scenarios" in capsys.readouterr().err


def test_fcm_scenario_rejects_indeterminate_matrix():
    with pytest.raises(KindMismatchError):
        load_scenario_fixture("fcm_with_indet.scenario")


def test_scenario_with_invalid_matrix():
    with pytest.raises(ValidationFailed) as error:
        load_scenario_fixture("bad_diagonal.scenario")
    assert error.value.report.codes() == ["diagonal"]


def _matrix_scenario(body):
    return parse_scenario(body, path=data_path("scenarios", "inline.scenario"))


@mark.parametrize("body, error_type, message", [
    ("matrix=../matrices/expert1.mat\n", ParseError, "missing 'kind'"),
    ("kind=fcm\n", ScenarioError, "'matrix' is required"),
    ("kind=fcm\nmatrix=../matrices/expert1.mat\nseed=A'9\n", UnknownLabelError, "A'9"),
    ("kind=fcm\nmatrix=../matrices/expert1.mat\nk_on=0\n", ParseError, "at least 1"),
    ("kind=fcm\nmatrix=../matrices/expert1.mat\ntie=maybe\n", ParseError, "not one of off, indet"),
    ("kind=fcm\nmatrix=../matrices/expert1.mat\nemit=everything\n", ParseError, "cannot emit"),
    ("kind=fcm\nkind=ncm\n", ParseError, "repeated key 'kind'"),
    ("kind=fcm\nspeed=3\n", ParseError, "unknown key 'speed'"),
    ("kind=fcm\nmatrix\n", ParseError, "expected 'key=value'"),
    ("kind=ncm\nmatrix=../matrices/nrm_8x5.mat\n", KindMismatchError, "need a cognitive matrix"),
    ("kind=cetd\ntable=../tables/ages3.txt\n", ScenarioError, "at least one alpha"),
    ("kind=cetd\ntable=../tables/ages3.txt\nalphas=0.5,x\n", ParseError, "'x' in alphas"),
    ("kind=compose\n", ScenarioError, "'compose' is required"),
    ("kind=compose\ncompose=link\nmatrices=../matrices/link_a.mat\n", ParseError, "exactly two matrices"),
    ("kind=bam\nmatrix=../matrices/bam_6x4.mat\ninput=1 2\n", ParseError, "2 activations for 6 neurons"),
    ("kind=bam\nmatrix=../matrices/bam_6x4.mat\ninput=1 2 3 4 5 6\ninitial_v=0 I 0 0\n", ParseError, "0 or 1"),
    ("kind=bam\nmatrix=../matrices/bam_6x4.mat\ninput=1 2 3 4 5 6\nthresholds_v=1 2\n", ParseError, "2 thresholds"),
    ("kind=nrm\nmatrix=../matrices/nrm_8x5.mat\nseed=D1\nside=range\n", UnknownLabelError, "D1"),
])
def test_scenario_errors(body, error_type, message):
    with pytest.raises(error_type) as error:
        _matrix_scenario(body)
    assert message in str(error.value)


def test_max_iters_key():
    scenario = _matrix_scenario("kind=fcm\nmatrix=../matrices/expert1.mat\nmax_iters=5\n")
    assert scenario.max_iters == 5


def test_scenario_with_invalid_compose_matrix(tmp_path):
    bad = data_path("matrices", "bad_diagonal.mat")
    with pytest.raises(ValidationFailed) as error:
        parse_scenario(f"kind=compose\ncompose=combine\nmatrices={bad} {bad}\n", str(tmp_path / "inline.scenario"))
    assert error.value.report.codes() == ["diagonal"]


def test_load_valid_matrix_rejects_violations():
    with pytest.raises(ValidationFailed) as error:
        load_valid_matrix(data_path("matrices", "bad_diagonal.mat"))
    assert str(error.value).startswith("1 violation(s) in ")
    assert load_valid_matrix(data_path("matrices", "expert1.mat")).kind is MapKind.COGNITIVE


def test_cetd_scenario_defaults_to_two_decimals(tmp_path):
    table = data_path("tables", "ages3.txt")
    scenario = parse_scenario(f"kind=cetd\ntable={table}\nalphas=0.3,0.7,1\n", str(tmp_path / "inline.scenario"))
    assert scenario.cetd.decimals == 2


@mark.parametrize("max_iters", [0, -1])
def test_max_iters_override_must_be_positive(max_iters):
    with pytest.raises(ScenarioError, match="max_iters must be at least 1"):
        with_overrides(load_scenario_fixture("expert1.scenario"), max_iters=max_iters)


def test_unset_max_iters_takes_the_default():
    scenario = load_scenario_fixture("expert1.scenario")
    assert scenario.max_iters is None
    assert run_scenario(scenario) == read_expected("expert1.txt")
    # three steps reach the fixed point
    with pytest.raises(NonConvergenceError):
        run_scenario(with_overrides(scenario, max_iters=2))
