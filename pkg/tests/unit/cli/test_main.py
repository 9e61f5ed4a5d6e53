import json
from unittest.mock import patch

import pytest
from click.testing import CliRunner

from hierarchy_forge.cli import cli, equation_flow, load_document
from hierarchy_forge.diffpoly import format_latex
from hierarchy_forge.hierarchy import hierarchy_equation
from hierarchy_forge.spectral import coupled_model, kdv_model
from hierarchy_forge.verification import (
    CheckResult,
    CheckStatus,
    VerificationLog,
    VerificationOutcome,
    VerificationRunner,
    VerificationSuite,
)


def invoke(*args):
    return CliRunner().invoke(cli, ["--quiet", *args])


def test_gen_prints_the_scalar_first_flow():
    # Arrange
    expected = hierarchy_equation(kdv_model(), 1).to_text()

    # Act
    result = invoke("gen", "--model", "kdv", "--order", "1")

    # Assert
    assert result.exit_code == 0, result.output
    assert result.output.startswith(expected)
    assert "coefficient" in result.output


def test_gen_json_round_trips_the_flow():
    # Arrange
    expected = hierarchy_equation(coupled_model(), 1).rhs

    # Act
    result = invoke("gen", "--model", "coupled", "--order", "1", "--format", "json")

    # Assert
    assert result.exit_code == 0, result.output
    data = load_document(result.output)
    assert data["model"] == "coupled"
    assert equation_flow(data) == expected


def test_one_component_multi_model_reproduces_kdv():
    # Act
    multi = invoke("gen", "--model", "multi", "--N", "1", "--param", "beta1=alpha", "--format", "json")
    scalar = invoke("gen", "--model", "kdv", "--format", "json")

    # Assert
    assert multi.exit_code == 0, multi.output
    assert scalar.exit_code == 0, scalar.output
    assert equation_flow(json.loads(multi.output)).equivalent(equation_flow(json.loads(scalar.output)))


def test_gen_output_is_byte_identical_across_runs():
    # Act
    first = invoke("gen", "--model", "coupled", "--order", "2", "--format", "json")
    second = invoke("gen", "--model", "coupled", "--order", "2", "--format", "json")

    # Assert
    assert first.exit_code == 0, first.output
    assert first.output == second.output


def test_gen_latex_uses_the_canonical_rendering():
    # Arrange
    flow = hierarchy_equation(kdv_model(isospectral=True), 1).rhs

    # Act
    result = invoke("gen", "--model", "kdv", "--iso", "--format", "latex")

    # Assert
    assert result.exit_code == 0, result.output
    assert result.output.startswith("\\begin{align*}")
    assert format_latex(flow[0], indexed=False) in result.output


def test_gen_writes_to_the_output_file(tmp_path):
    # Arrange
    target = tmp_path / "kdv.txt"

    # Act
    result = invoke("gen", "--model", "kdv", "--out", str(target))

    # Assert
    assert result.exit_code == 0, result.output
    assert target.read_text(encoding="utf-8").startswith("u_t1 = ")


@pytest.mark.parametrize(
    ("args", "message"),
    [
        (["gen", "--model", "multi"], "needs --N"),
        (["gen", "--model", "kdv", "--N", "2"], "N=1"),
        (["gen", "--order", "-1"], "nonnegative"),
        (["gen", "--model", "kdv", "--epsilon", "2"], "epsilon"),
        (["gen", "--param", "alpha"], "NAME=VALUE"),
        (["gen", "--model", "hopf"], "hopf"),
        (["verify", "zero-curvature", "--model", "multi"], "needs --N"),
        (["table", "--case", "A1N"], "explicit number of blocks"),
    ],
    ids=[
        "multi-without-n",
        "kdv-with-two-components",
        "negative-order",
        "kdv-has-no-epsilon",
        "bad-binding",
        "unknown-model",
        "verify-multi-without-n",
        "indexed-case-without-n",
    ],
)
def test_bad_configuration_exits_with_code_2(args, message):
    # Act
    result = invoke(*args)

    # Assert
    assert result.exit_code == 2
    assert message in result.output


@patch.dict("os.environ", {"HIERARCHY_FORGE_MAX_ORDER": "1"})
def test_order_above_the_environment_cap_exits_with_code_2():
    # Act
    result = invoke("gen", "--order", "2")

    # Assert
    assert result.exit_code == 2
    assert "exceeds the limit 1" in result.output


def test_verify_case_one_structure_constants():
    # Act
    result = invoke("verify", "lie-algebra", "--case", "A12", "--format", "json")

    # Assert
    assert result.exit_code == 0, result.output
    data = load_document(result.output)
    assert data["kind"] == "verification"
    assert data["passed"]
    assert data["counts"]["fail"] == 0
    assert len(data["value"]) == 15 + 15 + 1
    assert "wall_time" not in data


def test_verify_symmetric_case_lists_the_published_sign_without_failing():
    # Act
    result = invoke("verify", "lie-algebra", "--case", "A22", "--format", "json")

    # Assert
    assert result.exit_code == 0, result.output
    data = load_document(result.output)
    assert data["passed"]
    assert data["counts"] == {"pass": 27, "fail": 0, "reported": 4}


def test_verify_summary_is_stable_unless_timed():
    # Act
    first = invoke("verify", "lie-algebra", "--case", "A12", "--format", "json")
    second = invoke("verify", "lie-algebra", "--case", "A12", "--format", "json")
    timed = invoke("verify", "lie-algebra", "--case", "A12", "--format", "json", "--timing")

    # Assert
    assert first.output == second.output
    assert "wall_time" in json.loads(timed.output)


def test_verify_zero_curvature_of_the_coupled_model():
    # Act
    result = invoke("verify", "zero-curvature", "--model", "coupled", "--order", "2")

    # Assert
    assert result.exit_code == 0, result.output
    assert "coupled zero curvature at n=2" in result.output
    assert "zero-curvature: " in result.output


def test_verify_symmetry_table():
    # Act
    result = invoke("verify", "symmetries", "--max", "1", "--format", "json")

    # Assert
    assert result.exit_code == 0, result.output
    assert load_document(result.output)["counts"]["fail"] == 0


def _outcome(*statuses):
    results = tuple(
        CheckResult(suite="lie-algebra", name=f"check {i}", status=status, residual="u")
        for i, status in enumerate(statuses)
    )
    return VerificationOutcome(suite=VerificationSuite.LIE_ALGEBRA, results=results, log=VerificationLog())


@pytest.mark.parametrize(
    ("statuses", "exit_code"),
    [
        ((CheckStatus.PASS, CheckStatus.FAIL), 1),
        ((CheckStatus.PASS, CheckStatus.REPORTED), 0),
    ],
    ids=["hard-failure", "reported-only"],
)
def test_verify_exit_code_follows_hard_failures(statuses, exit_code):
    # Arrange
    with patch.object(VerificationRunner, "run", return_value=_outcome(*statuses)):
        # Act
        result = invoke("verify", "lie-algebra")

    # Assert
    assert result.exit_code == exit_code
    assert "check 1" in result.output


def test_verify_writes_the_summary_file(tmp_path):
    # Arrange
    target = tmp_path / "summary.json"

    # Act
    with patch.object(VerificationRunner, "run", return_value=_outcome(CheckStatus.REPORTED)):
        result = invoke("verify", "lie-algebra", "--format", "json", "--out", str(target))

    # Assert
    assert result.exit_code == 0, result.output
    data = load_document(target.read_text(encoding="utf-8"))
    assert data["counts"] == {"pass": 0, "fail": 0, "reported": 1}


def test_table_lists_every_bracket():
    # Act
    text = invoke("table", "--case", "A12")
    data = invoke("table", "--case", "A12", "--format", "json")

    # Assert
    assert text.exit_code == 0, text.output
    assert "bracket" in text.output
    document = load_document(data.output)
    assert document["kind"] == "structure"
    assert len(document["value"]) == 15


def test_table_of_an_indexed_case():
    # Act
    result = invoke("table", "--case", "A1N", "--N", "3", "--format", "latex")

    # Assert
    assert result.exit_code == 0, result.output
    assert result.output.startswith("\\begin{align*}")
