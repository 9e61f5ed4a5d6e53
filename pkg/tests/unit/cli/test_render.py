from hierarchy_forge.cli import OutputFormat, VerificationSummary, render_equation, render_summary, summary_table
from hierarchy_forge.hierarchy import hierarchy_equation
from hierarchy_forge.spectral import coupled_model
from hierarchy_forge.verification import CheckResult, CheckStatus

SUMMARY = VerificationSummary(
    suite="symmetries",
    results=(
        CheckResult("symmetries", "[K_1, tau_0^1] = 3 H K_0", CheckStatus.PASS),
        CheckResult("symmetries", "tau_0^1 is a symmetry of K_1 with k_j", CheckStatus.REPORTED, "k_0/4"),
    ),
    wall_time=1.23456,
)


def test_summary_counts_every_status():
    # Act & Assert
    assert SUMMARY.passed
    assert SUMMARY.counts() == {"pass": 1, "fail": 0, "reported": 1}
    assert [r.name for r in SUMMARY.with_status(CheckStatus.REPORTED)] == ["tau_0^1 is a symmetry of K_1 with k_j"]


def test_summary_document_includes_timing_only_on_request():
    # Act
    plain = SUMMARY.to_data()
    timed = SUMMARY.to_data(include_timing=True)

    # Assert
    assert "wall_time" not in plain
    assert timed["wall_time"] == 1.235
    assert plain["value"][1] == {
        "suite": "symmetries",
        "name": "tau_0^1 is a symmetry of K_1 with k_j",
        "status": "reported",
        "residual": "k_0/4",
    }


def test_text_summary_ends_with_the_totals():
    # Act
    text = render_summary(SUMMARY, OutputFormat.TEXT, include_timing=True)

    # Assert
    assert text.endswith("symmetries: 1 pass, 0 fail, 1 reported in 1.23s")


def test_latex_summary_escapes_check_names():
    # Act
    latex = render_summary(SUMMARY, OutputFormat.LATEX)

    # Assert
    assert r"\texttt{tau\_0\^{}1 is a symmetry of K\_1 with k\_j}" in latex


def test_rich_table_lists_only_checks_that_did_not_pass():
    # Act
    table = summary_table(SUMMARY)

    # Assert
    assert table.row_count == 1
    assert table.caption == "1 pass, 0 fail, 1 reported"


def test_coupled_equation_text_names_both_components():
    # Arrange
    equation = hierarchy_equation(coupled_model(), 1)

    # Act
    text = render_equation(equation, OutputFormat.TEXT)

    # Assert
    assert text.startswith("u1_t1 = ")
    assert "\nu2_t1 = " in text
    assert "c_2,2" in text
