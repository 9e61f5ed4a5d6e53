"""Text, LaTeX and JSON renderings of generated hierarchies, structure tables and summaries."""

from __future__ import annotations

from typing import TYPE_CHECKING

import sympy
from rich.table import Table
from tabulate import tabulate

from hierarchy_forge.cli.config import OutputFormat
from hierarchy_forge.cli.serialization import document, dumps, equation_document
from hierarchy_forge.diffpoly import format_latex, format_text
from hierarchy_forge.liealg import structure_constants
from hierarchy_forge.verification import CheckStatus

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.cli.summary import VerificationSummary
    from hierarchy_forge.hierarchy import HierarchyEquation
    from hierarchy_forge.liealg import StructureReport

_STATUS_STYLE = {
    CheckStatus.PASS: "[bold green]pass[/bold green]",
    CheckStatus.FAIL: "[bold red]FAIL[/bold red]",
    CheckStatus.REPORTED: "[bold yellow]reported[/bold yellow]",
}


def _coefficient_name(letter: str, k: int, m: int, *, indexed: bool) -> str:
    return f"{letter}_{k},{m}" if indexed else f"{letter}_{m}"


def _component_name(k: int, *, indexed: bool) -> str:
    return f"u{k}" if indexed else "u"


def render_equation(equation: HierarchyEquation, output_format: OutputFormat) -> str:
    if output_format is OutputFormat.JSON:
        return dumps(equation_document(equation))
    indexed = equation.n_components > 1
    entries = equation.table.entries()
    if output_format is OutputFormat.LATEX:
        lines = [
            f"{_component_name(k, indexed=indexed)}_{{t_{{{equation.order}}}}} &= "
            f"{format_latex(value, indexed=indexed)}"
            for k, value in enumerate(equation.rhs, start=1)
        ]
        lines.extend(
            f"{letter}_{{{f'{k},{m}' if indexed else m}}} &= {format_latex(value, indexed=indexed)}"
            for letter, k, m, value in entries
        )
        body = " \\\\\n".join(lines)
        return f"\\begin{{align*}}\n{body}\n\\end{{align*}}"
    rows = [
        [_coefficient_name(letter, k, m, indexed=indexed), format_text(value, indexed=indexed)]
        for letter, k, m, value in entries
    ]
    table = tabulate(rows, headers=["coefficient", "value"], tablefmt="simple")
    return f"{equation.to_text()}\n\n{table}"


def _bracket_expression(labels: tuple[str, ...], coefficients: tuple[sympy.Expr, ...]) -> sympy.Expr:
    return sympy.Add(*(c * sympy.Symbol(label) for c, label in zip(coefficients, labels)))


def render_structure(report: StructureReport, output_format: OutputFormat) -> str:
    basis = report.basis
    labels = basis.labels
    table = structure_constants(report)
    pairs = [(i, j) for i in range(1, len(labels) + 1) for j in range(i + 1, len(labels) + 1)]
    if output_format is OutputFormat.JSON:
        brackets = [
            {
                "left": labels[i - 1],
                "right": labels[j - 1],
                "value": {label: str(c) for label, c in zip(labels, table[(i, j)]) if c != 0},
            }
            for i, j in pairs
        ]
        return dumps(
            document(
                "structure",
                brackets,
                case=basis.case.value,
                blocks=basis.n_blocks,
                labels=list(labels),
            ),
        )
    if output_format is OutputFormat.LATEX:
        symbols = [sympy.latex(sympy.Symbol(label)) for label in labels]
        rows = [
            f"[{symbols[i - 1]}, {symbols[j - 1]}] &= {sympy.latex(_bracket_expression(labels, table[(i, j)]))}"
            for i, j in pairs
        ]
        body = " \\\\\n".join(rows)
        return f"\\begin{{align*}}\n{body}\n\\end{{align*}}"
    rows_text = [
        [f"[{labels[i - 1]}, {labels[j - 1]}]", str(_bracket_expression(labels, table[(i, j)]))]
        for i, j in pairs
    ]
    return tabulate(rows_text, headers=["bracket", "value"], tablefmt="simple")


def render_summary(
    summary: VerificationSummary,
    output_format: OutputFormat,
    *,
    include_timing: bool = False,
) -> str:
    if output_format is OutputFormat.JSON:
        return dumps(summary.to_data(include_timing=include_timing))
    counts = summary.counts()
    if output_format is OutputFormat.LATEX:
        rows = [
            f"{r.status.value} & \\texttt{{{_latex_escape(r.name)}}} \\\\"
            for r in summary.results
        ]
        body = "\n".join(rows)
        return f"\\begin{{tabular}}{{ll}}\n{body}\n\\end{{tabular}}"
    rows_text = [[r.status.value, r.name, r.residual] for r in summary.results]
    table = tabulate(rows_text, headers=["status", "check", "residual"], tablefmt="simple")
    totals = ", ".join(f"{count} {status}" for status, count in counts.items())
    footer = f"{summary.suite}: {totals}"
    if include_timing and summary.wall_time is not None:
        footer += f" in {summary.wall_time:.2f}s"
    return f"{table}\n\n{footer}"


_LATEX_SPECIALS = str.maketrans(
    {
        "\\": r"\textbackslash{}",
        "^": r"\^{}",
        **{char: f"\\{char}" for char in "_{}&%#$"},
    },
)


def _latex_escape(text: str) -> str:
    return text.translate(_LATEX_SPECIALS)


def summary_table(summary: VerificationSummary) -> Table:
    """Rich table of the checks that did not pass, for the console."""
    table = Table(show_header=True, header_style="bold magenta", title=f"Suite {summary.suite}")
    table.add_column("Status", justify="center")
    table.add_column("Check", style="dim")
    table.add_column("Residual")
    for result in summary.results:
        if result.status is CheckStatus.PASS:
            continue
        table.add_row(_STATUS_STYLE[result.status], result.name, result.residual)
    counts = summary.counts()
    table.caption = ", ".join(f"{count} {status}" for status, count in counts.items())
    return table
