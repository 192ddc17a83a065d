from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from ..config import settings
from ..models.report import IdentityTrialResult, ScanResult
from ..utils.helpers import format_fraction


class VerifierDashboard:
    """Terminal formatting for scan and identity results"""

    def __init__(self, console: Console = None):
        self.console = console or Console()

    def _fmt(self, value, exact: bool) -> str:
        return format_fraction(value) if exact else f"{float(value):.6e}"

    def display_scan(self, result: ScanResult, max_rows: int = 50) -> None:
        """
        Display a scan summary panel and the first cells as a table
        :param result: ScanResult to render
        :param max_rows: number of cells to list (the summary covers all of them)
        """
        exact = result.mode == "exact"
        tolerance = 0.0 if exact else settings.FLOAT_TOLERANCE
        if result.min_gap4 is not None:
            minimum = (
                f"{self._fmt(result.min_gap4.value, exact)} at "
                f"({format_fraction(result.min_gap4.x)}, {format_fraction(result.min_gap4.y)})"
            )
        else:
            minimum = "N/A"

        if not result.convex_input:
            verdict = "[yellow]input not convex, no verdict claimed[/yellow]"
        elif result.passes(tolerance):
            verdict = "[green]min gap4 >= 0[/green]"
        else:
            verdict = "[red]FAILED[/red]"

        content = f"""
[bold]Function:[/bold] {result.function} | [bold]n:[/bold] {result.n} | [bold]Grid:[/bold] {result.grid} | [bold]Mode:[/bold] {result.mode}
[bold]Cells:[/bold] {result.total_cells} | [bold]Equality cells:[/bold] {result.equality_cells}
[bold]Min gap4:[/bold] {minimum}
[bold]Verdict:[/bold] {verdict}
"""
        if result.violations:
            content += f"[red]Violations: {len(result.violations)} (first: {result.violations[0]})[/red]\n"

        self.console.print(Panel(
            content,
            title="[bold blue]BERNSTEIN GAP SCAN[/bold blue]",
            border_style="blue",
            padding=(1, 1),
        ))

        table = Table(show_header=True, header_style="bold magenta", border_style="cyan")
        for column in ("x", "y", "gap1", "gap2", "gap3", "gap4", "residual"):
            table.add_column(column, justify="right")
        for cell in result.cells[:max_rows]:
            gap4_style = "red" if cell.gap4 < -tolerance else "green"
            table.add_row(
                format_fraction(cell.x),
                format_fraction(cell.y),
                self._fmt(cell.gap1, exact),
                self._fmt(cell.gap2, exact),
                self._fmt(cell.gap3, exact),
                f"[{gap4_style}]{self._fmt(cell.gap4, exact)}[/{gap4_style}]",
                self._fmt(cell.identity_residual, exact),
            )
        self.console.print(table)
        if result.total_cells > max_rows:
            self.console.print(f"[dim]... {result.total_cells - max_rows} more cells[/dim]")

    def display_identity(self, result: IdentityTrialResult) -> None:
        style = "green" if result.ok else "red"
        self.console.print(
            f"[{style}]n={result.n} seed={result.seed}: max |residual| = "
            f"{format_fraction(result.max_abs_residual)}[/{style}]"
        )
        failure = result.first_failure
        if failure is not None:
            self.console.print(
                f"[red]first failure: trial {failure.trial}, x={format_fraction(failure.x)}, "
                f"y={format_fraction(failure.y)}, samples={failure.samples}, "
                f"residual={format_fraction(failure.residual)}[/red]"
            )
