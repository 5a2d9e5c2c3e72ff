"""
Observability for the tiling census.
Records counting and oracle events, timings and warnings; echoes them to
stderr so standard output stays reserved for results.
"""

from rich.console import Console
from rich.table import Table
from datetime import datetime
from typing import Optional
import time
import json
from pathlib import Path

console = Console(stderr=True)


class RunTracker:
    """
    Tracks events of one CLI run for observability and debugging.
    """

    def __init__(self, run_id: str, verbose: bool = False):
        if not run_id.startswith("run_"):
            self.run_id = f"run_{run_id}"
        else:
            self.run_id = run_id
        self.verbose = verbose
        self.metrics = {
            "run_id": self.run_id,
            "start_time": datetime.now().isoformat(),
            "events": [],
            "errors": [],
            "warnings": [],
            "performance": {},
        }
        self.timers = {}

    def start_timer(self, name: str):
        """Start timing an operation"""
        self.timers[name] = time.perf_counter()

    def end_timer(self, name: str) -> float:
        """End timing and return duration"""
        if name in self.timers:
            duration = time.perf_counter() - self.timers.pop(name)
            self.metrics["performance"][name] = f"{duration:.3f}s"
            return duration
        return 0.0

    def log_event(
        self,
        component: str,
        status: str,
        details: Optional[str] = None,
        duration: Optional[float] = None,
    ):
        """Record a component event (started, completed, skipped, failed)"""
        entry = {
            "component": component,
            "status": status,
            "timestamp": datetime.now().isoformat(),
        }
        if details:
            entry["details"] = details
        if duration is not None:
            entry["duration"] = f"{duration:.3f}s"

        self.metrics["events"].append(entry)

        if self.verbose:
            status_emoji = {
                "started": "▶️",
                "completed": "✅",
                "skipped": "⏭️",
                "failed": "❌",
            }.get(status, "ℹ️")
            duration_str = f" ({duration:.3f}s)" if duration is not None else ""
            console.print(f"[cyan]{status_emoji} {component}: {status}{duration_str}[/cyan]")
            if details:
                console.print(f"[dim]  → {details}[/dim]")

    def log_error(self, error: str, context: Optional[str] = None):
        """Log an error"""
        entry = {"error": error, "timestamp": datetime.now().isoformat()}
        if context:
            entry["context"] = context

        self.metrics["errors"].append(entry)
        console.print(f"[red]❌ Error: {error}[/red]")

    def log_warning(self, warning: str, context: Optional[str] = None):
        """Log a warning"""
        entry = {"warning": warning, "timestamp": datetime.now().isoformat()}
        if context:
            entry["context"] = context

        self.metrics["warnings"].append(entry)
        console.print(f"[yellow]⚠️  {warning}[/yellow]")

    def display_summary(self):
        """Display run summary"""
        table = Table(title="🔍 Run Metrics", show_header=True)
        table.add_column("Metric", style="cyan")
        table.add_column("Value", style="green")

        completed = [e for e in self.metrics["events"] if e["status"] == "completed"]
        table.add_row("Run ID", self.run_id)
        table.add_row("Events", str(len(self.metrics["events"])))
        table.add_row("Completed", str(len(completed)))
        table.add_row("Errors", str(len(self.metrics["errors"])))
        table.add_row("Warnings", str(len(self.metrics["warnings"])))

        for key, value in self.metrics["performance"].items():
            table.add_row(f"⏱️  {key}", value)

        console.print(table)

    def save_metrics(self, output_dir: str = "logs") -> Path:
        """Save metrics to a JSON file and return its path"""
        log_dir = Path(output_dir)
        log_dir.mkdir(parents=True, exist_ok=True)

        log_file = log_dir / f"metrics_{self.run_id}.json"
        self.metrics["end_time"] = datetime.now().isoformat()

        with open(log_file, "w") as f:
            json.dump(self.metrics, f, indent=2)

        if self.verbose:
            console.print(f"[green]📊 Metrics saved to: {log_file}[/green]")
        return log_file


# Global tracker instance
_current_tracker: Optional[RunTracker] = None


def get_tracker(run_id: Optional[str] = None) -> RunTracker:
    """Get or create the run tracker"""
    global _current_tracker
    if _current_tracker is None:
        from src.config import Config

        rid = run_id or datetime.now().strftime("%Y%m%d_%H%M%S")
        _current_tracker = RunTracker(rid, verbose=Config.is_verbose())
    return _current_tracker


def reset_tracker():
    """Reset the global tracker"""
    global _current_tracker
    _current_tracker = None
