"""Run statistics and the line-oriented event trace."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class DegreeRecord:
    degree: int
    rows: int = 0
    cols: int = 0
    new_entries: int = 0
    zero_rows: int = 0


@dataclass
class Stats:
    pairs_created: int = 0
    pairs_kept: int = 0
    pairs_rejected_f5: int = 0
    pairs_rejected_rewritable_update: int = 0
    pairs_rejected_rewritable_spoly: int = 0
    reductors_rejected: int = 0
    zero_reductions: int = 0
    row_operations: int = 0
    signature_violations: int = 0
    degrees: list[DegreeRecord] = field(default_factory=list)

    def conservation_holds(self) -> bool:
        rejected = self.pairs_rejected_f5 + self.pairs_rejected_rewritable_update
        return self.pairs_created == self.pairs_kept + rejected


class Trace:
    """Collects ``EVENT key=value ...`` lines with a fixed field order per event."""

    def __init__(self):
        self.lines: list[str] = []

    def emit(self, event: str, **fields) -> None:
        body = " ".join(f"{k}={v}" for k, v in fields.items())
        self.lines.append(f"{event} {body}" if body else event)

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines)
