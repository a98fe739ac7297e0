"""Check reports: named lists of failed equations, empty iff everything held."""

from __future__ import annotations

__all__ = ["Report"]


class Report:
    """Accumulates failure messages from an axiom or consistency check.

    A report with no entries means the check passed.  Reports render to
    deterministic plain text, one failure per line.
    """

    def __init__(self, title: str):
        self.title = title
        self.entries: list[str] = []

    @property
    def ok(self) -> bool:
        return not self.entries

    def fail(self, message: str) -> None:
        self.entries.append(message)

    def merge(self, other: "Report", prefix: str = "") -> None:
        for entry in other.entries:
            self.entries.append(prefix + entry)

    def render(self) -> str:
        if self.ok:
            return f"{self.title}: ok"
        lines = [f"{self.title}: {len(self.entries)} violation(s)"]
        lines.extend("  " + e for e in self.entries)
        return "\n".join(lines)

    def __repr__(self) -> str:
        state = "ok" if self.ok else f"{len(self.entries)} violations"
        return f"Report({self.title!r}, {state})"
