"""Pass/fail bookkeeping shared by the verifiers and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckEntry:
    name: str
    ok: bool
    witness: str | None = None  # first failing tuple / offending value, if any

    def line(self) -> str:
        status = "pass" if self.ok else "FAIL"
        out = f"{status}  {self.name}"
        if self.witness and not self.ok:
            out += f"  [{self.witness}]"
        return out


@dataclass
class CheckReport:
    title: str
    entries: list[CheckEntry] = field(default_factory=list)

    def add(self, name: str, ok: bool, witness: str | None = None):
        self.entries.append(CheckEntry(name, bool(ok), witness))
        return ok

    def extend(self, other: "CheckReport"):
        self.entries.extend(other.entries)

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def failures(self) -> list[CheckEntry]:
        return [e for e in self.entries if not e.ok]

    def lines(self) -> list[str]:
        return [f"== {self.title}"] + [e.line() for e in self.entries]

    def __str__(self) -> str:
        return "\n".join(self.lines())
