"""Result type shared by the verification helpers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    """Outcome of one verification; truthy when it passed."""

    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed
