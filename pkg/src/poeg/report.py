"""Run reports: deterministic JSON and plain-text rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class RunReport:
    command: list[str]
    group: str | None
    results: object
    tallies: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def to_dict(self, wall_time: bool = True) -> dict:
        out = {
            "command": list(self.command),
            "group": self.group,
            "results": self.results,
            "tallies": dict(self.tallies),
        }
        if wall_time:
            out["wall_time"] = round(self.wall_time, 6)
        return out

    def to_json(self, wall_time: bool = True) -> str:
        return json.dumps(self.to_dict(wall_time), sort_keys=True, indent=2, default=_default)

    def to_text(self) -> str:
        lines = [f"command: {' '.join(self.command)}"]
        if self.group is not None:
            lines.append(f"group: {self.group}")
        lines.extend(_text_lines(self.results))
        for k in sorted(self.tallies):
            lines.append(f"{k}: {self.tallies[k]}")
        lines.append(f"wall_time: {self.wall_time:.3f}s")
        return "\n".join(lines) + "\n"


def _default(obj):
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if hasattr(obj, "item"):
        return obj.item()
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _fmt(value) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (set, frozenset)):
        value = sorted(value)
    return json.dumps(value, default=_default) if isinstance(value, (list, tuple, dict)) else str(value)


def _text_lines(results) -> list[str]:
    if isinstance(results, dict):
        return [f"{k}: {_fmt(results[k])}" for k in sorted(results)]
    if isinstance(results, list):
        return [_fmt(r) for r in results]
    return [_fmt(results)]
