"""Reports: a versioned envelope around named results, emitted as JSON,
markdown or plain text. Output is byte-stable for fixed inputs."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

from . import __version__

CERTIFIED = "certified"
REFUTED = "refuted"
UNKNOWN = "unknown"
DECIDED = "decided"
NO_OP = "no-op"
VERDICTS = (CERTIFIED, REFUTED, UNKNOWN, DECIDED, NO_OP)

EXIT_CODES = {CERTIFIED: 0, DECIDED: 0, NO_OP: 0, REFUTED: 1, UNKNOWN: 2}
EXIT_INPUT_ERROR = 3


def _plain_data(x: Any) -> Any:
    # tuples, Fractions etc. collapse to JSON-native values
    return json.loads(json.dumps(x, default=str))


@dataclass
class Report:
    command: list
    results: list = field(default_factory=list)
    verdict: Optional[str] = None
    version: str = __version__
    timestamp: Optional[str] = None

    def __post_init__(self):
        self.command = [str(a) for a in self.command]
        self.results = [{"name": str(r["name"]), "data": _plain_data(r["data"])} for r in self.results]
        if self.verdict is None:
            self.verdict = NO_OP if not self.results else DECIDED
        if self.verdict not in VERDICTS:
            raise ValueError(f"bad verdict {self.verdict!r}")
        if not self.results and self.verdict != NO_OP:
            raise ValueError("empty report must have verdict no-op")

    def add(self, name: str, data: Any) -> None:
        self.results.append({"name": name, "data": _plain_data(data)})

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict]

    def to_json(self) -> dict:
        out = {
            "tool": "k3cert",
            "version": self.version,
            "command": self.command,
            "results": self.results,
            "verdict": self.verdict,
        }
        if self.timestamp is not None:
            out["timestamp"] = self.timestamp
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Report":
        return cls(
            command=data["command"],
            results=data["results"],
            verdict=data["verdict"],
            version=data["version"],
            timestamp=data.get("timestamp"),
        )


def _cell(x: Any) -> str:
    if isinstance(x, (dict, list)):
        return "`" + json.dumps(x, sort_keys=True, separators=(",", ":")) + "`"
    if x is None:
        return ""
    return str(x).replace("|", "\\|")


def _md_table(rows: list) -> list[str]:
    keys = sorted({k for row in rows for k in row}, key=lambda k: (k != "name", k))
    lines = ["| " + " | ".join(keys) + " |", "|" + "---|" * len(keys)]
    for row in rows:
        lines.append("| " + " | ".join(_cell(row.get(k)) for k in keys) + " |")
    return lines


def _markdown(report: Report) -> str:
    lines = [f"# k3cert {' '.join(report.command)}", ""]
    lines.append(f"- version: {report.version}")
    lines.append(f"- verdict: **{report.verdict}**")
    if report.timestamp is not None:
        lines.append(f"- timestamp: {report.timestamp}")
    for res in report.results:
        lines += ["", f"## {res['name']}", ""]
        data = res["data"]
        if isinstance(data, list) and data and all(isinstance(r, dict) for r in data):
            lines += _md_table(data)
        elif isinstance(data, dict):
            lines += ["| key | value |", "|---|---|"]
            lines += [f"| {k} | {_cell(data[k])} |" for k in sorted(data)]
        else:
            lines.append(_cell(data))
    return "\n".join(lines) + "\n"


def _plain(report: Report) -> str:
    res = report.results
    if len(res) == 1 and not isinstance(res[0]["data"], (dict, list)):
        return f"{res[0]['data']}\n"
    lines = []
    for r in res:
        data = r["data"]
        if isinstance(data, dict):
            lines.append(f"{r['name']}:")
            lines += [f"  {k}: {json.dumps(data[k], sort_keys=True)}" for k in sorted(data)]
        else:
            lines.append(f"{r['name']}: {json.dumps(data, sort_keys=True)}")
    lines.append(f"verdict: {report.verdict}")
    return "\n".join(lines) + "\n"


def emit_report(report: Report, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report.to_json(), sort_keys=True, indent=2) + "\n"
    if fmt == "markdown":
        return _markdown(report)
    if fmt == "plain":
        return _plain(report)
    raise ValueError(f"unknown format {fmt!r}")


def parse_report(text: str) -> Report:
    return Report.from_json(json.loads(text))
