"""Report documents: metadata, rows, verdicts; JSON and CSV writers."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass
class Verdict:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ReportDocument:
    experiment: str
    parameters: dict[str, Any]
    version: str
    timestamp: str | None
    rows: list[dict[str, Any]] = field(default_factory=list)
    verdicts: list[Verdict] = field(default_factory=list)

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.verdicts.append(Verdict(name, bool(passed), detail))
        return bool(passed)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def to_dict(self) -> dict[str, Any]:
        return {
            "metadata": {
                "experiment": self.experiment,
                "parameters": self.parameters,
                "version": self.version,
                "timestamp": self.timestamp,
            },
            "rows": self.rows,
            "verdicts": [asdict(v) for v in self.verdicts],
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ReportDocument":
        meta = data["metadata"]
        return cls(
            experiment=meta["experiment"],
            parameters=meta["parameters"],
            version=meta["version"],
            timestamp=meta["timestamp"],
            rows=data["rows"],
            verdicts=[Verdict(**v) for v in data["verdicts"]],
        )

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))


def rows_to_csv(rows: list[dict[str, Any]]) -> str:
    keys: list[str] = []
    for row in rows:
        for k in row:
            if k not in keys:
                keys.append(k)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(keys)
    for row in rows:
        writer.writerow(
            [json.dumps(row[k], sort_keys=True) if isinstance(row.get(k), (list, dict)) else row.get(k, "") for k in keys]
        )
    return buf.getvalue()


def matrix_to_csv(labels: list[str], matrix: list[list[int]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + labels)
    for label, row in zip(labels, matrix):
        writer.writerow([label] + row)
    return buf.getvalue()
