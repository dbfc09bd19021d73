from __future__ import annotations

import json
from dataclasses import asdict, dataclass


@dataclass
class Report:
    check_id: str
    order: int
    status: str  # "pass" | "fail"
    first_failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    @classmethod
    def of(cls, check_id: str, order: int, failure: str | None) -> Report:
        return cls(check_id, order, "pass" if failure is None else "fail", failure)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)
