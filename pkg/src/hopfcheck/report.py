"""Check reports: the uniform result record produced by every verifier."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
PRECONDITION_FAILED = "precondition-failed"

_STATUSES = (PASS, FAIL, PRECONDITION_FAILED)


@dataclass
class CheckReport:
    """Outcome of one named check.

    witnesses holds small, JSON-serializable evidence backing the verdict:
    dimensions, relation residual supports, offending basis indices and the
    like.  elapsed is wall time in seconds, excluded from determinism
    comparisons.
    """

    id: str
    status: str
    witnesses: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def __post_init__(self):
        if self.status not in _STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self, include_elapsed: bool = True) -> dict:
        out = {"id": self.id, "status": self.status, "witnesses": self.witnesses}
        if include_elapsed:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def combine(check_id: str, parts: dict[str, CheckReport]) -> CheckReport:
    """Merge sub-reports (e.g. one per parameter value) into one report.

    The merged status is the worst of the parts: any fail dominates, then any
    precondition failure, else pass.
    """
    status = PASS
    if any(p.status == PRECONDITION_FAILED for p in parts.values()):
        status = PRECONDITION_FAILED
    if any(p.status == FAIL for p in parts.values()):
        status = FAIL
    witnesses = {key: {"status": p.status, **p.witnesses} for key, p in parts.items()}
    return CheckReport(check_id, status, witnesses)
