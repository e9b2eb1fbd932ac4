"""Machine-readable check reports and run configuration."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
INDETERMINATE = "indeterminate"
SKIPPED = "skipped"

_STATUSES = (PASS, FAIL, INDETERMINATE, SKIPPED)

DEFAULT_SEED = 20230915


@dataclass
class CheckReport:
    """Verdict of one verification with structured witnesses.

    ``duration_ms`` is informational only and never serialized: bundles must
    be byte-identical across runs with the same config and seed.
    """

    check_id: str
    subject: str
    status: str
    witnesses: list = field(default_factory=list)
    notes: str = ""
    duration_ms: float = 0.0

    def __post_init__(self) -> None:
        if self.status not in _STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status in (FAIL, INDETERMINATE) and not (self.witnesses or self.notes):
            raise ValueError(f"{self.status} report needs witnesses or notes")

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "subject": self.subject,
            "status": self.status,
            "witnesses": self.witnesses,
            "notes": self.notes,
        }


@dataclass(frozen=True)
class RunConfig:
    max_rank: int = 7
    primes_plucker: tuple[int, ...] = (5, 7)
    primes_segre: tuple[int, ...] = (2, 3)
    fmt: str = "json"
    seed: int = DEFAULT_SEED

    def __post_init__(self) -> None:
        if self.max_rank < 4:
            raise ValueError("max_rank must be at least 4")
        for p in tuple(self.primes_plucker) + tuple(self.primes_segre):
            if not _is_prime(p):
                raise ValueError(f"{p} is not prime")
        if self.fmt not in ("json", "markdown"):
            raise ValueError(f"unknown output format {self.fmt!r}")

    def to_dict(self) -> dict:
        return {
            "max_rank": self.max_rank,
            "primes_plucker": list(self.primes_plucker),
            "primes_segre": list(self.primes_segre),
            "format": self.fmt,
            "seed": self.seed,
        }


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def root_witness(r) -> list[int]:
    """Roots serialize as plain coefficient lists in simple-root coordinates."""
    return list(r.coeffs)


def bundle(config: RunConfig, reports: list[CheckReport]) -> dict:
    ordered = sorted(reports, key=lambda r: (r.check_id, r.subject))
    summary = {s: 0 for s in _STATUSES}
    for r in ordered:
        summary[r.status] += 1
    return {
        "config": config.to_dict(),
        "reports": [r.to_dict() for r in ordered],
        "summary": summary,
    }


def bundle_json(b: dict) -> str:
    return json.dumps(b, sort_keys=True, indent=2) + "\n"


def bundle_markdown(b: dict) -> str:
    """Markdown rendering derived from the JSON model (never independently)."""
    lines = ["# Verification bundle", ""]
    cfg = b["config"]
    lines.append("config: " + ", ".join(f"{k}={cfg[k]}" for k in sorted(cfg)))
    lines.append("")
    lines.append("| check | subject | status | notes |")
    lines.append("|---|---|---|---|")
    for r in b["reports"]:
        notes = r["notes"].replace("|", "/").replace("\n", " ")
        lines.append(f"| {r['check_id']} | {r['subject']} | {r['status']} | {notes} |")
    s = b["summary"]
    lines.append("")
    lines.append("summary: " + ", ".join(f"{k}={s[k]}" for k in sorted(s)))
    return "\n".join(lines) + "\n"
