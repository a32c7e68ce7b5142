"""Machine-readable verification reports.

One document per run.  Numbers are serialized as decimal strings carrying
full working precision (shortest round-trip form for doubles), which keeps
reports diff-stable across platforms; the effective configuration snapshot
is embedded so a report can be reproduced exactly.  Fields are add-only:
parsers must tolerate unknown keys.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone

from .identities import VerificationRecord

TOOL_NAME = "autoseries"

#: Fixed CSV column order; append-only.
CSV_COLUMNS = (
    "identity",
    "s",
    "lhs_value",
    "lhs_bound",
    "rhs_value",
    "rhs_bound",
    "residual",
    "pass",
    "heuristic",
    "terms_used",
    "wall_time_s",
)


def _num(x: float | None) -> str | None:
    if x is None:
        return None
    return repr(float(x))


@dataclass
class RunConfig:
    """Effective settings for one run, after precedence resolution
    (flags > environment > config file > defaults)."""

    eps: float | None = None          # None: per-identity default tolerance
    precision_bits: int = 53
    max_terms: int = 10**9
    depth: int | None = None          # None: sized from s and eps
    out_format: str = "json"

    def snapshot(self) -> dict:
        return {
            "eps": _num(self.eps),
            "precision_bits": self.precision_bits,
            "max_terms": self.max_terms,
            "depth": self.depth,
            "format": self.out_format,
        }


def record_to_dict(rec: VerificationRecord) -> dict:
    return {
        "identity": rec.identity_id,
        "s": _num(rec.s),
        "lhs_value": _num(rec.lhs_value),
        "lhs_bound": _num(rec.lhs_bound),
        "rhs_value": _num(rec.rhs_value),
        "rhs_bound": _num(rec.rhs_bound),
        "residual": _num(rec.residual),
        "pass": rec.passed,
        "heuristic": rec.heuristic,
        "terms_used": rec.terms_used,
        "wall_time_s": _num(rec.wall_time_s),
    }


def record_from_dict(d: dict) -> VerificationRecord:
    def f(key):
        v = d.get(key)
        return math.nan if v is None else float(v)

    return VerificationRecord(
        identity_id=d["identity"],
        s=None if d.get("s") is None else float(d["s"]),
        lhs_value=f("lhs_value"),
        lhs_bound=f("lhs_bound"),
        rhs_value=f("rhs_value"),
        rhs_bound=f("rhs_bound"),
        residual=f("residual"),
        passed=bool(d["pass"]),
        terms_used=int(d.get("terms_used", 1)),
        wall_time_s=f("wall_time_s"),
        heuristic=bool(d.get("heuristic", False)),
    )


@dataclass
class ReportDocument:
    """A full verification run: configuration, records, summary."""

    records: list[VerificationRecord] = field(default_factory=list)
    config: RunConfig = field(default_factory=RunConfig)
    version: str = "0.1.0"
    generated_at: str = ""

    def __post_init__(self) -> None:
        if not self.generated_at:
            self.generated_at = datetime.now(timezone.utc).isoformat(timespec="seconds")

    @property
    def summary(self) -> dict:
        passed = sum(1 for r in self.records if r.passed)
        return {
            "total": len(self.records),
            "passed": passed,
            "failed": len(self.records) - passed,
            "wall_time_s": _num(sum(r.wall_time_s for r in self.records)),
        }

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.records)

    def to_json_obj(self) -> dict:
        return {
            "tool": TOOL_NAME,
            "version": self.version,
            "generated_at": self.generated_at,
            "config": self.config.snapshot(),
            "records": [record_to_dict(r) for r in self.records],
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        obj = json.loads(text)
        cfg = obj.get("config", {})
        config = RunConfig(
            eps=None if cfg.get("eps") is None else float(cfg["eps"]),
            precision_bits=int(cfg.get("precision_bits", 53)),
            max_terms=int(cfg.get("max_terms", 10**9)),
            depth=cfg.get("depth"),
            out_format=cfg.get("format", "json"),
        )
        return cls(
            records=[record_from_dict(d) for d in obj.get("records", [])],
            config=config,
            version=obj.get("version", "unknown"),
            generated_at=obj.get("generated_at", ""),
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for rec in self.records:
            d = record_to_dict(rec)
            writer.writerow(
                [
                    d["identity"],
                    d["s"] if d["s"] is not None else "",
                    d["lhs_value"],
                    d["lhs_bound"],
                    d["rhs_value"],
                    d["rhs_bound"],
                    d["residual"],
                    "true" if d["pass"] else "false",
                    "true" if d["heuristic"] else "false",
                    d["terms_used"],
                    d["wall_time_s"],
                ]
            )
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"{TOOL_NAME} {self.version} verification report ({self.generated_at})"]
        for rec in self.records:
            status = "PASS" if rec.passed else "FAIL"
            s_txt = "-" if rec.s is None else f"{rec.s:g}"
            extra = " heuristic" if rec.heuristic else ""
            lines.append(
                f"  [{status}] {rec.identity_id:<22s} s={s_txt:<6s} "
                f"residual={rec.residual:.3e} bounds={rec.lhs_bound + rec.rhs_bound:.3e} "
                f"terms={rec.terms_used}{extra}"
            )
        sm = self.summary
        lines.append(f"summary: {sm['passed']}/{sm['total']} passed")
        return "\n".join(lines) + "\n"

    def render(self, out_format: str | None = None) -> str:
        fmt = out_format or self.config.out_format
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown report format {fmt!r}")
