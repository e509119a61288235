"""Sweep outcomes shared by every verifier."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class OracleMismatch(AssertionError):
    """Two independent computations of the same quantity disagree."""


@dataclass(frozen=True)
class Counterexample:
    params: tuple
    detail: str
    # False for cases outside the hypothesis actually used by the proof,
    # e.g. n = 0 for the Catalan-product divisibility.
    in_scope: bool = True


@dataclass
class ClaimReport:
    """Outcome of checking one claim over a finite parameter range.

    ``proven`` separates theorems (a counterexample is fatal) from conjectures
    (a counterexample is a finding).
    """

    claim_id: str
    bounds: dict[str, Any]
    proven: bool
    checked: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if not self.counterexamples else "fail"

    @property
    def fatal(self) -> bool:
        return self.proven and any(c.in_scope for c in self.counterexamples)

    @property
    def findings(self) -> list[Counterexample]:
        return [c for c in self.counterexamples if not (self.proven and c.in_scope)]

    def add(self, params: tuple, detail: str, in_scope: bool = True) -> None:
        self.counterexamples.append(Counterexample(tuple(params), detail, in_scope))

    def merge(self, other: "ClaimReport") -> "ClaimReport":
        if other.claim_id != self.claim_id:
            raise ValueError("cannot merge reports of different claims")
        bounds = {**self.bounds, **other.bounds}
        merged = ClaimReport(self.claim_id, bounds, self.proven and other.proven,
                             self.checked + other.checked,
                             sorted(self.counterexamples + other.counterexamples, key=_key),
                             self.notes + other.notes)
        return merged

    def rows(self) -> list[tuple[str, str, str, str]]:
        """TSV rows ``(claim_id, params, status, detail)``, sorted by parameters."""
        if not self.counterexamples:
            rng = ",".join(f"{k}={v}" for k, v in self.bounds.items())
            return [(self.claim_id, rng, "PASS", f"checked={self.checked}")]
        out = []
        for c in sorted(self.counterexamples, key=_key):
            status = "FAIL" if self.proven and c.in_scope else "FINDING"
            out.append((self.claim_id, _fmt_params(c.params), status, c.detail))
        return out

    def to_tsv(self) -> str:
        return "".join("\t".join(r) + "\n" for r in self.rows())

    def summary(self) -> str:
        kind = "theorem" if self.proven else "conjecture"
        if not self.counterexamples:
            tag = "PASS"
        elif self.fatal:
            tag = "FAIL"
        else:
            tag = "FINDING"
        return f"{tag:8s}{self.claim_id} ({kind}, {self.checked} cases, {len(self.counterexamples)} counterexamples)"


def _key(c: Counterexample):
    return tuple((0, x, "") if isinstance(x, int) else (1, 0, str(x)) for x in c.params)


def _fmt_params(params: tuple) -> str:
    return "(" + ",".join(str(p) for p in params) + ")"
