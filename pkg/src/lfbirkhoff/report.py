"""Per-check result records shared by the verification code."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class LemmaReport:
    lemma: str
    instances: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def record(self, passed, witness=None):
        self.instances += 1
        if not passed:
            self.failures.append(witness)
        return passed

    def merge(self, other):
        self.instances += other.instances
        self.failures.extend(other.failures)
        return self

    def to_json(self):
        return {"lemma": self.lemma, "instances": self.instances, "failures": list(self.failures)}
