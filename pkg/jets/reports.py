from dataclasses import dataclass


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verified property: pass/fail plus the first counterexample."""
    name: str
    passed: bool
    trials: int = 0
    counterexample: str = None
    skipped: bool = False
    note: str = None

    @property
    def status(self):
        if self.skipped:
            return 'skipped'
        return 'pass' if self.passed else 'fail'

    def as_dict(self):
        payload = {'name': self.name, 'status': self.status, 'trials': self.trials}
        if self.counterexample is not None:
            payload['counterexample'] = self.counterexample
        if self.note is not None:
            payload['note'] = self.note
        return payload

    @classmethod
    def skip(cls, name, reason):
        return cls(name=name, passed=True, note=reason, skipped=True)
