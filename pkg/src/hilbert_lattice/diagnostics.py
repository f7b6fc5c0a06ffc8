from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool | None  # None: not applicable / not evaluated
    witness: tuple | None = None
    note: str = ""


@dataclass
class Diagnostics:
    """Ordered pass/fail record, one entry per checked law."""

    subject: str = ""
    checks: list = field(default_factory=list)

    def add(self, name, ok, witness=None, note=""):
        self.checks.append(Check(name, ok, None if witness is None else tuple(witness), note))
        return ok

    @property
    def ok(self):
        return all(c.ok is not False for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c.ok is False]

    def first_failure(self):
        fails = self.failures()
        return fails[0] if fails else None

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name):
        return any(c.name == name for c in self.checks)

    def to_dict(self, label=None):
        label = label or (lambda x: x)
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": [
                {
                    "name": c.name,
                    "ok": c.ok,
                    "witness": None if c.witness is None else [label(w) for w in c.witness],
                    "note": c.note,
                }
                for c in self.checks
            ],
        }
