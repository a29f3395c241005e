"""Violation reports.

Checkers return a Report rather than raising: violations are findings about
the input, and callers (tests, the CLI) decide what to do with them. A report
with an empty violation list means the checked property holds.
"""

import json


class Report:
    """A list of violations plus optional extra payload (e.g. bijections).

    Each violation is a dict with at least a "kind" key; remaining keys are
    finding-specific and JSON-serializable.
    """

    def __init__(self, title):
        self.title = title
        self.violations = []
        self.data = {}

    @property
    def ok(self):
        return not self.violations

    def add(self, kind, **fields):
        entry = {"kind": kind}
        entry.update(fields)
        self.violations.append(entry)
        return self

    def extend(self, other):
        """Absorb another report's violations (payload untouched)."""
        self.violations.extend(other.violations)
        return self

    def to_json(self):
        return json.dumps(
            {"title": self.title, "ok": self.ok,
             "violations": self.violations, "data": self.data},
            indent=2, sort_keys=True)

    def __str__(self):
        lines = [f"{self.title}: {'ok' if self.ok else 'FAIL'}"]
        for v in self.violations:
            detail = ", ".join(f"{k}={v[k]}" for k in sorted(v) if k != "kind")
            lines.append(f"  violation [{v['kind']}] {detail}")
        for key in sorted(self.data):
            lines.append(f"  {key}: {self.data[key]}")
        return "\n".join(lines)

    def __repr__(self):
        state = "ok" if self.ok else f"{len(self.violations)} violations"
        return f"<Report {self.title!r}: {state}>"
