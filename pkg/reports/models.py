from dataclasses import dataclass, field

from algebra.models import NOT_APPLICABLE, PASS

EXIT_PASS = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET_EXCEEDED = 3

SUITE_CHOICES = [
    ("paper-checks", "Every applicable check on one ring"),
]


@dataclass
class RunReport:
    """Everything one verification run produced, in check order."""
    version: str
    digest: str
    command: str
    spec: object
    checks: list = field(default_factory=list)
    tables: list = field(default_factory=list)
    sections: dict = field(default_factory=dict)
    errors: list = field(default_factory=list)
    timing: float = None

    def add(self, check):
        self.checks.append(check)
        return check

    @property
    def budget_exhausted(self):
        return any(check.budget_exhausted for check in self.checks)

    @property
    def passed(self):
        return all(check.status in (PASS, NOT_APPLICABLE) for check in self.checks)

    @property
    def exit_code(self):
        if self.budget_exhausted:
            return EXIT_BUDGET_EXCEEDED
        return EXIT_PASS if self.passed else EXIT_CHECK_FAILED
