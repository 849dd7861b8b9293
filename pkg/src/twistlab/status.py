"""Three-valued outcomes shared by the bounded checks and the CLI."""

import enum


class Answer(enum.Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


class Verdict(enum.Enum):
    VERIFIED = "Verified"
    REFUTED = "Refuted"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self):
        return self.value


class Check(enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self):
        return self.value


def combine(statuses):
    """Worst of a collection of Check values (Fail > Inconclusive > Pass)."""
    statuses = list(statuses)
    if Check.FAIL in statuses:
        return Check.FAIL
    if Check.INCONCLUSIVE in statuses:
        return Check.INCONCLUSIVE
    return Check.PASS


def exit_code(status) -> int:
    if status in (Check.PASS, Verdict.VERIFIED, Answer.YES, True):
        return 0
    if status in (Check.INCONCLUSIVE, Verdict.INCONCLUSIVE, Answer.UNKNOWN):
        return 2
    return 1
