import enum


class Verdict(enum.Enum):
    TRUE = "TRUE"
    FALSE = "FALSE"
    GAP = "GAP"

    def __str__(self):
        return self.value

    def mirror(self) -> "Verdict":
        """Verdict of the negated sentence."""
        if self is Verdict.TRUE:
            return Verdict.FALSE
        if self is Verdict.FALSE:
            return Verdict.TRUE
        return Verdict.GAP
