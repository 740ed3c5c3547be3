"""Exception hierarchy and the violation report shared by every checker."""

from dataclasses import dataclass, field


class PolycatError(Exception):
    pass


class StructuralError(PolycatError):
    """Data refers to something that is not there (undeclared cell, bad table value)."""


class DimensionError(PolycatError):
    pass


class DomainError(PolycatError):
    """A composition table is defined on the wrong set of pairs."""


class UnknownGenerator(StructuralError):
    pass


class TypingError(PolycatError):
    """A term does not typecheck."""


class NotParallel(TypingError):
    """A generator's source and target do not share their boundaries."""


class CompositionError(TypingError):
    def __init__(self, i, left, right, msg=None):
        self.i, self.left, self.right = i, left, right
        super().__init__(msg or f"not {i}-composable: target {left} != source {right}")


class UnsupportedDimension(PolycatError):
    pass


class ParseError(PolycatError):
    def __init__(self, msg, line=1, col=1):
        self.msg, self.line, self.col = msg, line, col
        super().__init__(f"{line}:{col}: {msg}")


@dataclass(frozen=True)
class Violation:
    label: str
    witness: tuple
    detail: str = ""

    def __str__(self):
        s = f"[{self.label}] {self.witness}"
        return f"{s}: {self.detail}" if self.detail else s


@dataclass
class Report:
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def add(self, label, witness, detail=""):
        self.violations.append(Violation(label, tuple(witness), detail))

    def labels(self):
        return {v.label for v in self.violations}

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(str(v) for v in self.violations)
