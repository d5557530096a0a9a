"""Exception hierarchy shared by the whole package.

Exit-code mapping used by the CLI: ClassViolationError and
ProofViolationError are "violation found" (1), InputError is bad input (2),
CapabilityError is an exhausted size/time budget (3).
"""

from __future__ import annotations


class Chroma5Error(Exception):
    pass


class InputError(Chroma5Error):
    """Malformed or out-of-contract input (bad edge, bad weight, bad file)."""


class CapabilityError(Chroma5Error):
    """A size or time budget was exceeded; never a wrong answer."""


class ClassViolationError(Chroma5Error):
    """The graph is not (P2+P3, gem)-free; carries a concrete witness."""

    def __init__(self, pattern: str, embedding: tuple[int, ...]):
        self.pattern = pattern
        self.embedding = tuple(embedding)
        super().__init__(f"not in class: induced {pattern} at {self.embedding}")


class ProofViolationError(Chroma5Error):
    """A relation the structure theory guarantees failed at run time.

    Unreachable for genuine class members; carries a minimal witness so the
    failure is actionable.
    """

    def __init__(self, fact: str, witness=None):
        self.fact = fact
        self.witness = witness
        super().__init__(f"structural guarantee failed: {fact} (witness={witness})")


class PreconditionError(Chroma5Error):
    """A subcolorer precondition (P3-free, P4-free, anticomplete) failed."""

    def __init__(self, what: str, witness=None):
        self.what = what
        self.witness = witness
        super().__init__(f"precondition failed: {what} (witness={witness})")
