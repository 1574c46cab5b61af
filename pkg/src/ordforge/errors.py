"""Exception types shared across the package.

Every error a caller is expected to handle derives from ``OrdforgeError``;
most also derive from a matching builtin so ``except ValueError`` keeps working.
"""


class OrdforgeError(Exception):
    pass


class InvalidElement(OrdforgeError, ValueError):
    """A value is not an element of the order it was used with."""


class NotIncreasing(OrdforgeError, ValueError):
    """A map that must be strictly increasing is not."""


class OutOfDomain(OrdforgeError, ValueError):
    """An argument lies outside the finite segment a function is defined on."""


class TooLarge(OrdforgeError, ValueError):
    """An exhaustive search was requested on an input that is too big."""


class BadBase(OrdforgeError, ValueError):
    pass


class InvalidTerm(OrdforgeError, ValueError):
    """A term violates the validity conditions of its notation system."""


class InvalidSystem(OrdforgeError, ValueError):
    """A Goodstein system description is malformed or inconsistent."""


class EvalOverflow(OrdforgeError, ArithmeticError):
    """A numeric evaluation exceeded its bit or step budget.

    Runs catch this and report an ``overflow`` status instead of failing.
    """


class InternalInconsistency(OrdforgeError, RuntimeError):
    """A dilator violated one of its own laws during a computation."""


class TermSyntaxError(OrdforgeError, ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos
