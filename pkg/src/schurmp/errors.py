"""Exceptions shared across the package.

Precondition violations raise plain ``ValueError`` with a message; the two
classes here exist because callers need to catch them programmatically.
"""


class BudgetExceeded(RuntimeError):
    """An exact enumeration would visit more codewords than the caller allowed.

    Callers are expected to fall back to a designed/structural bound and to
    flag the result as a bound rather than an exact value.
    """


class VerificationError(RuntimeError):
    """An internal cross-check failed.

    Raised when a quantity that is guaranteed by construction does not verify
    (polynomial coefficients that fail to descend to the base field, a rank
    that disagrees with a dimension formula, a consecutive-run claim that does
    not hold).  Never caught inside the package: it signals a bug, not bad
    input.
    """
