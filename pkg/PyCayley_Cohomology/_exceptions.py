from typing import Optional


class CayleyCheckException(Exception):
    pass


class MatrixShapeException(CayleyCheckException, ValueError):
    pass


class DifferentialException(CayleyCheckException, ValueError):
    """
    Raised when graded data fails to be a complex: d∘d ≠ 0, a map that does
    not commute with differentials, or horizontal∘horizontal ≠ 0.
    """


class VertexRangeException(CayleyCheckException, IndexError):
    pass


class SubcomplexException(CayleyCheckException, ValueError):
    pass


class LevelRangeException(CayleyCheckException, IndexError):
    pass


class CoverIndexException(CayleyCheckException, IndexError):
    pass


class RewriteException(CayleyCheckException, ValueError):
    pass


class UnsupportedParameterException(CayleyCheckException, ValueError):
    pass


class InstanceException(CayleyCheckException, ValueError):
    pass


class InvariantViolation(InstanceException):
    """
    An instance parsed correctly but violates a named invariant.

    Attributes:
        invariant (str): Short name of the violated invariant.
        instance (str, optional): Name of the offending instance.
    """

    def __init__(self, invariant: str, message: str, instance: Optional[str] = None):
        self.invariant = invariant
        self.instance = instance
        prefix = f"[{instance}] " if instance else ""
        super().__init__(f"{prefix}{invariant}: {message}")


class CoverConditionException(InvariantViolation):
    def __init__(self, message: str, instance: Optional[str] = None):
        super().__init__("cover-condition", message, instance)


class RetryBudgetException(InstanceException):
    pass
