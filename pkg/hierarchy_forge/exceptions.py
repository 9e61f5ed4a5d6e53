class HierarchyForgeError(Exception):
    """
    Base exception class for hierarchy_forge.
    All custom exceptions in hierarchy_forge are inherited from this class.
    """


class HierarchyForgeValueError(HierarchyForgeError, ValueError):
    pass


class HierarchyForgeRuntimeError(HierarchyForgeError, RuntimeError):
    pass


class MalformedExpression(HierarchyForgeValueError):
    pass


class DimensionMismatch(HierarchyForgeValueError):
    pass


class EmptyInput(HierarchyForgeValueError):
    pass


class MixedBlockOrder(HierarchyForgeValueError):
    pass


class UnknownCase(HierarchyForgeValueError):
    pass


class BadDimension(HierarchyForgeValueError):
    pass


class BadModel(HierarchyForgeValueError):
    pass


class BadSpec(HierarchyForgeValueError):
    pass


class NotPolynomialInScale(HierarchyForgeValueError):
    pass


class SchemaMismatch(HierarchyForgeValueError):
    pass


class WindowExceeded(HierarchyForgeRuntimeError):
    pass


class OrderExceeded(HierarchyForgeRuntimeError):
    pass


class IntegrationDidNotTerminate(HierarchyForgeRuntimeError):
    pass


class AlreadyProcessedError(HierarchyForgeRuntimeError):
    pass
