"""Exception hierarchy shared by every module of the package."""


class GraphError(ValueError):
    """Base class for invalid graphs and failed preconditions."""


class SelfLoopError(GraphError):
    def __init__(self, pair):
        self.pair = tuple(pair)
        super().__init__(f"self-loop {self.pair}")


class ParallelEdgeError(GraphError):
    def __init__(self, pair):
        self.pair = tuple(pair)
        super().__init__(f"parallel edge {self.pair}")


class VertexOutOfRangeError(GraphError):
    def __init__(self, pair, n):
        self.pair = tuple(pair)
        self.n = n
        super().__init__(f"edge {self.pair} has an endpoint outside 0..{n - 1}")


class EmptyGraphError(GraphError):
    def __init__(self):
        super().__init__("graph has no vertices")


class ParseError(GraphError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class NotConnectedError(GraphError):
    pass


class TooSmallError(GraphError):
    pass


class PreconditionViolated(GraphError):
    pass


class InvalidParams(GraphError):
    pass
