"""Exception hierarchy shared by all matchbound modules."""


class MatchboundError(Exception):
    """Base class for all errors raised by this package."""


class LoopEdgeError(MatchboundError):
    def __init__(self, u: int):
        self.vertex = u
        super().__init__(f"loop edge ({u}, {u}) is not allowed in a simple graph")


class DuplicateEdgeError(MatchboundError):
    def __init__(self, u: int, v: int):
        self.edge = (u, v)
        super().__init__(f"edge ({u}, {v}) appears more than once")


class VertexOutOfRangeError(MatchboundError):
    def __init__(self, vertex: int, n: int):
        self.vertex = vertex
        self.n = n
        super().__init__(f"vertex id {vertex} out of range [0, {n})")


class InvalidParameterError(MatchboundError):
    pass


class EdgeListSyntaxError(MatchboundError):
    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class NotAnEdgeError(MatchboundError):
    def __init__(self, u: int, v: int):
        self.edge = (u, v)
        super().__init__(f"({u}, {v}) is not an edge of the graph")


class SharedVertexError(MatchboundError):
    def __init__(self, w: int):
        self.vertex = w
        super().__init__(f"vertex {w} is covered by more than one matched edge")


class NotMatchedError(MatchboundError):
    def __init__(self, u: int, v: int):
        self.edge = (u, v)
        super().__init__(f"edge ({u}, {v}) is not in the matching")


class StaleMoveError(MatchboundError):
    pass


class NotMaximalError(MatchboundError):
    def __init__(self, u: int, v: int):
        self.edge = (u, v)
        super().__init__(f"matching is not maximal: edge ({u}, {v}) has both endpoints uncovered")


class InstanceTooLargeError(MatchboundError):
    pass
