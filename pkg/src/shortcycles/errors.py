"""Exception hierarchy shared by every module of the package."""


class ShortCyclesError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(ShortCyclesError, ValueError):
    pass


class LoopEdge(GraphError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"edge {index} is a loop")


class ParallelEdge(GraphError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"edge {index} duplicates an earlier edge")


class EndpointOutOfRange(GraphError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"edge {index} has an endpoint outside the vertex range")


class RootOutOfRange(GraphError):
    def __init__(self, root):
        self.root = root
        super().__init__(f"root {root} is not a vertex")


class DisconnectedGraph(GraphError):
    def __init__(self):
        super().__init__("graph is not connected")


class SchemeError(ShortCyclesError, ValueError):
    pass


class BadRotation(SchemeError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"rotation at vertex {vertex} is not a permutation of its incident edges")


class MissingSignature(SchemeError):
    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"edge {edge} has no signature")


class BadSignatureValue(SchemeError):
    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"edge {edge} has a signature other than +1/-1")


class MissingRotation(SchemeError):
    def __init__(self):
        super().__init__("operation requires a rotation system")


class NotProjectivePlane(SchemeError):
    def __init__(self, genus, orientable):
        self.genus = genus
        self.orientable = orientable
        kind = "orientable" if orientable else "nonorientable"
        super().__init__(
            f"embedding has Euler genus {genus} ({kind}); the projective plane is genus 1 nonorientable"
        )


class EdgeInTree(ShortCyclesError, ValueError):
    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"edge {edge} belongs to the tree")


class CycleCapExceeded(ShortCyclesError, RuntimeError):
    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"more than {cap} simple cycles")


class TooManyEdges(ShortCyclesError, ValueError):
    def __init__(self, n, m):
        super().__init__(f"a simple graph on {n} vertices cannot have {m} edges")


class InstanceSyntaxError(ShortCyclesError, ValueError):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class IdMismatch(InstanceSyntaxError):
    pass
