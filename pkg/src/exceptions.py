class GraphParseException(Exception):
    pass


class EmptyGraphException(Exception):
    pass


class DisconnectedGraphException(Exception):
    pass


class PreconditionException(Exception):
    def __init__(self, reason: str) -> None:
        super().__init__(reason)
        self.reason = reason


class LargeGraphException(Exception):
    pass


class DegreeOverflowException(Exception):
    pass


class ZeroCocycleException(Exception):
    pass


class ArrangementException(Exception):
    pass


class PresentationParseException(Exception):
    pass


class CommandLineException(Exception):
    pass
