from typing import Iterable, Optional, Sequence


class IdemAlgError(Exception):
    default_message = "Unexpected failure."

    def __init__(self, message: Optional[str] = None):
        if message is None:
            message = " ".join(["Algebra error:", self.default_message])

        super().__init__(message)


class WrongUsage(IdemAlgError):
    """Internal exception."""

    default_message = "Wrong usage, check your code!."


class ParameterError(IdemAlgError):
    default_message = "Parameter out of range."


class InputError(IdemAlgError):
    """Malformed command line or JSON input."""

    default_message = "Could not parse the input."


class PresentationMismatch(IdemAlgError):
    default_message = "Operands belong to different presentations."


class AssociativityViolation(IdemAlgError):
    default_message = "Structure table is not associative."

    def __init__(self, triple: Sequence[object], message: Optional[str] = None):
        self.triple = tuple(triple)
        if message is None:
            u, v, w = (str(x) for x in self.triple)
            message = f"Algebra error: ({u}·{v})·{w} != {u}·({v}·{w})."
        super().__init__(message)


class ConstructionFailure(IdemAlgError):
    default_message = "Model construction failed verification."

    def __init__(self, relations: Iterable[str] = (), message: Optional[str] = None):
        self.relations = tuple(relations)
        if message is None and self.relations:
            message = "Algebra error: model violates " + ", ".join(self.relations) + "."
        super().__init__(message)


class HypothesisViolation(IdemAlgError):
    default_message = "The closed form hypothesis does not hold."


class WitnessInvalid(IdemAlgError):
    default_message = "One sided Drazin witnesses do not satisfy their identities."


class PreconditionViolation(IdemAlgError):
    default_message = "Precondition not met."
