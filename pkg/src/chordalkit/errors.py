"""Exception types shared across the package.

Each class carries a short check token (used by the CLI to name the failed
check in its error message and to map exceptions onto exit codes).
"""


class ChordalkitError(Exception):
    token = "Error"


class ParseError(ChordalkitError):
    token = "Parse"


class SelfLoopError(ParseError):
    token = "SelfLoop"


class EmptyInputError(ParseError):
    token = "EmptyInput"


class DisconnectedGraphError(ChordalkitError):
    token = "DisconnectedGraph"


class ComplementDisconnectedError(ChordalkitError):
    token = "ComplementDisconnected"


class NotChordalError(ChordalkitError):
    token = "NotChordal"


class NotAPeoError(NotChordalError):
    # a non-chordal input surfaces as a failed simpliciality check
    token = "NotAPeo"


class ComplementNotChordalError(ChordalkitError):
    token = "ComplementNotChordal"


class NotMCCompError(ChordalkitError):
    token = "NotMCComp"


class NonDclStructureError(ChordalkitError):
    token = "NonDclStructure"


class IcViolationError(ChordalkitError):
    token = "IcViolation"


class NotComplementReversingError(ChordalkitError):
    token = "NotComplementReversing"


class ScriptConflictError(ChordalkitError):
    token = "ScriptConflict"


class InputMismatchError(ChordalkitError):
    token = "InputMismatch"


class OracleCapError(ChordalkitError):
    token = "OracleCap"


class DebugInvariantError(ChordalkitError):
    token = "DebugInvariant"
