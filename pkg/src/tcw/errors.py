"""Exception types shared by every module.

Each error carries a stable ``code`` string; the CLI serializes it verbatim.
"""


class ToricError(ValueError):
    code = "TORIC_ERROR"

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code

    def to_json(self):
        return {"error": self.code, "message": str(self)}


class FanError(ToricError):
    code = "INVALID_FAN"


class PolytopeError(ToricError):
    code = "INVALID_POLYTOPE"


class EvaluationError(ToricError):
    code = "EVALUATION_ERROR"


class BudgetExceeded(ToricError):
    code = "SIZE_LIMIT"


class CalibrationError(ToricError):
    code = "CALIBRATION_FAILED"


class FaceVectorError(ToricError):
    code = "SYMMETRY_VIOLATION"
