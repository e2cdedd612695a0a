class CheckerError(RuntimeError):
    pass


class PreconditionError(CheckerError):
    """Input outside the regime a checker decides (unnormalized weights, too few points, ...)"""
    pass


class WeightSumError(CheckerError):
    """Weight total is not the value the parabolic degree normalization requires"""
    pass


class DegreeSumError(CheckerError):
    """Component degrees do not add up to zero"""
    pass
