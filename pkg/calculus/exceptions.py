class SchubertError(ValueError):
    pass


class InvalidSubsetError(SchubertError):
    """Index set not strictly increasing inside [1, n]"""
    pass


class BoxError(SchubertError):
    """Partition does not fit the r x (n-r) box"""
    pass


class RingMismatchError(SchubertError):
    """Operands live in different Gr(r, n)"""
    pass


class WeightError(SchubertError):
    """Tied weights or a weight window of length >= 1"""
    pass
