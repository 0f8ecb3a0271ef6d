"""Exception types raised by crtbch."""


class NotInvertibleError(ValueError):
    """Raised when a polynomial has no inverse modulo another.

    The shared factor is kept on ``common_factor``.
    """

    def __init__(self, a, modulus, common_factor):
        self.a = a
        self.modulus = modulus
        self.common_factor = common_factor
        super().__init__(
            f"{a} is not invertible modulo {modulus}: common factor {common_factor}"
        )


class NotPrimitiveError(ValueError):
    """Raised when a field polynomial does not generate the full multiplicative group."""

    def __init__(self, poly, order, expected):
        self.poly = poly
        self.order = order
        self.expected = expected
        if order is None:
            detail = "x is not a unit modulo the polynomial"
        else:
            detail = f"root has multiplicative order {order}, expected {expected}"
        super().__init__(f"{poly} is not primitive: {detail}")


class FieldConstructionError(RuntimeError):
    """Internal consistency failure while building field objects."""


class CodewordLengthError(ValueError):
    pass
