class ArityError(ValueError):
    """Operands whose domains and codomains do not line up."""


class BoundExceeded(ValueError):
    """A brute-force computation would exceed its configured size bound."""
