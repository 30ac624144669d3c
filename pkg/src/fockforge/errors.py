class InvariantError(RuntimeError):
    """An identity that must hold exactly was violated."""
