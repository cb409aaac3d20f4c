"""Error types shared by the library and the command line front end."""


class ValidationError(ValueError):
    """Bad input: malformed grammar, violated precondition, out-of-range index.

    The CLI maps this to exit code 1.
    """


class InvariantBreach(RuntimeError):
    """A cross-check the library guarantees internally has failed.

    Examples: a dominance extremum that is not unique, or a closed-form
    value disagreeing with its definitional computation.  The CLI maps
    this to exit code 2.
    """
