"""
Errors used by prokit.
"""


class UserFacingError(Exception):
    """
    Execution of an important step failed and the program shouldn't continue.
    """

    exit_code = 3

    def __init__(self, user_facing_msg: str):
        super().__init__(user_facing_msg)
        self.user_facing_msg = user_facing_msg


class ParseError(UserFacingError):
    """
    A file, a term or a scalar couldn't be read.
    """

    exit_code = 2


class ConfigError(UserFacingError):
    """
    A configuration value is invalid.
    """

    exit_code = 2


class ShapeError(UserFacingError):
    """
    Dimensions, ranks or arities don't fit together.
    """

    exit_code = 3


class SemanticError(UserFacingError):
    """
    The input is well-formed but meaningless, for example a chip without an assignment.
    """

    exit_code = 3
