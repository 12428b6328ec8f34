"""
Library module for prokit.

Holds the message helpers every module reports through and the JSON file handling shared by
the command line front end.
"""

import json
import shutil
import sys
import typing

import prokit.config as conf
import prokit.error as err

_PROKIT_MSG_TAG = "[\033[1;35mPROKIT\033[m]"
_RED_PREFIX = "\033[91m"
_YELLOW_PREFIX = "\033[93m"
_CYAN_PREFIX = "\033[96m"
_GRAY_PREFIX = "\033[90m"
_RESET_SUFFIX = "\033[m"
_SPACING = "    "
_CONTINUATION_PREFIX = f"{_PROKIT_MSG_TAG}{_SPACING} "

INFO = 1
SUMMARY = 2


def _emit(line: str):
    # Messages never go to stdout, which is reserved for results.
    print(line, file=sys.stderr)


def print_continuation(msg: str, level: int = SUMMARY):
    """
    Prints a message without a prefix.
    """
    if level == SUMMARY or conf.debug_output or not conf.quiet_output:
        _emit(f"{_CONTINUATION_PREFIX}{msg}")


def print_error(error_msg: str):
    """
    Prints an error message to the user.
    """

    _emit(f"{_PROKIT_MSG_TAG} {_RED_PREFIX}ERROR{_RESET_SUFFIX}: {error_msg}")


def print_warning(msg: str):
    """
    Prints a warning to the user.
    """

    _emit(f"{_PROKIT_MSG_TAG} {_YELLOW_PREFIX}WARNING{_RESET_SUFFIX}: {msg}")


def print_summary(msg: str):
    """
    Prints a summary message to the user.
    """

    _emit(f"{_PROKIT_MSG_TAG} {_CYAN_PREFIX}SUMMARY{_RESET_SUFFIX}: {msg}")


def print_list(msg: str,
               l: list[str],
               elements_per_line: typing.Optional[int] = None,
               limit_to_term_size: bool = True,
               level: int = SUMMARY):
    """
    Prints a summary message to the user along with a list of elements.

    If the list is empty, prints nothing.
    """
    if len(l) == 0:
        return

    l = l.copy()
    if level == SUMMARY:
        print_summary(msg)
    elif level == INFO:
        print_info(msg)

    if elements_per_line is None:
        elements_per_line = len(l)

    max_line_width = 2**32
    if limit_to_term_size:
        max_line_width = shutil.get_terminal_size().columns - len(
            _SPACING) - len(_CONTINUATION_PREFIX)

    lines = [f"{l.pop(0)}"]
    elements_in_current_line = 1
    while l:
        next_element = l.pop(0)

        can_fit_elements = elements_in_current_line + 1 <= elements_per_line
        can_fit_text = len(lines[-1]) + len(next_element) <= max_line_width

        if can_fit_text and can_fit_elements:
            lines[-1] += f" {next_element}"
            elements_in_current_line += 1
        else:
            lines.append(f"{next_element}")
            elements_in_current_line = 1

    for line in lines:
        print_continuation(line, level=level)


def print_info(msg: str):
    """
    Prints a detailed message to the user if verbose output is not disabled.
    """
    if conf.debug_output or not conf.quiet_output:
        _emit(f"{_PROKIT_MSG_TAG} INFO: {msg}")


def print_debug(msg: str):
    """
    Prints a detailed message to the user if debug messages are enabled.
    """
    if conf.debug_output:
        _emit(f"{_PROKIT_MSG_TAG} {_GRAY_PREFIX}DEBUG{_RESET_SUFFIX}: {msg}")


def read_json_file(path: str) -> typing.Any:
    """
    Reads and parses a JSON file.
    """
    print_debug(f"Reading '{path}'.")
    try:
        with open(path, "rt", encoding="utf-8") as file:
            return json.load(file)
    except OSError as e:
        raise err.ParseError(f"Failed to read file '{path}'.") from e
    except json.JSONDecodeError as e:
        raise err.ParseError(f"File '{path}' is not valid JSON: {e}") from e


def write_json_file(path: str, data: typing.Any):
    """
    Writes data as JSON to a file.
    """
    print_debug(f"Writing '{path}'.")
    try:
        with open(path, "wt", encoding="utf-8") as file:
            json.dump(data, file, indent=2)
            file.write("\n")
    except OSError as e:
        raise err.UserFacingError(f"Failed to write file '{path}'.") from e


def dump_result(data: typing.Any) -> str:
    """
    Serializes a result in the configured output format.
    """
    if conf.output_format == "pretty":
        return json.dumps(data, indent=2)
    return json.dumps(data, separators=(",", ":"))


def require_keys(data: typing.Any, keys: list[str], what: str) -> dict:
    """
    Checks that data is a JSON object with the given keys.
    """
    if not isinstance(data, dict):
        raise err.ParseError(f"Expected a JSON object for {what}.")
    missing = [key for key in keys if key not in data]
    if missing:
        raise err.ParseError(
            f"The {what} is missing the field(s) {', '.join(missing)}.")
    return data


def require_int(value: typing.Any, what: str, minimum: int = 0) -> int:
    """
    Checks that value is an integer not smaller than minimum.
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise err.ParseError(f"Expected an integer for {what}, got {value!r}.")
    if value < minimum:
        raise err.ParseError(
            f"Expected {what} to be at least {minimum}, got {value}.")
    return value
