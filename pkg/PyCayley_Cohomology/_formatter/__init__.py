import json
from json import JSONDecodeError
from typing import Any, Optional, Sequence

from PyCayley_Cohomology._constants import DEFAULT_INDENTATION, INDENTATION_ERR_MSG, MAX_INDENTATION, MIN_INDENTATION
from PyCayley_Cohomology._exceptions import CayleyCheckException, InstanceException
from PyCayley_Cohomology._formatter.abstract import AbstractReportFormatter, BaseTypes
from PyCayley_Cohomology._report import Report


class ReportFormatterException(CayleyCheckException):
    pass


class IndentationTypeException(ReportFormatterException, TypeError):
    pass


class InstanceFormatException(InstanceException):
    pass


class InstanceDecodeException(InstanceFormatException):
    """
    Exception raised when an instance file is not valid JSON.

    Attributes:
        message (str): Human-readable error message.
        text (str): The raw input text.
        start_index (int, optional): Start index of the error in the text.
        end_index (int, optional): End index of the error in the text.
        erroneous_part (str, optional): Extracted invalid portion of the text.
        line (int, optional): Line number of the error.
        column (int, optional): Column number of the error.
    """

    def __init__(self, message: str, text: str, decode_error: json.JSONDecodeError):
        if not isinstance(message, str):
            raise TypeError("message must be a string")
        if not isinstance(text, str):
            raise TypeError("text must be a string")
        if not isinstance(decode_error, json.JSONDecodeError):
            raise TypeError("decode_error must be a json.JSONDecodeError")

        self.message = message
        self.text = text
        self.line = decode_error.lineno
        self.column = decode_error.colno
        self.start_index = decode_error.pos
        self.end_index = self.start_index + 1 if self.start_index < len(text) else len(text)
        self.erroneous_part = self._extract_erroneous_part()

        detailed_message = self._build_detailed_message()
        super().__init__(detailed_message)

    def _extract_erroneous_part(self) -> Optional[str]:
        try:
            return self.text[self.start_index:self.end_index]
        except IndexError:
            return "<invalid index range>"

    def _build_detailed_message(self) -> str:
        context = f"\nLine: {self.line}, Column: {self.column}, Index: {self.start_index}"
        if self.erroneous_part:
            context += f"\nErroneous part: {repr(self.erroneous_part)}"
        return f"{self.message}{context}"

    def __str__(self) -> str:
        return self.args[0]


class InstanceFieldException(InstanceFormatException):
    """
    A decoded instance has a missing or malformed field.

    Attributes:
        path (str): Dotted path of the field, e.g. ``subcomplexes.E1``.
    """

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def decode_json(text: str) -> BaseTypes:
    try:
        return json.loads(text)
    except JSONDecodeError as e:
        raise InstanceDecodeException("Invalid instance file", text, e) from e


def encode_json(value: Any, indentation: int = DEFAULT_INDENTATION) -> str:
    return json.dumps(value, indent=indentation, sort_keys=True, ensure_ascii=False)


class JsonReportFormatter(AbstractReportFormatter):
    def __init__(self, timing: bool = False):
        self._indentation = DEFAULT_INDENTATION
        self._timing = timing

    @property
    def indentation(self) -> int:
        return self._indentation

    def set_indentation(self, indentation: int) -> None:
        if not isinstance(indentation, int):
            raise IndentationTypeException("indentation must be a number")
        if not MIN_INDENTATION <= indentation <= MAX_INDENTATION:
            raise ValueError(INDENTATION_ERR_MSG)

        self._indentation = indentation

    def format(self, reports: Sequence[Report]) -> str:
        return encode_json([report.to_json(timing=self._timing) for report in reports], self._indentation)


class TableReportFormatter(AbstractReportFormatter):
    _HEADERS = ("instance", "check", "status", "left", "right", "differs at")

    def __init__(self, show_trace: bool = False, timing: bool = False):
        self._show_trace = show_trace
        self._timing = timing

    def _row(self, report: Report) -> Sequence[str]:
        row = [
            report.instance,
            report.check,
            report.status.value,
            str(report.left) if report.left is not None else "-",
            str(report.right) if report.right is not None else "-",
            ",".join(str(m) for m in report.differing_degrees) or "-",
        ]
        if self._timing:
            row.append(f"{report.elapsed:.3f}s")
        return row

    def format(self, reports: Sequence[Report]) -> str:
        headers = list(self._HEADERS) + (["time"] if self._timing else [])
        rows = [headers] + [list(self._row(report)) for report in reports]
        widths = [max(len(row[i]) for row in rows) for i in range(len(headers))]
        lines = ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows]
        for report in reports:
            if report.detail:
                lines.append(f"{report.instance}: {report.detail}")
            if self._show_trace and report.trace:
                lines.append(report.trace)
        return "\n".join(lines)


__all__ = [
    "AbstractReportFormatter",
    "JsonReportFormatter",
    "TableReportFormatter",
    "ReportFormatterException",
    "IndentationTypeException",
    "InstanceFormatException",
    "InstanceDecodeException",
    "InstanceFieldException",
    "decode_json",
    "encode_json",
]
