import abc
from typing import Dict, List, Sequence, Union

from PyCayley_Cohomology._report import Report

BaseTypes = Union[str, int, float, bool, None, List, Dict]


class AbstractReportFormatter(abc.ABC):
    """
    Abstract base class for report formatters.
    """
    @abc.abstractmethod
    def format(self, reports: Sequence[Report]) -> str: ...
