from ._core import *  # noqa: F401,F403
from ._core import DomainError, MethodInapplicable, NotConverged, NumericError

__version__ = "0.1.0"
