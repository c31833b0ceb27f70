"""R-sequential edge colorings of near-regular Class 1 graphs."""

from ._core import *  # noqa: F401,F403
from ._core import (  # noqa: F401
    ClassTwoError,
    Error,
    Graph,
    PreconditionError,
    sequentialize,
)
