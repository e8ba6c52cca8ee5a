from ._core import *  # noqa: F401,F403
from ._core import Complex, Error, ParseError, DomainError, RingMismatch, UnsupportedRing  # noqa: F401
