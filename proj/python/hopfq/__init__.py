"""Exact quantized Hopf hierarchy."""

from ._hopfq import *  # noqa: F401,F403
from ._hopfq import RefusedError  # noqa: F401
