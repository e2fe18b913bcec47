from ._linideal import *  # noqa: F401,F403
from ._linideal import __doc__  # noqa: F401
