"""Right-loop workbench: Cayley tables, twists, transversals and the
symbolic twisted integer loops over the infinite dihedral group."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
