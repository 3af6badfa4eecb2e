"""Product-formula error laboratory for radial Coulomb dynamics.

Thin wrapper over the compiled module; see the project README for the build
steps that produce `_trotterlab`.
"""

from _trotterlab import *  # noqa: F401,F403
from _trotterlab import __doc__  # noqa: F401
