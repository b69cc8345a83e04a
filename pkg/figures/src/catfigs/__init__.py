"""Figure rendering for catgates scenario artifacts.

Consumes only the documented CSV/JSON outputs of `catgates scenario`;
no dependency on the simulation package itself.
"""

__version__ = "0.1.0"

from . import io, render  # noqa: F401
