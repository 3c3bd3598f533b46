"""Ground-state nearest-neighbor concurrence of the XXZ model.

Thin Python layer over the C++ core: exact diagonalization on finite
hypercubic lattices, linear spin-wave theory for d >= 2, and the analysis
helpers used to check concavity, extremum and cusp behavior.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401


def main(argv=None):
    """Entry point mirroring the `xxzent` command-line tool."""
    import sys

    args = ["xxzent"] + list(sys.argv[1:] if argv is None else argv)
    code, out, err = run_cli(args)  # noqa: F405
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
