"""q-deformed VBS chain: transfer-matrix spectra, correlators and a brute-force oracle."""

from ._core import *  # noqa: F401,F403
from ._core import BudgetExceeded, InvalidArgument, InvalidSpinTriple, cli

__version__ = "0.1.0"


def main() -> int:
    import sys

    code, out, err = cli(sys.argv[1:])
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
