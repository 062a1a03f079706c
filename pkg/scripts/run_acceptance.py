"""Run the acceptance criteria and print one line per criterion.

    python scripts/run_acceptance.py                      # fixtures + synthetic tier
    python scripts/run_acceptance.py --census ks3.palp    # adds the census tier
"""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent

if __name__ == "__main__":
    args = [str(ROOT / "tests" / "test_acceptance.py"), "-q", "-p", "no:cacheprovider", *sys.argv[1:]]
    sys.exit(pytest.main(args))
