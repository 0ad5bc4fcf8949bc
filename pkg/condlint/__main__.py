"""condlint unified entry point"""

import sys

from condlint.cli import main

if __name__ == "__main__":
    sys.exit(main())
