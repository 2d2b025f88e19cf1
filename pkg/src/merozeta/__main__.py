import sys

from merozeta.cli import main

sys.exit(main())
