import sys

from consensus_core.cli import main

sys.exit(main())
