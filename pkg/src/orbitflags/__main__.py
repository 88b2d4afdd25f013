import sys

from orbitflags.cli import main

sys.exit(main())
