import sys

from kpaths.cli import main

sys.exit(main())
