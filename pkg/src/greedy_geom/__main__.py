import sys

from greedy_geom.cli import main

sys.exit(main())
