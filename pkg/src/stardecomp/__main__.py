import sys

from stardecomp.cli import main

sys.exit(main())
