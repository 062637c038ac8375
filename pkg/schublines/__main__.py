import sys

from schublines.cli.main import main

sys.exit(main())
