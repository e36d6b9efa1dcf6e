import sys

from jacsys.cli import main

sys.exit(main())
