import sys

from dyckpath.cli import main

sys.exit(main())
