import sys

from dmmm_scheduler.cli import main

sys.exit(main())
