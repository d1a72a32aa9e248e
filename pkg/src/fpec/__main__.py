import sys

from fpec.cli import main

sys.exit(main())
