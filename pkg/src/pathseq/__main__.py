import sys

from pathseq.cli import main

sys.exit(main())
