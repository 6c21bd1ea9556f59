import sys

from arfima_xcorr.cli import main

sys.exit(main())
