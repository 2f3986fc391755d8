"""
python -m mfold_bounds
"""

import sys

from mfold_bounds.cli import main

sys.exit(main())
