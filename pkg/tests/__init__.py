"""
mfold_bounds tests
"""

import sys
from os import path

# Run from a checkout without installing the package
sys.path.insert(0, path.dirname(path.dirname(path.abspath(__file__))))
