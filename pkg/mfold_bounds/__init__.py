"""
m-fold bi-univalent coefficient bounds
"""

__version__ = "1.0.0"
