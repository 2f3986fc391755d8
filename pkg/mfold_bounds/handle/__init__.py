"""
Command handlers returning report data and exit codes
"""

from . import base, checks, tables
