"""
Verification suites run by verify_structures.py, one per command.
"""

from .base_suite import BaseSuite
from .sampling import Sampler

__all__ = ['BaseSuite', 'Sampler']
