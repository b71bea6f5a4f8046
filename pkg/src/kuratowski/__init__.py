"""
Closure-algebra workbench for Kuratowski's 14-set problem
"""

__version__ = "0.1.0"
