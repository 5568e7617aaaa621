"""
Test package for QueryLean.
"""
