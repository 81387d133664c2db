"""
Tasks Package

Batch runs over seeded random corpora of monomial ideals.
"""
