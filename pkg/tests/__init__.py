"""
Test suite for knot_parity
"""
