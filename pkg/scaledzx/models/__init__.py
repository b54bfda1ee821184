"""
Models for ScaledZX
"""
