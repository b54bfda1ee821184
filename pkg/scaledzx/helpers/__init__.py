"""
Contains helper functions for the ScaledZX application
"""
