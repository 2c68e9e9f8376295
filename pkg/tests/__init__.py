"""
Tests Package for the Quantum Amplitude Arithmetic Toolkit
"""
