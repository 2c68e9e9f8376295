"""
Quantum Amplitude Arithmetic Toolkit
Command-Line Entry Point

This is a thin wrapper that imports from the qaa package.
The command group is located in qaa/cli.py
"""

if __name__ == '__main__':
    from qaa.cli import main

    main()
