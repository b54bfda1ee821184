"""
ScaledZX is an exact implementation of the scaled stabilizer ZX-calculus: diagrams, exactly
scaled rewrite rules, an exact tensor oracle and graphical normal forms.
"""
