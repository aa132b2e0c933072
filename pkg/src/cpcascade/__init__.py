"""Kostant cascade, parabolic nilradicals and commutative polarisations.

Modules: ``rootsys`` (root data), ``cascade``, ``parabolic`` (nilradicals and
optimisation), ``abelian`` (abelian b-ideals), ``cpclassify`` (CP decision and
witnesses), ``oracle`` (brute-force cross-checks) and ``cli``.
"""

__version__ = "0.1.0"
