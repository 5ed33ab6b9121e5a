"""
PBW-type monomial bases of Demazure-like submodules for types A and C.

Modules: ``roots`` (positive roots, orders, Dyck paths), ``joins`` (join of a
root pair), ``admissible`` (admissible root subsets), ``weyl`` (Weyl groups,
A_w, triangular elements), ``fflv`` (polytope lattice points and faces),
``tableaux`` (semistandard tableaux and permissibility), ``oracles``
(Demazure characters and exact module construction), ``verify`` and ``cli``.
"""

__version__ = "0.1.0"
