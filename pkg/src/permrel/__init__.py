"""Computation in monoids presented by permutation relations.

Generators a_1, .., a_n subject to a_1 .. a_n = a_p(1) .. a_p(n) for the
permutations p in a chosen subset of Sym_n.  The subpackages cover
rewriting to normal form, local-confluence certification, congruence
tables built by exhaustive closure, an embedding of the cyclic case
into (free group) x (infinite cyclic), and growth counting.
"""

__version__ = "0.1.0"
