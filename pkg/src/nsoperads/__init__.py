"""Exact-arithmetic calculus for nonsymmetric operads and brick manifolds.

Everything is computed over the rationals with :class:`fractions.Fraction`;
no floating point enters any certified value.  The package provides

- ordinals, planar trees and gap combinatorics (:mod:`nsoperads.ordinals`,
  :mod:`nsoperads.trees`),
- the free nonsymmetric operad on graded generators, with Koszul signs
  (:mod:`nsoperads.free_operad`),
- Groebner bases, normal monomials and Koszul duality for operad
  presentations (:mod:`nsoperads.groebner`),
- a catalog of named operads with certified dimension tables
  (:mod:`nsoperads.zoo`),
- subspace configurations, their operadic composition and stratification
  (:mod:`nsoperads.brick`),
- lattice polytopes, normal fans and Betti numbers attached to planar
  trees (:mod:`nsoperads.polytopes`),
- psi-class correlators with closed form and topological recursions
  (:mod:`nsoperads.correlators`),
- multilinear operators over graded spaces, Borjeson products, difference
  operator calculus, deformations of operad algebras and the Weyl-type
  star product (:mod:`nsoperads.multilinear`, :mod:`nsoperads.borjeson`,
  :mod:`nsoperads.givental`).
"""

__version__ = "0.1.0"
