"""Exact computational algebra for a pair of 24-dimensional Hopf algebras.

The package builds, over the exact number field Q(x)[t]/(t^2-(2-x)) with
x a primitive sixth root of unity, two families of structures:

* the 24-dimensional Hopf algebras ``H`` and ``K`` (and their duals,
  graded versions, and the 576-dimensional Drinfeld double of ``H``),
* their simple Yetter-Drinfeld modules with explicit braidings, the
  Nichols algebras those braidings generate, and the finite-dimensional
  liftings assembled from them.

Everything is verified with exact arithmetic: no floating point enters
any certified statement.
"""

__version__ = "0.1.0"
