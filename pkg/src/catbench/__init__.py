"""catbench: a finite-data workbench for cartesian monads, Kleisli pullback
calculus, internal categories/groupoids, and T-categories (generalized multicategories)."""

__version__ = "0.1.0"
