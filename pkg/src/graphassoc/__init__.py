"""Graph associahedra, cellular projections and the shuffle algebras built on their faces."""

__version__ = "0.1.0"
