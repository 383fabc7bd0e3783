"""Connected-set and cop-win reliability polynomials of graphs."""

__version__ = "0.1.0"
