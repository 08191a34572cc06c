"""Surface Smoothing - exact invariants of rational surface singularities and their smoothings."""
__version__ = "1.0.0"
