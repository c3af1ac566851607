"""Weyl group, torus cohomology and cross-ratio cocycle toolkit."""
