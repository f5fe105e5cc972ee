"""Exact combinatorics of flat vector configurations: external
semi-activity polynomials, spanning-tree polynomials of Eulerian digraphs,
Alexander polynomials of special alternating links, zonotope trimming, and
box-positivity certificates.
"""

__version__ = "0.1.0"
