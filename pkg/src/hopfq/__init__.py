"""Bicrossproduct Hopf quasigroups from group factorisations through a transversal."""

__version__ = "0.1.0"
