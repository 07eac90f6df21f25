"""Exact intersection theory for the resolved standard Cremona
transformations of P^3 and P^4, Weyl-group actions on point records
through eight points, orbit enumeration and linear-system diagnostics."""

from . import chow, linsys, p3, p4, weyl

__all__ = ["chow", "p3", "p4", "weyl", "linsys"]
__version__ = "0.1.0"
