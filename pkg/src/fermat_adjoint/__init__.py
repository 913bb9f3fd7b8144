"""Adjoint linear systems on free cyclic quotients of Fermat hypersurfaces."""

__version__ = "0.1.0"
