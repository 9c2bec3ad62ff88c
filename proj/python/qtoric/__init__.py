"""Exact cohomology and q-ample cones of simplicial projective toric varieties.

Thin wrapper over the compiled extension: rational values cross the boundary
as strings; helpers here convert to fractions.Fraction where useful.
"""

from fractions import Fraction

try:
    from ._core import *  # noqa: F401,F403
    from . import _core
except ImportError:  # running against a build tree
    from _core import *  # noqa: F401,F403
    import _core


def _coeffs(values):
    return [str(v) for v in values]


def hhat_value(fan, divisor, i):
    """hhat as a Fraction; divisor entries may be ints, strings or Fractions."""
    return Fraction(_core.hhat(fan, _coeffs(divisor), i))


def cohomology_dims(fan, divisor):
    return _core.cohomology(fan, _coeffs(divisor))["dims"]


def level(fan, point):
    return _core.ampleness_level(fan, _coeffs(point))
