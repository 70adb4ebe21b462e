"""Piece partitions of parabolic varieties.

Combinatorial layer: finite Coxeter groups, the stabilizing sequence
calculus and its bijection with minimal coset representatives, and exact
q-polynomial dimension/point counts.  Oracle layer: brute-force flag
geometry over small finite fields that recomputes the same partition from
scratch.  See the README for the command line interface.
"""

from .cartan import CartanType, RootSystem, UnknownType, root_system
from .coxeter import (CapExceeded, CoxeterPresentation, Element, Group,
                      NotSimple, Twist, TwistNotSimpleOnSubset,
                      diagram_automorphisms, enumerate_group, flip_twist,
                      identity_twist)

__version__ = "0.1.0"
