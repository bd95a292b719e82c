# -*- coding: utf-8 -*-

"""Normal quotients of 4-valent half-arc-transitive graph-group pairs"""

__version__ = "0.1.0"

from .permutations import Permutation, PermGroup, Subgroup
from .families import FamilyId, make_pair
from .quotients import verify_og4, normal_quotient
from .classifier import is_basic, theorem_predicate, sweep  # pylint: disable=cyclic-import
from .formats import formatter  # pylint: disable=cyclic-import

__all__ = [
    "Permutation",
    "PermGroup",
    "Subgroup",
    "FamilyId",
    "make_pair",
    "verify_og4",
    "normal_quotient",
    "is_basic",
    "theorem_predicate",
    "sweep",
    "formatter",
]
