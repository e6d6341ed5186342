"""Exact tools for lens space fillings, replaceable linear plumbings and
planar Lefschetz fibrations."""

from .budding import bud_left, bud_right, budding_closure, debud, is_budding_of, is_one_replaceable
from .cfrac import NotAdmissible, cf_dual, cf_eval, cf_expand, cf_reverse, mod_inverse
from .lisca import (
    LensSpace,
    casson_harer_predicate,
    fillings,
    is_k_replaceable,
    min_filling_euler,
    theorem1_families,
    two_replaceable_witnesses,
    verify_theorem1,
)
from .palf import (
    Factorization,
    boundary_h1_palf,
    daisy_substitute,
    euler_char_palf,
    h1_total,
    key_pair_check,
    lantern_substitute,
)
from .plumbing import PlumbingTree, Presentation, abelianization, tree_invariants
from .smith import AbelianGroup, cokernel, smith_normal_form
from .zerostrings import BaseType, base_type, enumerate_zero_strings, is_zero_string

__version__ = "0.1.0"
