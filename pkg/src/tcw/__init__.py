"""Exact invariants of smooth projective toric varieties and their cobordism classes."""
from .charnum import ChernVector, chern_numbers, generalized_todd_genus, todd_genus, todd_table
from .classifier import (Verdict, classify, classify_omega2, classify_omega4,
                         classify_omega6, classify_omega8)
from .constructions import (FamilySpec, blowup_fixed_point, cpn, delta_ab, kleinschmidt,
                            sigma_a)
from .errors import ToricError
from .fan import Fan, is_complete, is_projective, is_regular, star_subdivide
from .ktheory import derive_divisibility_lattice, hattori_stong_check, kappa_form

__version__ = "0.1.0"

__all__ = [
    "ChernVector", "Fan", "FamilySpec", "ToricError", "Verdict",
    "blowup_fixed_point", "chern_numbers", "classify", "classify_omega2",
    "classify_omega4", "classify_omega6", "classify_omega8", "cpn", "delta_ab",
    "derive_divisibility_lattice", "generalized_todd_genus", "hattori_stong_check",
    "is_complete", "is_projective", "is_regular", "kappa_form", "kleinschmidt",
    "sigma_a", "star_subdivide", "todd_genus", "todd_table",
]
