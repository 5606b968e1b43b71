"""Generation and invariable generation of finite soluble groups."""

from .constructions import (
    StructuredGroup,
    gaschutz_d,
    materialize,
    prop_geq_group,
    semidirect_module_group,
    tower_group,
    wreath_regular,
)
from .expr import build, parse
from .gen import (
    InvGenCertificate,
    d_I,
    d_min_generators,
    generates,
    invariably_generates,
    invariably_generates_bruteforce,
)
from .group import PermGroup, group_from_generators, quotient
from .lifting import (
    find_lifting_witness,
    lifting_bound,
    prop_le_construct,
    structured_dI_lower_bound,
    two_gen_dichotomy_check,
)
from .modrep import GModule, meataxe_decompose, regular_module, smallest_splitting_prime
from .perm import Permutation

__all__ = [
    "GModule", "InvGenCertificate", "PermGroup", "Permutation", "StructuredGroup",
    "build", "d_I", "d_min_generators", "find_lifting_witness", "gaschutz_d", "generates",
    "group_from_generators", "invariably_generates", "invariably_generates_bruteforce",
    "lifting_bound", "materialize", "meataxe_decompose", "parse", "prop_geq_group",
    "prop_le_construct", "quotient", "regular_module", "semidirect_module_group",
    "smallest_splitting_prime", "structured_dI_lower_bound", "tower_group",
    "two_gen_dichotomy_check", "wreath_regular",
]
