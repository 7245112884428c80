"""Exact numerical toolkit for weak stability conditions on K3 surfaces
with a (-2)-curve: central charges, spherical twists on Mukai vectors,
charge transport, and wall screens for line bundles."""

from .charge import (
    ChargeParams,
    ComplexExact,
    Phase,
    central_charge,
    kernel_contains,
    kernel_rule,
    limit_phase,
    phase,
    slope,
)
from .errors import K3StabError
from .lattice import (
    DivisorClass,
    IntersectionLattice,
    decompose_cd,
    enumerate_cone_classes,
    pair,
)
from .mukai import (
    ChernCharacter,
    MukaiVector,
    euler_chi,
    hom_ext_on_c,
    is_spherical,
    mukai_from_chern,
    mukai_pairing,
    twisted_chern,
)
from .surface_models import (
    SurfaceModel,
    build_d_class,
    build_example_rank2,
    load_surface,
    read_surface,
    save_surface,
    validate_surface,
)
from .transport import (
    Gl2Factor,
    TransportCoords,
    coords_from_divisor,
    non_nef_image,
    solve_case_one,
    solve_case_three,
    solve_case_two,
    verify_transport,
)
from .twist import TwistParams, skyscraper_twist, twist_invariants, twist_mukai
from .walls import (
    bg_discriminant,
    hit_bound_check,
    rank_bound,
    rank_one_screen,
    rank_threshold,
    semistable_screen,
    slope_compare_twist,
    wall_value,
)

__version__ = "0.1.0"
