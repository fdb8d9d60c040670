"""Exact fractional-ideal calculus with star operations over small Noetherian domains."""

from .core import (
    OverringHandle,
    add,
    colon,
    contains,
    endo_ring,
    inverse,
    iso_witness,
    mul,
    power,
    scale,
    t_closure,
    v_closure,
    v_closure_rel,
)
from .domains import domain_from_config, load_domain
from .monomial import Monomial2
from .numsemigroup import NumericalSemigroup
from .pullback import Pullback
from .quadratic import QuadNumber, QuadOrder
from .regularity import (
    Verdict,
    boole_at,
    check,
    clifford_at,
    l_stable_at,
    stable_at,
    strongly_stable_at,
    t_idempotent_at,
    t_invertible_in_endo,
)

__version__ = "0.1.0"
