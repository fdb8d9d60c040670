"""Domain descriptors from JSON-style configuration dictionaries."""
from __future__ import annotations

import json
from pathlib import Path

from .errors import InvalidDomain
from .monomial import Monomial2
from .numsemigroup import NumericalSemigroup
from .pullback import Pullback
from .quadratic import QuadOrder


def domain_from_config(cfg: dict):
    kind = cfg.get("kind")
    if kind == "quadratic":
        return QuadOrder(int(cfg["d_K"]), int(cfg.get("f", 1)))
    if kind == "numerical_semigroup":
        return NumericalSemigroup(tuple(cfg["generators"]))
    if kind in ("monomial2", "monomial2_local"):
        return Monomial2(local=kind == "monomial2_local")
    if kind == "pullback":
        base = cfg.get("base", {"kind": "monomial2_local"})
        return Pullback(base.get("kind"), bool(cfg.get("subfield_proper", True)))
    raise InvalidDomain(f"unknown domain kind {kind!r}")


def load_domain(path) -> object:
    return domain_from_config(json.loads(Path(path).read_text()))
