"""Annihilating-submodule graphs of finite modules over products of residue rings.

Thin wrapper over the native ``_core`` extension. Rings are written as comma-separated
moduli (``"12"`` or ``"4,3"``), modules as ``;``-separated divisor tuples (``"4;3"``).
"""

import json

from . import _core
from ._core import AnnigraphError, CapExceeded, families

__all__ = ["AnnigraphError", "CapExceeded", "describe", "families", "family_instances", "graph", "params", "suite_run"]


def describe(ring: str, module: str) -> dict:
    """Submodule lattice and structure report of the module."""
    return json.loads(_core.describe(ring, module))


def graph(ring: str, module: str, *, star: bool = False, format: str = "json"):
    """AG(M), or AG(M)* with ``star=True``. ``format="json"`` returns a dict, dot/csv return text."""
    text = _core.graph(ring, module, star, format)
    return json.loads(text) if format == "json" else text


def params(ring: str, module: str, *, star: bool = False, exact_cap: int = 26) -> dict:
    return json.loads(_core.params(ring, module, star, exact_cap))


def suite_run(families=(), budget: int = 36, claims=(), *, format: str = "json", exact_cap: int = 26, threads: int = 0):
    """Run the claim checks. Returns ``(report, green)``; the report is a dict for json, text for md."""
    text, green = _core.suite_run(list(families), budget, list(claims), format, exact_cap, threads)
    return (json.loads(text) if format == "json" else text), green


def family_instances(family: str, budget: int = 36):
    """(ring, module) text pairs generated for a family."""
    return _core.family_instances(family, budget)
