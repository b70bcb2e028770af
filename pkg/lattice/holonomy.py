"""
Leaf holonomies and the translation vectors they encode.

zeta(K) = R120^β · R60^b3 · QI^b2 · QJ^b1 · E8TH^b0, multiplied left to right.
Scaled by 2 (b0 = 0) or 2√2 (b0 = 1) it is the integer vector from a supernode
to the neighbour reached through leaf K. Nothing here touches floats except
the axis of axis_angle, which is informative only.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import pandas as pd

from algebra.geometry import Vec4, first_shell, quat_to_vec, second_shell
from algebra.quat import GENERATORS, IDENTITY, ExactQuaternion, ExactScalar, axis_angle
from hyperfoam.exceptions import ExactnessError, InvariantViolation
from lattice.supernode import LEAF_COUNT, leaf_code

logger = logging.getLogger(__name__)

TWO = ExactScalar(2)
TWO_SQRT2 = ExactScalar(0, 2)


@lru_cache(maxsize=None)
def zeta(K: int) -> ExactQuaternion:
    code = leaf_code(K)
    g = GENERATORS
    result = IDENTITY
    for factor, power in (
        (g.R120, code.beta),
        (g.R60, code.b3),
        (g.QI, code.b2),
        (g.QJ, code.b1),
        (g.E8TH, code.b0),
    ):
        result = result * factor**power
    return result


@lru_cache(maxsize=None)
def leaf_direction(K: int) -> Vec4:
    code = leaf_code(K)
    scale = TWO if code.b0 == 0 else TWO_SQRT2
    try:
        return quat_to_vec(zeta(K).scale(scale))
    except ExactnessError as exc:
        # a non-integer direction means the holonomy convention is broken
        raise ExactnessError(f"leaf {K}: direction {zeta(K).scale(scale)} is not integral") from exc


def modulus2(K: int) -> int:
    return 4 if leaf_code(K).b0 == 0 else 8


def direction_bijection_check() -> bool:
    directions = [leaf_direction(K) for K in range(1, LEAF_COUNT + 1)]
    if len(set(directions)) != LEAF_COUNT:
        return False
    near = {leaf_direction(K) for K in range(1, LEAF_COUNT + 1) if leaf_code(K).b0 == 0}
    far = {leaf_direction(K) for K in range(1, LEAF_COUNT + 1) if leaf_code(K).b0 == 1}
    return near == set(first_shell().vectors) and far == set(second_shell().vectors)


def require_direction_bijection():
    if not direction_bijection_check():
        logger.error("leaf directions do not biject onto the two 24-cell shells")
        raise InvariantViolation("leaf directions do not biject onto the two 24-cell shells")


@lru_cache(maxsize=None)
def _leaf_by_direction() -> dict[Vec4, int]:
    require_direction_bijection()
    return {leaf_direction(K): K for K in range(1, LEAF_COUNT + 1)}


def opposite_leaf(K: int) -> int:
    return _leaf_by_direction()[leaf_direction(K).negated()]


def leaf_for_direction(direction) -> int:
    return _leaf_by_direction()[Vec4(*direction)]


def unit_group_closed() -> bool:
    """The 24 holonomies with b0 = 0 are closed under multiplication."""
    units = {zeta(K) for K in range(1, LEAF_COUNT + 1) if leaf_code(K).b0 == 0}
    return len(units) == 24 and all(a * b in units for a in units for b in units)


@dataclass(frozen=True)
class LeafHolonomy:
    K: int
    zeta: ExactQuaternion
    omega: Fraction
    axis_tag: str | None
    modulus2: int
    direction: Vec4


def leaf_holonomy(K: int) -> LeafHolonomy:
    z = zeta(K)
    split = axis_angle(z)
    return LeafHolonomy(K, z, split.omega, split.tag, modulus2(K), leaf_direction(K))


def _fraction(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def regenerate_table() -> pd.DataFrame:
    """One row per leaf: exact zeta components as strings, omega, axis tag, direction."""
    rows = []
    for K in range(1, LEAF_COUNT + 1):
        h = leaf_holonomy(K)
        rows.append(
            {
                "K": K,
                "w": str(h.zeta.w),
                "x": str(h.zeta.x),
                "y": str(h.zeta.y),
                "z": str(h.zeta.z),
                "omega": _fraction(h.omega),
                "axis": h.axis_tag or "",
                "modulus2": h.modulus2,
                "direction": " ".join(str(c) for c in h.direction),
            }
        )
    return pd.DataFrame(rows, columns=["K", "w", "x", "y", "z", "omega", "axis", "modulus2", "direction"])
