"""
Exact quaternion arithmetic over the ring {a + b·√2 : a, b rational}.

Every holonomy and every translation vector used by the network closes in this
ring: u = (i+j+k)/√3 only ever appears multiplied by sin(π/3) or sin(2π/3),
so √3 never has to be stored. Only the five precomposed generators are kept.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from hyperfoam.exceptions import ExactnessError

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class ExactScalar:
    """rat + rad·√2 with both parts as Fractions (always reduced, positive denominator)."""

    rat: Fraction = Fraction(0)
    rad: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "rat", Fraction(self.rat))
        object.__setattr__(self, "rad", Fraction(self.rad))

    @classmethod
    def coerce(cls, value: ExactScalar | Rational) -> ExactScalar:
        if isinstance(value, ExactScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value))
        raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")

    def __add__(self, other):
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return ExactScalar(self.rat + other.rat, self.rad + other.rad)

    __radd__ = __add__

    def __neg__(self) -> ExactScalar:
        return ExactScalar(-self.rat, -self.rad)

    def __sub__(self, other):
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return ExactScalar(
            self.rat * other.rat + 2 * self.rad * other.rad,
            self.rat * other.rad + self.rad * other.rat,
        )

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.rat == other.rat and self.rad == other.rad

    def __hash__(self) -> int:
        return hash((self.rat, self.rad))

    def __bool__(self) -> bool:
        return bool(self.rat) or bool(self.rad)

    @property
    def is_rational(self) -> bool:
        return self.rad == 0

    @property
    def is_integer(self) -> bool:
        return self.is_rational and self.rat.denominator == 1

    def as_integer(self) -> int:
        if not self.is_integer:
            raise ExactnessError(f"{self} is not an integer")
        return self.rat.numerator

    def sign(self) -> int:
        """Sign of the real number; exact, never goes through floats."""
        a, b = self.rat, self.rad
        if a >= 0 and b >= 0:
            return 0 if a == 0 and b == 0 else 1
        if a <= 0 and b <= 0:
            return -1
        # opposite signs: compare a² with 2b²
        if a > 0:
            return 1 if a * a > 2 * b * b else -1
        return 1 if 2 * b * b > a * a else -1

    def to_float(self) -> float:
        return float(self.rat) + float(self.rad) * math.sqrt(2)

    def __repr__(self) -> str:
        return f"ExactScalar({self.rat}, {self.rad})"

    def __str__(self) -> str:
        if not self.rad:
            return _fraction_str(self.rat)
        rad = f"{_fraction_str(self.rad)}·√2"
        if not self.rat:
            return rad
        sign = "-" if self.rad < 0 else "+"
        return f"{_fraction_str(self.rat)}{sign}{_fraction_str(abs(self.rad))}·√2"


def _fraction_str(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
HALF = ExactScalar(Fraction(1, 2))
SQRT2 = ExactScalar(0, 1)
SQRT2_HALF = ExactScalar(0, Fraction(1, 2))


@dataclass(frozen=True)
class ExactQuaternion:
    """w + x·i + y·j + z·k with ExactScalar components, basis order {1, i, j, k}."""

    w: ExactScalar
    x: ExactScalar
    y: ExactScalar
    z: ExactScalar

    @classmethod
    def of(cls, w=0, x=0, y=0, z=0) -> ExactQuaternion:
        return cls(*(ExactScalar.coerce(c) for c in (w, x, y, z)))

    @property
    def components(self) -> tuple[ExactScalar, ExactScalar, ExactScalar, ExactScalar]:
        return (self.w, self.x, self.y, self.z)

    def __mul__(self, other: ExactQuaternion) -> ExactQuaternion:
        if not isinstance(other, ExactQuaternion):
            return NotImplemented
        a, b = self, other
        return ExactQuaternion(
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
        )

    def __pow__(self, exponent: int) -> ExactQuaternion:
        if exponent < 0:
            raise ExactnessError("negative powers are not supported; multiply by the conjugate")
        result = IDENTITY
        for _ in range(exponent):
            result = result * self
        return result

    def __neg__(self) -> ExactQuaternion:
        return ExactQuaternion(-self.w, -self.x, -self.y, -self.z)

    def conj(self) -> ExactQuaternion:
        return ExactQuaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self) -> ExactScalar:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def scale(self, factor: ExactScalar | Rational) -> ExactQuaternion:
        factor = ExactScalar.coerce(factor)
        return ExactQuaternion(*(factor * c for c in self.components))

    @property
    def is_unit(self) -> bool:
        return self.norm2() == ONE

    def to_float(self) -> tuple[float, float, float, float]:
        return tuple(c.to_float() for c in self.components)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"


IDENTITY = ExactQuaternion.of(1)


class GeneratorSet(NamedTuple):
    R120: ExactQuaternion
    R60: ExactQuaternion
    QI: ExactQuaternion
    QJ: ExactQuaternion
    E8TH: ExactQuaternion


_H = Fraction(1, 2)

# exp(2π·u/3), exp(2π·u/6), exp(2π·i/4), exp(2π·j/4), exp(2π·i/8)
GENERATORS = GeneratorSet(
    R120=ExactQuaternion.of(-_H, _H, _H, _H),
    R60=ExactQuaternion.of(_H, _H, _H, _H),
    QI=ExactQuaternion.of(0, 1, 0, 0),
    QJ=ExactQuaternion.of(0, 0, 1, 0),
    E8TH=ExactQuaternion(SQRT2_HALF, SQRT2_HALF, ZERO, ZERO),
)


def q_mul(a: ExactQuaternion, b: ExactQuaternion) -> ExactQuaternion:
    return a * b


def q_conj(a: ExactQuaternion) -> ExactQuaternion:
    return a.conj()


def q_norm2(a: ExactQuaternion) -> ExactScalar:
    return a.norm2()


def q_neg(a: ExactQuaternion) -> ExactQuaternion:
    return -a


def to_float(a: ExactQuaternion) -> tuple[float, float, float, float]:
    """Lossy. For exports and metrics only."""
    return a.to_float()


# cos(2π·ω) → ω for every real part a unit holonomy of the network can have.
_OMEGA_BY_COS = {
    ONE: Fraction(0),
    SQRT2_HALF: Fraction(1, 8),
    HALF: Fraction(1, 6),
    ZERO: Fraction(1, 4),
    -HALF: Fraction(1, 3),
    -SQRT2_HALF: Fraction(3, 8),
    -ONE: Fraction(1, 2),
}


class AxisAngle(NamedTuple):
    omega: Fraction
    axis: tuple[float, float, float] | None
    tag: str | None

    def recompose(self) -> tuple[float, float, float, float]:
        """exp(2π·omega·axis) as floats."""
        angle = 2 * math.pi * float(self.omega)
        if self.axis is None:
            return (math.cos(angle), 0.0, 0.0, 0.0)
        s = math.sin(angle)
        return (math.cos(angle), s * self.axis[0], s * self.axis[1], s * self.axis[2])


def _axis_tag(x: ExactScalar, y: ExactScalar, z: ExactScalar) -> str | None:
    if x == y == z:
        return "u" if x.sign() > 0 else "-u"
    nonzero = [(name, c) for name, c in zip("ijk", (x, y, z)) if c]
    if len(nonzero) == 1:
        name, c = nonzero[0]
        return name if c.sign() > 0 else f"-{name}"
    return None


def axis_angle(a: ExactQuaternion) -> AxisAngle:
    """
    Split a unit quaternion as exp(2π·omega·axis) with omega in [0, 1/2].

    omega is exact; the axis is returned as floats plus a symbolic tag when it
    is exactly ±u or a signed basis axis. For ±1 the axis is undefined (None).
    """
    if not a.is_unit:
        raise ExactnessError(f"axis_angle needs a unit quaternion, got norm² {a.norm2()}")
    try:
        omega = _OMEGA_BY_COS[a.w]
    except KeyError:
        raise ExactnessError(f"real part {a.w} is not a tabulated cosine") from None
    if omega in (0, Fraction(1, 2)):
        return AxisAngle(omega, None, None)
    sin = math.sin(2 * math.pi * float(omega))
    axis = (a.x.to_float() / sin, a.y.to_float() / sin, a.z.to_float() / sin)
    return AxisAngle(omega, axis, _axis_tag(a.x, a.y, a.z))
