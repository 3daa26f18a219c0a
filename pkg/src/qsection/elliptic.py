"""Elliptic curves in short Weierstrass form and prime existence there.

Points are added with the chord-tangent law, and a degree-one integral
divisor is linearly equivalent to exactly one point, namely its group-law
sum.  That makes the prime-existence question for a graded piece a finite
computation: d*D must be an integral divisor of degree one, its group-law
sum P is the only candidate point, and the construction succeeds exactly
when P avoids the fractional support of D.
"""

from __future__ import annotations

from dataclasses import dataclass

from .divisors import EC_ORIGIN, CurvePoint, ECAffine, ECOrigin, QDivisor, _lift
from .errors import MixedCurveError
from .exact_arith import NumberField, Scalar, scalar_div, scalar_is_zero

__all__ = [
    "WeierstrassCurve",
    "ECPrimeVerdict",
    "ec_add",
    "ec_negate",
    "ec_multiply",
    "ec_divisor_sum",
    "ec_is_principal",
    "ec_prime_exists",
]


@dataclass(frozen=True)
class WeierstrassCurve:
    """The smooth projective curve y^2 = x^3 + a*x + b."""

    a: Scalar
    b: Scalar
    field: NumberField | None = None

    def __init__(self, a, b, field: NumberField | None = None):
        a = _lift(a, field)
        b = _lift(b, field)
        disc = (4 * a * a * a + 27 * b * b) * (-16)
        if scalar_is_zero(disc):
            raise ValueError("singular curve: the discriminant vanishes")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "field", field)

    @property
    def discriminant(self) -> Scalar:
        return (4 * self.a * self.a * self.a + 27 * self.b * self.b) * (-16)

    def lift_point(self, pt: CurvePoint) -> CurvePoint:
        if isinstance(pt, ECOrigin):
            return EC_ORIGIN
        if isinstance(pt, ECAffine):
            return ECAffine(_lift(pt.x, self.field), _lift(pt.y, self.field))
        raise MixedCurveError(f"{pt!r} is not a point of a Weierstrass curve")

    def contains(self, pt: CurvePoint) -> bool:
        if isinstance(pt, ECOrigin):
            return True
        if not isinstance(pt, ECAffine):
            return False
        try:
            pt = self.lift_point(pt)
        except MixedCurveError:
            return False
        x, y = pt.x, pt.y
        return y * y == x * x * x + self.a * x + self.b


def _require_on_curve(curve: WeierstrassCurve, pt: CurvePoint) -> CurvePoint:
    pt = curve.lift_point(pt)
    if not curve.contains(pt):
        raise ValueError(f"{pt!r} does not satisfy the curve equation")
    return pt


def ec_negate(curve: WeierstrassCurve, pt: CurvePoint) -> CurvePoint:
    pt = _require_on_curve(curve, pt)
    if isinstance(pt, ECOrigin):
        return EC_ORIGIN
    return ECAffine(pt.x, -pt.y)


def ec_add(curve: WeierstrassCurve, p: CurvePoint, q: CurvePoint) -> CurvePoint:
    """Chord-tangent addition with the origin as identity."""
    p = _require_on_curve(curve, p)
    q = _require_on_curve(curve, q)
    if isinstance(p, ECOrigin):
        return q
    if isinstance(q, ECOrigin):
        return p
    if p.x == q.x:
        if scalar_is_zero(p.y + q.y):
            return EC_ORIGIN
        slope = scalar_div(3 * p.x * p.x + curve.a, 2 * p.y)
    else:
        slope = scalar_div(q.y - p.y, q.x - p.x)
    x3 = slope * slope - p.x - q.x
    y3 = slope * (p.x - x3) - p.y
    return ECAffine(x3, y3)


def ec_multiply(curve: WeierstrassCurve, n: int, pt: CurvePoint) -> CurvePoint:
    """The n-fold group-law multiple of a point, by doubling."""
    pt = _require_on_curve(curve, pt)
    if n < 0:
        return ec_multiply(curve, -n, ec_negate(curve, pt))
    acc: CurvePoint = EC_ORIGIN
    base = pt
    while n:
        if n & 1:
            acc = ec_add(curve, acc, base)
        n >>= 1
        if n:
            base = ec_add(curve, base, base)
    return acc


def ec_divisor_sum(D: QDivisor) -> CurvePoint:
    """Group-law sum of an integral divisor on a Weierstrass curve."""
    if not isinstance(D.curve, WeierstrassCurve):
        raise MixedCurveError("the divisor does not live on a Weierstrass curve")
    if not D.is_integral():
        raise ValueError("the group-law sum is defined for integral divisors")
    acc: CurvePoint = EC_ORIGIN
    for pt, coeff in D.entries:
        acc = ec_add(D.curve, acc, ec_multiply(D.curve, int(coeff), pt))
    return acc


def ec_is_principal(D: QDivisor) -> bool:
    """Whether an integral divisor is the divisor of a rational function.

    On an elliptic curve this holds exactly when the degree is zero and the
    group-law sum is the origin.
    """
    if not D.is_integral():
        raise ValueError("principality is defined for integral divisors")
    if D.degree() != 0:
        return False
    return isinstance(ec_divisor_sum(D), ECOrigin)


@dataclass(frozen=True)
class ECPrimeVerdict:
    exists: bool
    degree: int
    point: CurvePoint | None
    reason: str  # "ok" | "in_frac_support" | "not_linearly_equivalent_to_point"


def ec_prime_exists(D: QDivisor, degree: int) -> ECPrimeVerdict:
    """Decide existence of a homogeneous prime of the given degree.

    The candidate point is forced: d*D must be an integral divisor of
    degree one, and then it is linearly equivalent only to its group-law
    sum P.  The prime exists exactly when P avoids the fractional support
    of D.
    """
    if not isinstance(D.curve, WeierstrassCurve):
        raise MixedCurveError("the divisor does not live on a Weierstrass curve")
    if degree < 1:
        raise ValueError("the degree must be a positive integer")
    dD = D.scale(degree)
    if not dD.is_integral() or dD.degree() != 1:
        return ECPrimeVerdict(
            exists=False,
            degree=degree,
            point=None,
            reason="not_linearly_equivalent_to_point",
        )
    point = ec_divisor_sum(dD)
    if point in D.fractional_support():
        return ECPrimeVerdict(
            exists=False, degree=degree, point=point, reason="in_frac_support"
        )
    return ECPrimeVerdict(exists=True, degree=degree, point=point, reason="ok")
