"""Dilatation, normalized entropy, and concavity probes on fibered faces.

The dilatation of a primitive class in a fibered cone is the largest real
root above 1 of the face polynomial specialized along the class.  Normalized
entropy ||w|| * log(lambda) is constant on commensurable fibrations, so an
entropy gap certifies non-commensurability; equality certifies nothing.
1/ent extends to the open face by homogeneity and is strictly concave there,
which the probe operation samples at rational triples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence, Union

from .errors import (
    MissingPolynomial,
    NotInCone,
    NotOnFace,
    NotPrimitive,
    ValidationError,
    ZeroClass,
)
from .lattice import CohomologyClass, is_primitive
from .laurent import ROOT_TOL, largest_real_root, specialize
from .norm import FiberedFace, NormBall, cone_contains, evaluate_norm

ENTROPY_TOL = 1e-9

Vector = Sequence[Union[int, Fraction]]


@dataclass(frozen=True)
class EntropyRecord:
    """Entropy data of one fibration class: norm, dilatation, their product."""

    fibration_class: CohomologyClass
    norm: Fraction
    dilatation: float
    entropy: float

    def __post_init__(self) -> None:
        if self.norm <= 0:
            raise ValidationError("entropy records need positive norm")
        if self.dilatation <= 1:
            raise ValidationError("dilatation must exceed 1")
        if self.entropy <= 0:
            raise ValidationError("normalized entropy must be positive")


def dilatation(face: FiberedFace, w: CohomologyClass, tol: float = ROOT_TOL, ball: NormBall | None = None) -> float:
    """Largest real root above 1 of the face polynomial specialized at w.

    The class must be primitive; callers holding a multiple must reduce to
    the primitive class on its ray first.  When a ball is supplied the open
    cone membership is verified, otherwise it is taken on trust.

    Raises:
        NotPrimitive: for non-primitive classes.
        MissingPolynomial: when the face carries no polynomial.
        NotInCone: when a ball is given and w is outside the open cone.
        NoRootAboveOne: propagated from root isolation.
    """
    if not is_primitive(w):
        raise NotPrimitive(f"class {w.coords} is not primitive; reduce to its ray generator")
    if face.polynomial is None:
        raise MissingPolynomial(f"face {face.id} carries no polynomial")
    if ball is not None and not cone_contains(face, ball, w):
        raise NotInCone(f"class {w.coords} is not in the open cone over face {face.id}")
    return largest_real_root(specialize(face.polynomial, w), tol)


def normalized_entropy(ball: NormBall, face: FiberedFace, w: CohomologyClass, tol: float = ROOT_TOL) -> EntropyRecord:
    """Entropy record ||w|| * log(lambda(w)) for a primitive class in the cone."""
    lam = dilatation(face, w, tol, ball=ball)
    nrm = evaluate_norm(ball, w)
    return EntropyRecord(
        fibration_class=w,
        norm=nrm,
        dilatation=lam,
        entropy=float(nrm) * math.log(lam),
    )


def primitive_on_ray(vec: Vector) -> CohomologyClass:
    """The primitive integral class on the ray through a rational point.

    Orientation is preserved: the result is a positive multiple of vec.

    Raises:
        ZeroClass: for the zero vector.
    """
    fracs = [Fraction(x) for x in vec]
    if all(f == 0 for f in fracs):
        raise ZeroClass("the zero vector spans no ray")
    scale = 1
    for f in fracs:
        scale = scale * f.denominator // math.gcd(scale, f.denominator)
    ints = [int(f * scale) for f in fracs]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
    return CohomologyClass(tuple(v // g for v in ints))


def ent_at_face_point(ball: NormBall, face: FiberedFace, p: Vector, tol: float = ROOT_TOL) -> float:
    """Normalized entropy at a rational point of the open face.

    The point must lie on the face itself (norm exactly 1, strict cone); the
    value is computed on the primitive integral class of its ray, which is
    the degree-zero homogeneous extension of ent.

    Raises:
        NotOnFace: when p misses the unit sphere or this face's open cone.
    """
    coords = tuple(Fraction(x) for x in p)
    if evaluate_norm(ball, coords) != 1:
        raise NotOnFace(f"point {tuple(str(c) for c in coords)} is not on the unit sphere")
    if not cone_contains(face, ball, coords):
        raise NotOnFace(f"point is not in the open cone over face {face.id}")
    w = primitive_on_ray(coords)
    return normalized_entropy(ball, face, w, tol).entropy


class ConcavityProbe(NamedTuple):
    lhs: float
    rhs: float
    strict: bool


def concavity_probe(
    ball: NormBall,
    face: FiberedFace,
    p: Vector,
    q: Vector,
    s: Fraction,
    tol: float = ENTROPY_TOL,
) -> ConcavityProbe:
    """Test strict concavity of 1/ent at one rational triple on the face.

    p and q are rescaled to norm 1 exactly; m is the norm-1 rescaling of
    s*p + (1-s)*q.  Returns lhs = 1/ent(m), rhs = s/ent(p) + (1-s)/ent(q),
    and strict = (lhs > rhs + tol).

    Raises:
        ValidationError: if s is outside (0,1) or p, q share a ray.
        NotOnFace: when either point misses the open cone over the face.
    """
    s = Fraction(s)
    if not 0 < s < 1:
        raise ValidationError("the interpolation parameter must lie strictly between 0 and 1")
    root_tol = min(ROOT_TOL, tol * 1e-3)

    def rescaled(vec: Vector) -> tuple[Fraction, ...]:
        coords = tuple(Fraction(x) for x in vec)
        nrm = evaluate_norm(ball, coords)
        if nrm <= 0 or not cone_contains(face, ball, coords):
            raise NotOnFace(f"point {tuple(str(c) for c in coords)} is not over face {face.id}")
        return tuple(c / nrm for c in coords)

    pp, qq = rescaled(p), rescaled(q)
    if pp == qq:
        raise ValidationError("probe points lie on the same ray")
    mid = tuple(s * a + (1 - s) * b for a, b in zip(pp, qq))
    mm = tuple(c / evaluate_norm(ball, mid) for c in mid)
    ent_p = ent_at_face_point(ball, face, pp, root_tol)
    ent_q = ent_at_face_point(ball, face, qq, root_tol)
    ent_m = ent_at_face_point(ball, face, mm, root_tol)
    lhs = 1.0 / ent_m
    rhs = float(s) / ent_p + float(1 - s) / ent_q
    return ConcavityProbe(lhs=lhs, rhs=rhs, strict=lhs > rhs + tol)


def invariant_equal(r1: EntropyRecord, r2: EntropyRecord, tol: float = ENTROPY_TOL) -> bool:
    """Whether two records share normalized entropy within tol.

    Equality is a necessary condition for the fibrations to be commensurable;
    inequality certifies non-commensurability, equality certifies nothing.
    """
    return abs(r1.entropy - r2.entropy) <= tol
