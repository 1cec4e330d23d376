"""The Thurston norm as finite data: dual vertices, faces, cones, enumeration.

The norm is carried by a centrally symmetric finite set D of dual vertices,
with ||w|| = max_{v in D} <w, v>.  Top faces of the unit ball correspond to
the extreme points of D whose strict-support cone is nonempty; each face may
carry a fibered flag and a polynomial supplied by a manifold descriptor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Mapping, Sequence, Union

from .errors import (
    DegenerateNorm,
    DimensionMismatch,
    UnboundedCone,
    ValidationError,
)
from .lattice import CohomologyClass, IntMatrix, is_primitive, kernel_basis
from .laurent import LaurentPolynomial, extreme_points, newton_polytope

Vector = Sequence[Union[int, Fraction]]


def _as_coords(w: Union[CohomologyClass, Vector]) -> tuple:
    if isinstance(w, CohomologyClass):
        return w.coords
    return tuple(w)


@dataclass(frozen=True)
class NormBall:
    """Dual-vertex representation of the Thurston norm ball.

    dual_vertices is stored deduplicated and sorted, so two balls built from
    the same vertex set compare equal regardless of input order.
    """

    betti: int
    dual_vertices: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.betti < 1:
            raise ValidationError("betti number must be at least 1")
        verts = sorted({tuple(int(x) for x in v) for v in self.dual_vertices})
        if not verts:
            raise ValidationError("norm ball needs at least one dual vertex")
        for v in verts:
            if len(v) != self.betti:
                raise ValidationError(f"dual vertex {v} has length {len(v)}, expected {self.betti}")
        asym = {v for v in verts if tuple(-x for x in v) not in set(verts)}
        if asym:
            raise ValidationError(f"dual vertex set is not centrally symmetric: {sorted(asym)}")
        object.__setattr__(self, "dual_vertices", tuple(verts))


@dataclass(frozen=True)
class FiberedFace:
    """A top face of the norm ball, named by its supporting dual vertex."""

    id: int
    supporting_vertex: tuple[int, ...]
    fibered: bool = False
    polynomial: LaurentPolynomial | None = None


def norm_from_newton(p: LaurentPolynomial) -> NormBall:
    """Norm ball of the Alexander-style norm attached to a polynomial.

    Dual vertices are the pairwise differences of the Newton-polytope
    vertices, reduced to extreme points.  The set is centrally symmetric by
    construction; a single monomial yields the zero seminorm D = {0}.

    Raises:
        ZeroPolynomial: on the zero polynomial.
    """
    poly = newton_polytope(p)
    diffs = [tuple(a - b for a, b in zip(e, f)) for e in poly.vertices for f in poly.vertices]
    return NormBall(p.arity, tuple(extreme_points(diffs, p.arity)))


def evaluate_norm(ball: NormBall, w: Union[CohomologyClass, Vector]) -> Fraction:
    """||w|| = max over dual vertices of <w, v>, exactly.

    Accepts integer or rational coordinates; homogeneous of degree 1 in w.

    Raises:
        DimensionMismatch: when w has the wrong length.
    """
    coords = _as_coords(w)
    if len(coords) != ball.betti:
        raise DimensionMismatch(f"class has length {len(coords)}, ball has betti {ball.betti}")
    return max(Fraction(sum(c * x for c, x in zip(coords, v))) for v in ball.dual_vertices)


def _strictly_supports(ball: NormBall, vertex: tuple[int, ...], coords: tuple) -> bool:
    """True when <coords, vertex> beats <coords, v'> for every other v'."""
    val = sum(c * x for c, x in zip(coords, vertex))
    for v in ball.dual_vertices:
        if v == vertex:
            continue
        if sum(c * x for c, x in zip(coords, v)) >= val:
            return False
    return True


Annotation = tuple[bool, LaurentPolynomial | None]


def top_faces(ball: NormBall, annotations: Mapping[tuple[int, ...], Annotation] | None = None) -> list[FiberedFace]:
    """Top faces of the unit ball, one per extreme dual vertex, sorted.

    Face ids are positions in the sorted vertex order and are the ids the
    command-line surface accepts.  ``annotations`` maps a supporting vertex to
    its (fibered, polynomial) pair; unannotated faces default to non-fibered.

    Raises:
        DegenerateNorm: when every dual vertex is zero (zero seminorm).
        Unsupported: for betti > 3 (propagated from the hull computation).
    """
    if all(all(x == 0 for x in v) for v in ball.dual_vertices):
        raise DegenerateNorm("the zero seminorm has no top faces")
    verts = extreme_points(ball.dual_vertices, ball.betti)
    faces = []
    for i, v in enumerate(verts):
        fibered, poly = (annotations or {}).get(v, (False, None))
        faces.append(FiberedFace(id=i, supporting_vertex=v, fibered=fibered, polynomial=poly))
    return faces


def cone_contains(face: FiberedFace, ball: NormBall, w: Union[CohomologyClass, Vector]) -> bool:
    """Whether w lies in the open cone over the face (strict support).

    Boundary classes, where the norm is also attained on another vertex, are
    excluded; so is the zero class.
    """
    coords = _as_coords(w)
    if len(coords) != ball.betti:
        raise DimensionMismatch(f"class has length {len(coords)}, ball has betti {ball.betti}")
    if all(x == 0 for x in coords):
        return False
    return _strictly_supports(ball, face.supporting_vertex, coords)


def _invert_fraction_matrix(rows: list[tuple[int, ...]]) -> list[list[Fraction]] | None:
    """Inverse of a square integer matrix over Q, or None if singular."""
    b = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(b)] for i, row in enumerate(rows)]
    for col in range(b):
        p = next((r for r in range(col, b) if aug[r][col] != 0), None)
        if p is None:
            return None
        aug[col], aug[p] = aug[p], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(b):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [row[b:] for row in aug]


def _independent_vertex_square(ball: NormBall) -> list[tuple[int, ...]] | None:
    """b linearly independent dual vertices, or None if D does not span."""
    b = ball.betti
    chosen: list[tuple[int, ...]] = []
    reduced: list[list[Fraction]] = []
    for v in ball.dual_vertices:
        vec = [Fraction(x) for x in v]
        for basis in reduced:
            lead = next(i for i, x in enumerate(basis) if x != 0)
            if vec[lead] != 0:
                f = vec[lead] / basis[lead]
                vec = [a - f * c for a, c in zip(vec, basis)]
        if any(x != 0 for x in vec):
            chosen.append(v)
            reduced.append(vec)
            if len(chosen) == b:
                return chosen
    return None


def enumerate_primitive_classes(face: FiberedFace, ball: NormBall, max_norm: int) -> list[CohomologyClass]:
    """All primitive classes in the open cone over face with norm <= max_norm.

    The sublevel set {||w|| <= K} is enclosed in the integer box given by an
    invertible square S of dual vertices: w = S^(-1) y with |y_j| <= K, so
    |w_i| <= K * sum_j |S^(-1)[i][j]|.  The box is scanned exhaustively and
    filtered, so the listing is complete.  Output is sorted lexicographically.

    Raises:
        UnboundedCone: when the dual vertices do not span, so the sublevel
            set is unbounded and the enumeration would not terminate.
    """
    if max_norm < 0:
        raise ValidationError("max_norm must be nonnegative")
    square = _independent_vertex_square(ball)
    if square is None:
        raise UnboundedCone("dual vertices do not span; norm sublevel sets are unbounded")
    inv = _invert_fraction_matrix(square)
    assert inv is not None, "chosen vertex square must be invertible"
    bounds = [ceil(max_norm * sum(abs(x) for x in row)) for row in inv]
    out = []
    for cand in itertools.product(*(range(-m, m + 1) for m in bounds)):
        if all(x == 0 for x in cand):
            continue
        if not _strictly_supports(ball, face.supporting_vertex, cand):
            continue
        w = CohomologyClass(cand)
        if not is_primitive(w):
            continue
        if evaluate_norm(ball, w) <= max_norm:
            out.append(w)
    return sorted(out)


def span_rank(ball: NormBall) -> int:
    """Rank of the span of the dual vertices (betti minus kernel dimension)."""
    mat = IntMatrix.from_rows([list(v) for v in ball.dual_vertices])
    return ball.betti - len(kernel_basis(mat))
