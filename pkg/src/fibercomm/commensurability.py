"""Symmetry orbits, the pair classifier, and the volume minimality gate.

Two fibrations of one manifold are either symmetric or non-commensurable
when the manifold has no hidden symmetries, and likewise when every
fibration is a minimal element of its commensurability class.  The classifier
below runs that rule cascade; it never asserts commensurability, because the
entropy invariant is only a necessary condition.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    DimensionMismatch,
    NotInCone,
    NotPrimitive,
    OrbitOverflow,
    ValidationError,
)
from .entropy import ENTROPY_TOL, normalized_entropy
from .laurent import ROOT_TOL
from .lattice import CohomologyClass, IntMatrix, is_primitive
from .norm import FiberedFace, NormBall, cone_contains

SYMMETRIC = "Symmetric"
NON_COMMENSURABLE = "NonCommensurable"
UNDETERMINED = "Undetermined"

# smallest volumes of orientable cusped hyperbolic 3-manifolds:
# one cusp 2*V0 (V0 the regular ideal tetrahedron volume), two cusps V8
# (the regular ideal octahedron volume)
V0 = 1.0149416064096536
V8 = 3.663862376708876
VOLUME_MARGIN = 1e-9

GROUP_BOUND = 4096


@dataclass(frozen=True)
class SymmetryAction:
    """Induced action of the symmetry group on the cohomology lattice."""

    betti: int
    generators: tuple[IntMatrix, ...]

    def __post_init__(self) -> None:
        if self.betti < 1:
            raise ValidationError("betti number must be at least 1")
        for g in self.generators:
            if g.rows != self.betti or g.cols != self.betti:
                raise ValidationError(f"symmetry generator must be {self.betti}x{self.betti}")
            if not g.is_unimodular():
                raise ValidationError(f"symmetry generator {g.to_rows()} is not unimodular")
        self._check_finite()

    def _check_finite(self, bound: int = GROUP_BOUND) -> None:
        # closure of the generators under multiplication; finite groups close,
        # infinite-order generators blow past the bound
        seen = {tuple(g.entries) for g in self.generators}
        queue = deque(self.generators)
        while queue:
            m = queue.popleft()
            for g in self.generators:
                prod = m @ g
                key = tuple(prod.entries)
                if key not in seen:
                    seen.add(key)
                    if len(seen) > bound:
                        raise OrbitOverflow(
                            f"symmetry generators produce more than {bound} elements; "
                            "the action does not look finite"
                        )
                    queue.append(prod)


@dataclass(frozen=True)
class ManifoldFlags:
    """Commensurability-relevant facts supplied with a manifold, not computed."""

    no_hidden_symmetries: bool = False
    all_fibrations_minimal: bool = False
    volume: float | None = None
    cusps: int | None = None

    def __post_init__(self) -> None:
        if self.volume is not None and not self.volume > 0:
            raise ValidationError("volume must be positive when provided")
        if self.cusps is not None and self.cusps < 0:
            raise ValidationError("cusp count cannot be negative")


@dataclass(frozen=True)
class PairVerdict:
    """Outcome of classifying one pair of fibration classes."""

    kind: str
    reason: str
    witness: dict

    def __post_init__(self) -> None:
        if self.kind not in (SYMMETRIC, NON_COMMENSURABLE, UNDETERMINED):
            raise ValidationError(f"unknown verdict kind {self.kind!r}")


def _orbit_with_words(
    action: SymmetryAction, w: CohomologyClass, bound: int
) -> dict[CohomologyClass, tuple[str, ...]]:
    if len(w) != action.betti:
        raise DimensionMismatch(f"class has length {len(w)}, action has betti {action.betti}")
    words: dict[CohomologyClass, tuple[str, ...]] = {w: (), w.negated(): ("negate",)}
    queue = deque(words)
    while queue:
        x = queue.popleft()
        for i, g in enumerate(action.generators):
            y = CohomologyClass(g.apply(x.coords))
            if y not in words:
                words[y] = words[x] + (f"generator:{i}",)
                if len(words) > bound:
                    raise OrbitOverflow(f"orbit exceeded {bound} classes; action does not look finite")
                queue.append(y)
    return words


def symmetry_orbit(action: SymmetryAction, w: CohomologyClass, bound: int = GROUP_BOUND) -> list[CohomologyClass]:
    """Closure of {w, -w} under the generators, sorted lexicographically.

    Raises:
        OrbitOverflow: when the orbit exceeds the bound, which signals an
            action that is not actually finite.
        DimensionMismatch: on a betti mismatch.
    """
    return sorted(_orbit_with_words(action, w, bound))


def apply_word(action: SymmetryAction, w: CohomologyClass, word: tuple[str, ...]) -> CohomologyClass:
    """Replay a witness word ("negate" / "generator:i" steps) on a class."""
    x = w
    for op in word:
        if op == "negate":
            x = x.negated()
        elif op.startswith("generator:"):
            x = CohomologyClass(action.generators[int(op.split(":", 1)[1])].apply(x.coords))
        else:
            raise ValidationError(f"unknown witness op {op!r}")
    return x


def classify_pair(
    flags: ManifoldFlags,
    action: SymmetryAction,
    ball: NormBall,
    face1: FiberedFace,
    face2: FiberedFace,
    w1: CohomologyClass,
    w2: CohomologyClass,
    tol: float = ENTROPY_TOL,
) -> PairVerdict:
    """Classify a pair of fibration classes of one manifold.

    Rule cascade, first match wins:
      1. w2 lies in the symmetry orbit of w1           -> Symmetric
      2. normalized entropies differ by > 100*tol      -> NonCommensurable
      3. the manifold has no hidden symmetries         -> NonCommensurable
      4. every fibration is a minimal element          -> NonCommensurable
      5. otherwise                                     -> Undetermined

    Rules 3 and 4 are sound only because rule 1 already failed; the verdict
    is symmetric in (w1, face1) vs (w2, face2).  Commensurable is never
    output: entropy equality is necessary, not sufficient.

    Raises:
        NotPrimitive, NotInCone: on precondition violations.
        Errors from entropy computation propagate (e.g. MissingPolynomial).
    """
    for w, face in ((w1, face1), (w2, face2)):
        if not is_primitive(w):
            raise NotPrimitive(f"class {w.coords} is not primitive")
        if not cone_contains(face, ball, w):
            raise NotInCone(f"class {w.coords} is not in the open cone over face {face.id}")
    words = _orbit_with_words(action, w1, GROUP_BOUND)
    if w2 in words:
        word = words[w2]
        reason = "orbit-identity" if word in ((), ("negate",)) else "symmetry-orbit"
        return PairVerdict(
            kind=SYMMETRIC,
            reason=reason,
            witness={"word": list(word), "from": list(w1.coords), "to": list(w2.coords)},
        )
    root_tol = min(ROOT_TOL, tol * 1e-3)
    e1 = normalized_entropy(ball, face1, w1, root_tol)
    e2 = normalized_entropy(ball, face2, w2, root_tol)
    gap = abs(e1.entropy - e2.entropy)
    witness = {"entropy_a": e1.entropy, "entropy_b": e2.entropy, "gap": gap}
    if gap > 100 * tol:
        return PairVerdict(kind=NON_COMMENSURABLE, reason="entropy-gap", witness=witness)
    if flags.no_hidden_symmetries:
        return PairVerdict(kind=NON_COMMENSURABLE, reason="no-hidden-symmetries", witness=witness)
    if flags.all_fibrations_minimal:
        return PairVerdict(kind=NON_COMMENSURABLE, reason="unique-minimal-element", witness=witness)
    return PairVerdict(kind=UNDETERMINED, reason="no-criterion-applies", witness=witness)


class GateResult(NamedTuple):
    possible: bool
    reason: str
    quotient_volume: float


def volume_minimality_gate(volume: float, cusps: int, degree: int) -> GateResult:
    """Volume test for covering a smaller manifold with the given degree.

    The quotient volume is volume/degree.  A cusped manifold only covers
    cusped manifolds, and no orientable cusped hyperbolic 3-manifold has
    volume below 2*V0; when more cusps than the degree are present, the
    quotient keeps at least two cusps and needs volume at least V8.  Bounds
    are applied with a relative margin of 1e-9 so exact boundary cases (a
    quotient of volume exactly 2*V0) stay possible.  This is a necessary
    condition only: a "possible" answer certifies nothing.
    """
    if not volume > 0:
        raise ValidationError("volume must be positive")
    if cusps < 0:
        raise ValidationError("cusp count cannot be negative")
    if degree < 2:
        raise ValidationError("covering degree must be at least 2")
    q = volume / degree
    if cusps >= 1 and q < 2 * V0 * (1 - VOLUME_MARGIN):
        return GateResult(False, "quotient-below-cusped-minimum", q)
    if cusps > degree and q < V8 * (1 - VOLUME_MARGIN):
        return GateResult(False, "quotient-below-two-cusp-minimum", q)
    return GateResult(True, "volume-admits-quotient", q)
