"""Cyclic-cover analysis: component counts and Euler characteristics.

For a pair of fibration classes w1 != +-w2 with fibers F1, F2, the degree-n
cyclic cover dual to w1 pulls F2 back to d = gcd(n, m) components, each a
degree n/d cover of F2, where m is the gcd of the w1-values on a basis of
Ker(w2).  Whenever n does not divide m the pulled-back fiber is not
homeomorphic to F2, so a pair with conjugate monodromies yields
commensurable but non-symmetric fibrations upstairs for every such n: the
construction works for all n beyond the explicit threshold m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import HypothesisUnmet, NotPrimitive, ValidationError
from .lattice import CohomologyClass, IntMatrix, is_primitive, kernel_basis


@dataclass(frozen=True)
class FibrationPair:
    """Two fibration classes of one manifold with their fiber data.

    conjugate_monodromies records the hypothesis that the two fibered pairs
    agree up to homeomorphism (e.g. exchanged by a symmetry); it is supplied,
    never computed, and forces equal Euler characteristics.
    """

    w1: CohomologyClass
    w2: CohomologyClass
    chi1: int
    chi2: int
    conjugate_monodromies: bool = False

    def __post_init__(self) -> None:
        if len(self.w1) != len(self.w2):
            raise ValidationError("classes live in lattices of different rank")
        for w in (self.w1, self.w2):
            if not is_primitive(w):
                raise NotPrimitive(f"class {w.coords} is not primitive")
        if self.w1 == self.w2 or self.w1 == self.w2.negated():
            raise ValidationError("the two classes must differ as rays (w1 != +-w2)")
        if self.chi1 >= 0 or self.chi2 >= 0:
            raise ValidationError("fiber Euler characteristics must be negative")
        if self.conjugate_monodromies and self.chi1 != self.chi2:
            raise ValidationError("conjugate monodromies force equal Euler characteristics")


@dataclass(frozen=True)
class CoverReport:
    """Homological outcome of one degree-n cyclic cover."""

    degree: int
    d: int
    components: int
    component_degree: int
    component_chi: int
    fibers_homeomorphic: bool
    nonsymmetric_commensurable: bool

    def __post_init__(self) -> None:
        if self.components * self.component_degree != self.degree:
            raise ValidationError("components times component degree must equal the cover degree")


def fiber_kernel(w: CohomologyClass) -> list[tuple[int, ...]]:
    """Basis of Ker(w) in the homology lattice; b-1 vectors for primitive w.

    Raises:
        NotPrimitive: when w is not primitive.
    """
    if not is_primitive(w):
        raise NotPrimitive(f"class {w.coords} is not primitive")
    return kernel_basis(IntMatrix.from_rows([list(w.coords)]))


def kernel_image_gcd(pair: FibrationPair) -> int:
    """m = gcd of |w1(a)| over a basis of Ker(w2); always positive.

    m = 0 would mean Ker(w2) is contained in Ker(w1), forcing w1 = +-w2 for
    primitive classes, which the pair invariant excludes.
    """
    m = 0
    for a in fiber_kernel(pair.w2):
        m = math.gcd(m, abs(pair.w1.dot(a)))
    if m == 0:
        raise ValidationError(
            "w1 vanishes on Ker(w2); for primitive classes this forces w1 = +-w2, "
            "so the pair data is inconsistent"
        )
    return m


def analyze_cover(pair: FibrationPair, n: int) -> CoverReport:
    """Component analysis of the degree-n cyclic cover dual to w1.

    The preimage of F2 splits into d = gcd(n, m) components, each covering
    F2 with degree n/d and Euler characteristic (n/d) * chi2.  The fibers
    upstairs are homeomorphic to F2 exactly when n divides m.
    """
    if n < 1:
        raise ValidationError("cover degree must be at least 1")
    m = kernel_image_gcd(pair)
    d = math.gcd(n, m)
    component_degree = n // d
    return CoverReport(
        degree=n,
        d=d,
        components=d,
        component_degree=component_degree,
        component_chi=component_degree * pair.chi2,
        fibers_homeomorphic=m % n == 0,
        nonsymmetric_commensurable=pair.conjugate_monodromies and m % n != 0,
    )


def search_nonsymmetric(pair: FibrationPair, n_max: int) -> list[CoverReport]:
    """Reports for every degree n <= n_max that yields commensurable but
    non-symmetric fibrations upstairs; exactly the n that do not divide m.

    Raises:
        HypothesisUnmet: when the pair lacks the conjugate-monodromies
            hypothesis, without which commensurability is not certified.
    """
    if not pair.conjugate_monodromies:
        raise HypothesisUnmet("the construction requires conjugate monodromies")
    if n_max < 1:
        raise ValidationError("n_max must be at least 1")
    out = []
    for n in range(1, n_max + 1):
        report = analyze_cover(pair, n)
        if report.nonsymmetric_commensurable:
            out.append(report)
    return out
