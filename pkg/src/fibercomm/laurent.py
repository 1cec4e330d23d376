"""Integer Laurent polynomials, Newton polytopes, and real-root isolation.

Multivariate polynomials are stored as exponent-vector -> coefficient maps;
specializing along an integral cohomology class collapses them to univariate
Laurent polynomials.  The largest real root above 1 is isolated with exact
integer arithmetic (Sturm counts on the interval, then sign bisection) so the
returned dilatation is deterministic and accurate to the requested tolerance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import ArityMismatch, NoRootAboveOne, Unsupported, ZeroPolynomial
from .lattice import CohomologyClass

ROOT_TOL = 1e-12


def _clean_terms(terms: Iterable[tuple[tuple[int, ...], int]], arity: int) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for exp, coeff in terms:
        exp = tuple(int(e) for e in exp)
        if len(exp) != arity:
            raise ArityMismatch(f"exponent {exp} has arity {len(exp)}, expected {arity}")
        coeff = int(coeff)
        if coeff == 0:
            continue
        out[exp] = out.get(exp, 0) + coeff
        if out[exp] == 0:
            del out[exp]
    return out


@dataclass(frozen=True)
class LaurentPolynomial:
    """Integer Laurent polynomial in ``arity`` variables."""

    arity: int
    terms: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise ValueError("arity must be at least 1")
        object.__setattr__(self, "terms", dict(_clean_terms(self.terms.items(), self.arity)))

    @classmethod
    def from_terms(cls, arity: int, terms: Mapping[tuple[int, ...], int] | Iterable[tuple[tuple[int, ...], int]]) -> "LaurentPolynomial":
        items = terms.items() if isinstance(terms, Mapping) else terms
        return cls(arity, dict(_clean_terms(items, arity)))

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.terms)

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if self.arity != other.arity:
            raise ArityMismatch("cannot add polynomials of different arity")
        merged = list(self.terms.items()) + list(other.terms.items())
        return LaurentPolynomial.from_terms(self.arity, merged)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial.from_terms(self.arity, {e: -c for e, c in self.terms.items()})


@dataclass(frozen=True)
class UnivariatePoly:
    """Integer Laurent polynomial in one variable, exponent -> coefficient."""

    terms: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {int(e): int(c) for e, c in self.terms.items() if int(c) != 0}
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], shift: int = 0) -> "UnivariatePoly":
        return cls({i + shift: c for i, c in enumerate(coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        merged = dict(self.terms)
        for e, c in other.terms.items():
            merged[e] = merged.get(e, 0) + c
        return UnivariatePoly(merged)

    def support(self) -> list[int]:
        return sorted(self.terms)

    def dense_coeffs(self) -> list[int]:
        """Coefficients [c0..cd] after dividing out the lowest monomial.

        Positive roots are unchanged by the monomial shift.
        """
        if self.is_zero():
            raise ZeroPolynomial("the zero polynomial has no coefficient vector")
        lo = min(self.terms)
        hi = max(self.terms)
        return [self.terms.get(i, 0) for i in range(lo, hi + 1)]


def specialize(p: LaurentPolynomial, c: CohomologyClass) -> UnivariatePoly:
    """Substitute x_i -> t^(c_i) term by term: coeff * x^e -> coeff * t^<c,e>."""
    if len(c) != p.arity:
        raise ArityMismatch(f"class has rank {len(c)}, polynomial arity {p.arity}")
    out: dict[int, int] = {}
    for exp, coeff in p.terms.items():
        k = c.dot(exp)
        out[k] = out.get(k, 0) + coeff
    return UnivariatePoly(out)


# ---------------------------------------------------------------------------
# convex hulls of small integer point sets (exact predicates)


def _cross(o: tuple[int, int], a: tuple[int, int], b: tuple[int, int]) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_2d(points: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Vertices of the 2d convex hull (monotone chain, strict turns only)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list[tuple[int, ...]] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[int, ...]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return sorted(set(lower[:-1] + upper[:-1]))


def _solve_unique(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Unique exact solution of matrix*x = rhs, or None if none or many."""
    m = len(matrix)
    k = len(matrix[0]) if m else 0
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    pivots: list[int] = []
    r = 0
    for col in range(k):
        p = next((i for i in range(r, m) if aug[i][col] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = Fraction(1) / aug[r][col]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    if len(pivots) < k:
        return None  # underdetermined: dependent subset, skip
    for i in range(r, m):
        if aug[i][k] != 0:
            return None  # inconsistent
    sol = [Fraction(0)] * k
    for i, col in enumerate(pivots):
        sol[col] = aug[i][k]
    return sol


def _in_hull(point: tuple[int, ...], others: list[tuple[int, ...]], dim: int) -> bool:
    """Exact membership of point in conv(others) via Caratheodory subsets."""
    target = [Fraction(x) for x in point] + [Fraction(1)]
    for size in range(1, dim + 2):
        for subset in itertools.combinations(others, size):
            cols = [[Fraction(p[i]) for p in subset] for i in range(dim)]
            cols.append([Fraction(1)] * size)
            lam = _solve_unique(cols, target)
            if lam is not None and all(v >= 0 for v in lam):
                return True
    return False


def extreme_points(points: Sequence[tuple[int, ...]], dim: int) -> list[tuple[int, ...]]:
    """Extreme points of a small integer point set, exactly.

    Dimension 1 takes endpoints, dimension 2 runs a monotone-chain hull with
    exact cross products, dimension 3 filters by Caratheodory membership.
    """
    pts = sorted(set(tuple(p) for p in points))
    if not pts:
        return []
    if dim == 1:
        return sorted({min(pts), max(pts)})
    if dim == 2:
        return _hull_2d(pts)
    if dim == 3:
        out = []
        for p in pts:
            rest = [q for q in pts if q != p]
            if not rest or not _in_hull(p, rest, 3):
                out.append(p)
        return out
    raise Unsupported(f"polytopes in rank {dim} are not supported (max 3)")


@dataclass(frozen=True)
class NewtonPolytope:
    """Vertex set of the Newton polytope of a Laurent polynomial."""

    arity: int
    vertices: tuple[tuple[int, ...], ...]


def newton_polytope(p: LaurentPolynomial) -> NewtonPolytope:
    """Vertices of conv(support(p)), canonically sorted.

    Raises:
        ZeroPolynomial: for the zero polynomial.
        Unsupported: for arity greater than 3.
    """
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no Newton polytope")
    verts = extreme_points(p.support(), p.arity)
    return NewtonPolytope(p.arity, tuple(verts))


# ---------------------------------------------------------------------------
# exact real-root isolation


def _int_primitive(coeffs: Sequence[Fraction | int]) -> list[int]:
    """Scale by a positive rational to primitive integer coefficients."""
    fracs = [Fraction(c) for c in coeffs]
    while fracs and fracs[-1] == 0:
        fracs.pop()
    if not fracs:
        return []
    mult = 1
    for f in fracs:
        mult = mult * f.denominator // gcd(mult, f.denominator)
    ints = [int(f * mult) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return [v // g for v in ints]


def _derivative(coeffs: Sequence[int]) -> list[int]:
    return [i * c for i, c in enumerate(coeffs)][1:]


def _poly_rem(num: list[int], den: list[int]) -> list[Fraction]:
    """Remainder of num / den over the rationals (dense, lowest-first)."""
    r = [Fraction(c) for c in num]
    d = [Fraction(c) for c in den]
    dd = len(d) - 1
    lead = d[-1]
    while len(r) - 1 >= dd and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < dd:
            break
        shift = len(r) - 1 - dd
        factor = r[-1] / lead
        for i in range(dd + 1):
            r[shift + i] -= factor * d[i]
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return r


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient num / den (den must divide num over Q)."""
    r = [Fraction(c) for c in num]
    d = [Fraction(c) for c in den]
    dd = len(d) - 1
    lead = d[-1]
    q = [Fraction(0)] * (len(r) - dd)
    for shift in range(len(q) - 1, -1, -1):
        factor = r[shift + dd] / lead
        q[shift] = factor
        if factor:
            for i in range(dd + 1):
                r[shift + i] -= factor * d[i]
    assert not any(r), "inexact polynomial division"
    return _int_primitive(q)


def _sturm_chain(coeffs: list[int]) -> list[list[int]]:
    """Sturm chain of the squarefree part, primitive integer entries."""
    p0 = _int_primitive(coeffs)
    chain = [p0, _int_primitive(_derivative(p0))]
    while len(chain[-1]) > 0:
        rem = _poly_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append(_int_primitive([-c for c in rem]))
    tail = chain[-1]
    if len(tail) > 1:
        # p had repeated roots; redo on the squarefree part p / gcd(p, p')
        return _sturm_chain(_poly_exact_div(p0, tail))
    return chain


def _sign_at(coeffs: Sequence[int], x: Fraction) -> int:
    """Sign of the polynomial at a rational point, via integer Horner."""
    num, den = x.numerator, x.denominator
    acc = 0
    bp = 1
    for c in reversed(coeffs):
        acc = acc * num + c * bp
        bp *= den
    return (acc > 0) - (acc < 0)


def _variations(chain: Sequence[Sequence[int]], x: Fraction) -> int:
    signs = [s for s in (_sign_at(p, x) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_roots(chain: Sequence[Sequence[int]], a: Fraction, b: Fraction) -> int:
    """Distinct real roots in the half-open interval (a, b]."""
    return _variations(chain, a) - _variations(chain, b)


def largest_real_root(q: UnivariatePoly, tol: float = ROOT_TOL) -> float:
    """Largest real root strictly greater than 1, to within ``tol``.

    The monomial factor is cleared first (positive roots are unaffected), a
    Cauchy bound caps the search interval, Sturm counts steer the bisection
    toward the rightmost root, and plain sign bisection finishes once that
    root is isolated with a sign change.  All arithmetic below the tolerance
    threshold is exact.

    Raises:
        ZeroPolynomial: if ``q`` is zero.
        NoRootAboveOne: if no real root exceeds 1 (e.g. t^2 - 2t + 1).
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    coeffs = q.dense_coeffs()
    if len(coeffs) == 1:
        raise NoRootAboveOne("constant polynomial after clearing the monomial factor")
    chain = _sturm_chain(coeffs)
    lead = coeffs[-1]
    bound = Fraction(1) + max(Fraction(abs(c), abs(lead)) for c in coeffs[:-1])
    lo, hi = Fraction(1), bound
    if hi <= lo or _count_roots(chain, lo, hi) == 0:
        raise NoRootAboveOne("no real root strictly greater than 1")
    tol_f = Fraction(tol)
    sign_hi = _sign_at(coeffs, hi)
    assert sign_hi != 0, "Cauchy bound is strict"
    while hi - lo > tol_f:
        if _count_roots(chain, lo, hi) == 1:
            s_lo = _sign_at(coeffs, lo)
            if s_lo != 0 and s_lo != sign_hi:
                while hi - lo > tol_f:
                    mid = (lo + hi) / 2
                    s = _sign_at(coeffs, mid)
                    if s == 0:
                        return float(mid)
                    if s == sign_hi:
                        hi = mid
                    else:
                        lo = mid
                break
        mid = (lo + hi) / 2
        if _sign_at(coeffs, mid) == 0:
            if _count_roots(chain, mid, hi) == 0:
                return float(mid)
            lo = mid
        elif _count_roots(chain, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return float((lo + hi) / 2)
