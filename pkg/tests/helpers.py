"""Shared test oracles, implemented independently of the library code.

Everything here favors exact arithmetic (Fraction, big ints) or mpmath at
high working precision, so library results can be checked against slower
but independently derived values.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import mpmath

mpmath.mp.dps = 50


# ---------------------------------------------------------------------------
# exact linear algebra


def solve_unique(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Unique solution of rows * x = rhs, or None (none or many solutions)."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = [list(rows[i]) + [rhs[i]] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = Fraction(1) / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    if len(pivots) < n:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = aug[i][n]
    return x


def in_hull_oracle(p: tuple[int, ...], pts: list[tuple[int, ...]], dim: int) -> bool:
    """Exact convex-hull membership via affinely independent subsets."""
    uniq = list(dict.fromkeys(pts))
    for k in range(1, dim + 2):
        for sub in combinations(uniq, k):
            rows = [[Fraction(q[i]) for q in sub] for i in range(dim)]
            rows.append([Fraction(1)] * k)
            rhs = [Fraction(p[i]) for i in range(dim)] + [Fraction(1)]
            sol = solve_unique(rows, rhs)
            if sol is not None and all(x >= 0 for x in sol):
                return True
    return False


def extreme_points_oracle(pts: list[tuple[int, ...]], dim: int) -> list[tuple[int, ...]]:
    """A point is extreme iff it is outside the hull of the others."""
    uniq = sorted(set(pts))
    out = []
    for p in uniq:
        others = [q for q in uniq if q != p]
        if not others or not in_hull_oracle(p, others, dim):
            out.append(p)
    return out


def subgroup_mod_n(values: list[int], n: int) -> set[int]:
    """The subgroup of Z/n generated by the given residues, by closure."""
    gens = {v % n for v in values}
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = (x + g) % n
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def spectral_radius_oracle(rows: list[list[int]], iters: int = 300) -> float:
    """Integer power iteration; exact big-int ratio converted to float last."""
    v = [1] * len(rows)
    for _ in range(iters):
        v = [sum(r[j] * v[j] for j in range(len(v))) for r in rows]
    w = [sum(r[j] * v[j] for j in range(len(v))) for r in rows]
    i = max(range(len(v)), key=lambda k: abs(v[k]))
    return float(Fraction(w[i], v[i]))


# ---------------------------------------------------------------------------
# mpmath oracles


def lobachevsky(theta) -> mpmath.mpf:
    return mpmath.clsin(2, 2 * theta) / 2


def v0_oracle() -> float:
    """Volume of the regular ideal tetrahedron."""
    return float(2 * lobachevsky(mpmath.pi / 6))


def v8_oracle() -> float:
    """Volume of the regular ideal octahedron."""
    return float(8 * lobachevsky(mpmath.pi / 4))


def mp_largest_real_root(dense: list[int]) -> float | None:
    """Largest real root > 1 of sum dense[i] x^i, via mpmath.polyroots."""
    coeffs = list(reversed(dense))
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if len(coeffs) <= 1:
        return None
    roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=100)
    best = None
    for r in roots:
        if abs(mpmath.im(r)) < mpmath.mpf("1e-30"):
            x = mpmath.re(r)
            if x > 1 + mpmath.mpf("1e-30") and (best is None or x > best):
                best = x
    return None if best is None else float(best)


# ---------------------------------------------------------------------------
# randomized inputs


def rng(seed: int = 20260818) -> random.Random:
    return random.Random(seed)


def random_matrix_rows(r: random.Random, rows: int, cols: int, bound: int = 9) -> list[list[int]]:
    return [[r.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def random_primitive_coords(r: random.Random, b: int, bound: int = 9) -> tuple[int, ...]:
    import math

    while True:
        v = tuple(r.randint(-bound, bound) for _ in range(b))
        g = 0
        for x in v:
            g = math.gcd(g, abs(x))
        if g == 1:
            return v
