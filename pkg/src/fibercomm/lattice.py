"""Exact integer linear algebra over the first-cohomology lattice.

Smith normal form with unimodular transform tracking, integer kernel bases in
Hermite-reduced form, primitivity tests, and reduction of integral functionals
modulo n.  Everything runs on Python's arbitrary-precision integers; pivot
choices are deterministic (smallest absolute value, then lowest index) so two
runs of any routine produce identical output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ZeroClass


@dataclass(frozen=True, order=True)
class CohomologyClass:
    """An integral cohomology class in a fixed basis."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coords:
            raise ValueError("class needs at least one coordinate")
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in self.coords):
            raise ValueError("coordinates must be integers")

    @classmethod
    def of(cls, coords: Iterable[int]) -> "CohomologyClass":
        return cls(tuple(coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def dot(self, vec: Sequence[int]) -> int:
        if len(vec) != len(self.coords):
            raise ValueError("length mismatch in pairing")
        return sum(a * b for a, b in zip(self.coords, vec))

    def negated(self) -> "CohomologyClass":
        return CohomologyClass(tuple(-c for c in self.coords))

    def scaled(self, k: int) -> "CohomologyClass":
        return CohomologyClass(tuple(k * c for c in self.coords))


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, row-major entries."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        r = len(rows)
        if r == 0:
            raise ValueError("matrix needs at least one row")
        c = len(rows[0])
        flat: list[int] = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(int(x) for x in row)
        return cls(r, c, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions disagree")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other.at(k, j) for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ValueError("vector length disagrees with column count")
        return tuple(sum(self.row(i)[k] * vec[k] for k in range(self.cols)) for i in range(self.rows))

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if pivot is None:
                    return 0
                m[k], m[pivot] = m[pivot], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        return self.rows == self.cols and abs(self.det()) == 1


@dataclass(frozen=True)
class SmithDecomposition:
    """Factorization a = left @ diag @ right with unimodular left/right."""

    left: IntMatrix
    diag: IntMatrix
    right: IntMatrix

    def diagonal(self) -> list[int]:
        return [self.diag.at(i, i) for i in range(min(self.diag.rows, self.diag.cols))]


class _Eliminator:
    """Row/column elimination tracking left, right and right-inverse."""

    def __init__(self, a: IntMatrix) -> None:
        self.w = a.to_rows()
        self.r = a.rows
        self.c = a.cols
        # invariant: a == left * w * right, rinv == right^{-1}
        self.left = IntMatrix.identity(a.rows).to_rows()
        self.right = IntMatrix.identity(a.cols).to_rows()
        self.rinv = IntMatrix.identity(a.cols).to_rows()

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        self.w[i], self.w[j] = self.w[j], self.w[i]
        for row in self.left:
            row[i], row[j] = row[j], row[i]

    def negate_row(self, i: int) -> None:
        self.w[i] = [-x for x in self.w[i]]
        for row in self.left:
            row[i] = -row[i]

    def add_row(self, i: int, j: int, q: int) -> None:
        """w[i] += q * w[j]; left absorbs the inverse op."""
        if q == 0:
            return
        wi, wj = self.w[i], self.w[j]
        for k in range(self.c):
            wi[k] += q * wj[k]
        for row in self.left:
            row[j] -= q * row[i]

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        for row in self.w:
            row[i], row[j] = row[j], row[i]
        self.right[i], self.right[j] = self.right[j], self.right[i]
        for row in self.rinv:
            row[i], row[j] = row[j], row[i]

    def negate_col(self, i: int) -> None:
        for row in self.w:
            row[i] = -row[i]
        self.right[i] = [-x for x in self.right[i]]
        for row in self.rinv:
            row[i] = -row[i]

    def add_col(self, i: int, j: int, q: int) -> None:
        """col i += q * col j."""
        if q == 0:
            return
        for row in self.w:
            row[i] += q * row[j]
        rj, ri = self.right[j], self.right[i]
        for k in range(self.c):
            rj[k] -= q * ri[k]
        for row in self.rinv:
            row[i] += q * row[j]

    def _pivot(self, k: int) -> tuple[int, int] | None:
        """Smallest-|value| nonzero entry of the trailing submatrix, lowest
        (row, col) on ties."""
        best: tuple[int, int, int] | None = None
        for i in range(k, self.r):
            wi = self.w[i]
            for j in range(k, self.c):
                v = wi[j]
                if v != 0 and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            return None
        return best[1], best[2]

    def run(self) -> None:
        for k in range(min(self.r, self.c)):
            while True:
                pos = self._pivot(k)
                if pos is None:
                    return
                self.swap_rows(k, pos[0])
                self.swap_cols(k, pos[1])
                if self.w[k][k] < 0:
                    self.negate_row(k)
                # euclidean sweep: knock entries in row/col k down to
                # remainders; smaller leftovers become the next pivot
                clean = True
                for i in range(k + 1, self.r):
                    if self.w[i][k] != 0:
                        self.add_row(i, k, -(self.w[i][k] // self.w[k][k]))
                        if self.w[i][k] != 0:
                            clean = False
                for j in range(k + 1, self.c):
                    if self.w[k][j] != 0:
                        self.add_col(j, k, -(self.w[k][j] // self.w[k][k]))
                        if self.w[k][j] != 0:
                            clean = False
                if not clean:
                    continue
                d = self.w[k][k]
                viol = None
                for i in range(k + 1, self.r):
                    wi = self.w[i]
                    for j in range(k + 1, self.c):
                        if wi[j] % d != 0:
                            viol = i
                            break
                    if viol is not None:
                        break
                if viol is None:
                    break
                # fold the offending row into row k so the next pivot divides it
                self.add_row(k, viol, 1)


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Smith normal form a = left @ diag @ right.

    Returns:
        SmithDecomposition with unimodular ``left``/``right`` and a
        rectangular diagonal matrix whose nonnegative entries satisfy
        d1 | d2 | ... with zeros trailing.
    """
    elim = _Eliminator(a)
    elim.run()
    diag = IntMatrix.from_rows(elim.w)
    return SmithDecomposition(
        left=IntMatrix.from_rows(elim.left),
        diag=diag,
        right=IntMatrix.from_rows(elim.right),
    )


def _hermite_rows(vectors: list[list[int]]) -> list[tuple[int, ...]]:
    """Canonical (row-style Hermite) basis of the lattice spanned by rows."""
    rows = [list(v) for v in vectors]
    if not rows:
        return []
    width = len(rows[0])
    top = 0
    for col in range(width):
        while True:
            live = [i for i in range(top, len(rows)) if rows[i][col] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda i: (abs(rows[i][col]), i))
            p = live[0]
            for i in live[1:]:
                q = rows[i][col] // rows[p][col]
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[p])]
        live = [i for i in range(top, len(rows)) if rows[i][col] != 0]
        if not live:
            continue
        p = live[0]
        rows[top], rows[p] = rows[p], rows[top]
        if rows[top][col] < 0:
            rows[top] = [-x for x in rows[top]]
        for i in range(top):
            q = rows[i][col] // rows[top][col]
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[top])]
        top += 1
    reduced = [tuple(r) for r in rows if any(r)]
    reduced.sort()
    return reduced


def kernel_basis(a: IntMatrix) -> list[tuple[int, ...]]:
    """Basis of the integer kernel {v : a v = 0}, Hermite-reduced and
    lexicographically sorted."""
    elim = _Eliminator(a)
    elim.run()
    n = min(a.rows, a.cols)
    null_cols = [j for j in range(a.cols) if j >= n or elim.w[j][j] == 0]
    vectors = [[elim.rinv[i][j] for i in range(a.cols)] for j in null_cols]
    return _hermite_rows(vectors)


def is_primitive(c: CohomologyClass) -> bool:
    """True when the coordinate gcd is 1.

    Raises:
        ZeroClass: for the zero class, which generates no ray.
    """
    if c.is_zero():
        raise ZeroClass("the zero class is not on any ray")
    return math.gcd(*(abs(x) for x in c.coords)) == 1


def image_order_mod_n(generators: Sequence[Sequence[int]], functional: CohomologyClass, n: int) -> tuple[int, int]:
    """Image of the span of <generators> in Z/n under the functional.

    Args:
        generators: integer vectors spanning the subgroup of interest.
        functional: integral functional evaluated by the dot pairing.
        n: modulus, at least 1.

    Returns:
        A pair (d, order) with d = gcd(n, gcd of the functional values) and
        order = n/d, the order of the cyclic image subgroup of Z/n.  An empty
        generator list (or all values zero) gives d = n, order = 1.
    """
    if n < 1:
        raise ValueError("modulus must be at least 1")
    g = 0
    for vec in generators:
        g = math.gcd(g, abs(functional.dot(vec)))
    d = math.gcd(n, g)
    return d, n // d
