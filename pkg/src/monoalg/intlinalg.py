"""Exact integer and rational linear algebra.

Everything here runs on Python's arbitrary-precision ints and on
``fractions.Fraction``; no floating point is used anywhere.  Matrices are
lists of row lists, vectors are tuples.  All functions are pure.

Conventions fixed project-wide:

* lattices are row spans of integer matrices;
* the Hermite normal form is row-style and lower-triangular (pivots on or
  left of the diagonal, the entry below a pivot reduced into ``[0, pivot)``),
  which makes lattice bases canonical and output deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import (
    AmbiguousSolutionError,
    InfiniteQuotientError,
    NotInLatticeError,
)

Vec = tuple[int, ...]
IntMatrix = list[list[int]]


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a and b:
        assert len(a[0]) == len(b)
    cols = len(b[0]) if b else 0
    return [[sum(ra[k] * b[k][j] for k in range(len(b))) for j in range(cols)]
            for ra in a]


def det(mat: IntMatrix) -> int:
    """Determinant of a square integer matrix, by fraction-free expansion."""
    n = len(mat)
    if n == 0:
        return 1
    assert all(len(r) == n for r in mat)
    # Bareiss elimination keeps everything integral.
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            sel = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if sel is None:
                return 0
            m[k], m[sel] = m[sel], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def _row_add(mat: IntMatrix, i: int, src: int, q: int) -> None:
    mat[i] = [a + q * b for a, b in zip(mat[i], mat[src])]


def _col_add(mat: IntMatrix, j: int, src: int, q: int) -> None:
    for row in mat:
        row[j] += q * row[src]


def smith_normal_form(mat: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return unimodular ``U, V`` and diagonal ``D`` with ``U @ mat @ V == D``.

    The diagonal is nonnegative and satisfies ``D[i][i] | D[i+1][i+1]``
    (trailing zeros allowed).  Total function; the pivot choice (entry of
    minimal absolute value, first position wins ties) makes the output
    deterministic.
    """
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    assert all(len(r) == ncols for r in mat)
    D = [list(r) for r in mat]
    U = identity(nrows)
    V = identity(ncols)

    t = 0
    while t < min(nrows, ncols):
        piv = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                e = D[i][j]
                if e != 0 and (piv is None or abs(e) < abs(D[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        if piv[0] != t:
            D[t], D[piv[0]] = D[piv[0]], D[t]
            U[t], U[piv[0]] = U[piv[0]], U[t]
        if piv[1] != t:
            for m in (D, V):
                for row in m:
                    row[t], row[piv[1]] = row[piv[1]], row[t]

        while True:
            dirty = False
            # Clear column t below the pivot.  A nonzero remainder is
            # strictly smaller than the pivot, so swapping it up makes
            # progress and the loop terminates.
            for i in range(t + 1, nrows):
                while D[i][t] != 0:
                    q = D[i][t] // D[t][t]
                    if q:
                        _row_add(D, i, t, -q)
                        _row_add(U, i, t, -q)
                    if D[i][t]:
                        D[t], D[i] = D[i], D[t]
                        U[t], U[i] = U[i], U[t]
                        dirty = True
            # Clear row t right of the pivot.
            for j in range(t + 1, ncols):
                while D[t][j] != 0:
                    q = D[t][j] // D[t][t]
                    if q:
                        _col_add(D, j, t, -q)
                        _col_add(V, j, t, -q)
                    if D[t][j]:
                        for m in (D, V):
                            for row in m:
                                row[t], row[j] = row[j], row[t]
                        dirty = True
            if dirty:
                continue
            # Pivot must divide the remaining block for the chain property;
            # pulling in an offending row and re-clearing shrinks the pivot.
            bad = None
            for i in range(t + 1, nrows):
                if any(D[i][j] % D[t][t] for j in range(t + 1, ncols)):
                    bad = i
                    break
            if bad is None:
                break
            _row_add(D, t, bad, 1)
            _row_add(U, t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return U, D, V


# ---------------------------------------------------------------------------
# Hermite normal form and lattice bases
# ---------------------------------------------------------------------------

def _hnf_upper(a: IntMatrix) -> IntMatrix:
    """Classic row echelon HNF: pivots positive, entries above a pivot
    reduced into ``[0, pivot)``, zero rows dropped."""
    A = [row[:] for row in a]
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    r = 0
    for j in range(ncols):
        if r == nrows:
            break
        while True:
            piv = None
            for i in range(r, nrows):
                if A[i][j] != 0 and (piv is None or abs(A[i][j]) < abs(A[piv][j])):
                    piv = i
            if piv is None:
                break
            if piv != r:
                A[r], A[piv] = A[piv], A[r]
            again = False
            for i in range(r + 1, nrows):
                if A[i][j]:
                    q = A[i][j] // A[r][j]
                    if q:
                        A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    if A[i][j]:
                        again = True
            if not again:
                if A[r][j] < 0:
                    A[r] = [-x for x in A[r]]
                for k in range(r):
                    q = A[k][j] // A[r][j]
                    if q:
                        A[k] = [x - q * y for x, y in zip(A[k], A[r])]
                r += 1
                break
    return A[:r]


def hermite_normal_form(rows: list[Vec] | IntMatrix) -> IntMatrix:
    """Canonical lower-triangular row HNF of the lattice spanned by ``rows``.

    Realized by running the upper-echelon form on the column-reversed
    matrix and mirroring back, which is a fixed coordinate permutation and
    therefore preserves the lattice.
    """
    mat = [list(r) for r in rows]
    mirrored = _hnf_upper([row[::-1] for row in mat])
    return [row[::-1] for row in mirrored][::-1]


def lattice_basis(vectors: list[Vec] | IntMatrix) -> IntMatrix:
    """Canonical basis (possibly empty) of the lattice generated by ``vectors``."""
    return hermite_normal_form(vectors)


# ---------------------------------------------------------------------------
# Rational solves
# ---------------------------------------------------------------------------

def _reduce_augmented(mat: IntMatrix, rhs) -> tuple[list[list[Fraction]], list[int], bool]:
    """Gauss-Jordan on ``[mat | rhs]``; returns the reduced rows, the pivot
    columns, and whether the system is consistent."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])]
           for i, row in enumerate(mat)]
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        sel = next((i for i in range(row, m) if aug[i][col] != 0), None)
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        pv = aug[row][col]
        aug[row] = [a / pv for a in aug[row]]
        for i in range(m):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
    consistent = all(aug[i][n] == 0 for i in range(row, m))
    return aug, pivots, consistent


def _solution_from(aug, pivots, n) -> tuple[Fraction, ...]:
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = aug[i][n]
    return tuple(x)


def solve_rational(mat: IntMatrix, rhs: list[int] | Vec) -> tuple[Fraction, ...] | None:
    """Solve ``mat @ x == rhs`` exactly over Q.

    Returns the unique solution when the columns of ``mat`` are independent
    and ``rhs`` lies in their span, ``None`` when the system is inconsistent,
    and raises :class:`AmbiguousSolutionError` for dependent columns with a
    consistent right-hand side.
    """
    n = len(mat[0]) if mat else 0
    if len(rhs) != len(mat):
        # a shape mismatch can never be consistent
        return None
    aug, pivots, consistent = _reduce_augmented(mat, rhs)
    if not consistent:
        return None
    if len(pivots) < n:
        raise AmbiguousSolutionError("columns are linearly dependent")
    return _solution_from(aug, pivots, n)


def solve_rational_canonical(mat: IntMatrix, rhs: list[int] | Vec) -> tuple[Fraction, ...] | None:
    """Some exact solution of ``mat @ x == rhs`` or ``None`` if inconsistent.

    Unlike :func:`solve_rational` this tolerates dependent columns; free
    variables are pinned to zero, which makes the returned solution
    canonical for a fixed column order.
    """
    aug, pivots, consistent = _reduce_augmented(mat, rhs)
    if not consistent:
        return None
    return _solution_from(aug, pivots, len(mat[0]) if mat else 0)


def invert_rational(mat: IntMatrix) -> list[list[Fraction]]:
    """Inverse of a nonsingular square integer matrix, over Q."""
    n = len(mat)
    aug = [[Fraction(x) for x in row] +
           [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        sel = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if sel is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[sel] = aug[sel], aug[col]
        pv = aug[col][col]
        aug[col] = [a / pv for a in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def row_space_solver(basis: IntMatrix) -> list[list[Fraction]]:
    """For ``basis`` with independent rows, a matrix ``P`` with
    ``basis @ P == I``; then ``x @ P`` recovers row coordinates."""
    r = len(basis)
    gram = mat_mul(basis, [list(col) for col in zip(*basis)])
    ginv = invert_rational(gram)
    # P = basis^T @ gram^{-1}
    m = len(basis[0]) if basis else 0
    return [[sum(Fraction(basis[k][i]) * ginv[k][j] for k in range(r))
             for j in range(r)] for i in range(m)]


# ---------------------------------------------------------------------------
# Finite quotients of lattices
# ---------------------------------------------------------------------------

class FiniteAbelianGroup:
    """A finite quotient ``L / L'`` of integer lattices.

    ``invariant_factors`` is the ascending divisibility chain (factors 1 are
    dropped, so the tuple may be empty for the trivial group).  ``project``
    is a total homomorphism from lattice elements to residue tuples modulo
    those factors; it vanishes exactly on ``L'`` and its fibers are the
    cosets, so the residue tuple is the canonical coset key.
    """

    def __init__(self, sup_basis: IntMatrix, diag: list[int],
                 col_transform: IntMatrix):
        self._sup = [row[:] for row in sup_basis]
        self._diag = list(diag)
        self._v = [row[:] for row in col_transform]
        self._solver = row_space_solver(self._sup) if self._sup else []
        self.invariant_factors: tuple[int, ...] = tuple(
            f for f in diag if f > 1)
        order = 1
        for f in self.invariant_factors:
            order *= f
        self.order: int = order
        self._keep = [i for i, f in enumerate(diag) if f > 1]

    def coords(self, x: list[int] | Vec) -> tuple[int, ...]:
        """Integer coordinates of ``x`` in the ambient lattice basis."""
        r = len(self._sup)
        if r == 0:
            if any(x):
                raise NotInLatticeError(f"{tuple(x)} is not in the lattice")
            return ()
        if len(x) != len(self._sup[0]):
            raise NotInLatticeError(
                f"vector has length {len(x)}, ambient dimension is {len(self._sup[0])}")
        c = [sum(Fraction(x[i]) * self._solver[i][j] for i in range(len(x)))
             for j in range(r)]
        if any(ci.denominator != 1 for ci in c):
            raise NotInLatticeError(f"{tuple(x)} is not in the lattice")
        ci = [int(v) for v in c]
        # confirm x is in the row span, not merely integral in projection
        for j in range(len(x)):
            if sum(ci[k] * self._sup[k][j] for k in range(r)) != x[j]:
                raise NotInLatticeError(f"{tuple(x)} is not in the lattice")
        return tuple(ci)

    def project(self, x: list[int] | Vec) -> tuple[int, ...]:
        """Canonical coset label of ``x``; constant on ``L'``-cosets."""
        c = self.coords(x)
        r = len(self._diag)
        cp = [sum(c[k] * self._v[k][j] for k in range(r)) for j in range(r)]
        return tuple(cp[i] % self._diag[i] for i in self._keep)

    def element_order(self, x: list[int] | Vec) -> int:
        """Order of the class of ``x`` in the quotient."""
        label = self.project(x)
        result = 1
        for res, f in zip(label, self.invariant_factors):
            result = lcm(result, f // gcd(f, res))
        return result

    def __repr__(self) -> str:
        if not self.invariant_factors:
            return "FiniteAbelianGroup(trivial)"
        parts = " x ".join(f"Z/{f}" for f in self.invariant_factors)
        return f"FiniteAbelianGroup({parts})"


def quotient_group(sup_basis: IntMatrix, sub_gens: list[Vec] | IntMatrix) -> FiniteAbelianGroup:
    """Quotient of the lattice spanned by ``sup_basis`` (independent rows)
    by the sublattice generated by ``sub_gens``.

    Raises :class:`NotInLatticeError` if some generator falls outside the
    big lattice and :class:`InfiniteQuotientError` if the ranks differ.
    """
    r = len(sup_basis)
    probe = FiniteAbelianGroup(sup_basis, [1] * r, identity(r))
    coeff_rows = [list(probe.coords(w)) for w in sub_gens]
    if r == 0:
        return FiniteAbelianGroup([], [], [])
    _, d, v = smith_normal_form(coeff_rows)
    diag = [d[i][i] if i < len(d) else 0 for i in range(r)]
    if any(f == 0 for f in diag):
        raise InfiniteQuotientError(
            "sublattice has smaller rank, the quotient is infinite")
    return FiniteAbelianGroup(sup_basis, diag, v)


# ---------------------------------------------------------------------------
# Exact cone membership (phase-1 simplex over Q)
# ---------------------------------------------------------------------------

def nonnegative_combination_exists(vectors: list[Vec], target: Vec) -> bool:
    """Whether ``target`` equals a rational combination of ``vectors`` with
    nonnegative coefficients.

    Phase-1 simplex with Bland's rule on exact fractions; Bland's rule rules
    out cycling, so this always terminates.
    """
    m = len(target)
    k = len(vectors)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for i in range(m):
        coeffs = [Fraction(v[i]) for v in vectors]
        b = Fraction(target[i])
        if b < 0:
            coeffs = [-c for c in coeffs]
            b = -b
        rows.append(coeffs + [Fraction(0)] * m)
        rhs.append(b)
    for i in range(m):
        rows[i][k + i] = Fraction(1)
    basis = list(range(k, k + m))
    cost = [Fraction(0)] * k + [Fraction(1)] * m

    def reduced_costs() -> list[Fraction]:
        out = []
        for j in range(k + m):
            cj = cost[j] - sum(cost[basis[i]] * rows[i][j] for i in range(m))
            out.append(cj)
        return out

    while True:
        red = reduced_costs()
        enter = next((j for j in range(k + m) if red[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if rows[i][enter] > 0:
                ratio = rhs[i] / rows[i][enter]
                if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            # unbounded phase-1 cannot happen with artificials, be safe
            return False
        pv = rows[leave][enter]
        rows[leave] = [a / pv for a in rows[leave]]
        rhs[leave] /= pv
        for i in range(m):
            if i != leave and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[leave])]
                rhs[i] -= f * rhs[leave]
        basis[leave] = enter
    objective = sum(cost[basis[i]] * rhs[i] for i in range(m))
    return objective == 0
