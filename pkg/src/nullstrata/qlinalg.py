"""Exact linear algebra over the rationals.

Subspaces are stored in reduced row echelon form with pivot-normalized
rows, which makes the representation canonical: two subspaces are equal
exactly when their basis matrices are equal, and ``A + A == A`` holds
bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Optional, Sequence

Rat = Fraction

Vec = tuple[Rat, ...]
Mat = tuple[Vec, ...]


class DimensionMismatch(ValueError):
    """Operands do not live in the same ambient space."""


def rat(x) -> Rat:
    """Coerce an int, a string like ``-3/4``, or a Fraction to a rational."""
    if isinstance(x, Rat):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def vector(entries: Iterable) -> Vec:
    return tuple(rat(e) for e in entries)


def matrix(rows: Iterable[Iterable]) -> Mat:
    return tuple(vector(r) for r in rows)


def zero_vector(n: int) -> Vec:
    return (Fraction(0),) * n


def is_zero_vector(v: Sequence[Rat]) -> bool:
    return all(x == 0 for x in v)


def vec_add(u: Sequence[Rat], v: Sequence[Rat]) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Sequence[Rat], v: Sequence[Rat]) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c: Rat, v: Sequence[Rat]) -> Vec:
    return tuple(c * x for x in v)


def dot(u: Sequence[Rat], v: Sequence[Rat]) -> Rat:
    return sum((a * b for a, b in zip(u, v, strict=True)), Fraction(0))


def mat_vec(M: Sequence[Sequence[Rat]], v: Sequence[Rat]) -> Vec:
    return tuple(dot(row, v) for row in M)


def mat_mul(A: Sequence[Sequence[Rat]], B: Sequence[Sequence[Rat]]) -> Mat:
    bt = list(zip(*B))
    return tuple(tuple(dot(row, col) for col in bt) for row in A)


def identity(n: int) -> Mat:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def transpose(M: Sequence[Sequence[Rat]]) -> Mat:
    return tuple(tuple(col) for col in zip(*M))


def is_zero_matrix(M: Sequence[Sequence[Rat]]) -> bool:
    return all(x == 0 for row in M for x in row)


def primitive_integer_vector(v: Sequence[Rat]) -> Vec:
    """Rescale ``v`` by a positive rational so entries are coprime integers.

    The direction (sign pattern) of ``v`` is preserved.
    """
    v = vector(v)
    if is_zero_vector(v):
        return v
    den_lcm = 1
    for x in v:
        den_lcm = den_lcm * x.denominator // gcd(den_lcm, x.denominator)
    nums = [int(x * den_lcm) for x in v]
    g = 0
    for n in nums:
        g = gcd(g, abs(n))
    return tuple(Fraction(n // g) for n in nums)


def rref(rows: Iterable[Sequence[Rat]]) -> tuple[list[list[Rat]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [[rat(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    for row in m:
        if len(row) != ncols:
            raise DimensionMismatch("ragged matrix")
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(M: Iterable[Sequence[Rat]]) -> int:
    rows, _ = rref(M)
    return len(rows)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^n in canonical (RREF) form."""

    ambient_dim: int
    basis: Mat

    @staticmethod
    def from_vectors(ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [vector(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionMismatch(
                    f"vector of length {len(v)} in ambient dimension {ambient_dim}"
                )
        rows, _ = rref(vecs)
        return Subspace(ambient_dim, tuple(tuple(r) for r in rows))

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, ())

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, identity(ambient_dim))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(row) if x != 0) for row in self.basis)

    def _reduce(self, v: Sequence[Rat]) -> Vec:
        w = list(vector(v))
        for row, p in zip(self.basis, self.pivots):
            if w[p] != 0:
                f = w[p]
                w = [a - f * b for a, b in zip(w, row)]
        return tuple(w)

    def contains_vector(self, v: Sequence[Rat]) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length does not match ambient dimension")
        return is_zero_vector(self._reduce(v))

    def coords_of(self, v: Sequence[Rat]) -> Optional[Vec]:
        """Coefficients of ``v`` in this basis, or None if v is outside."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length does not match ambient dimension")
        v = vector(v)
        coeffs = tuple(v[p] for p in self.pivots)
        residue = list(v)
        for c, row in zip(coeffs, self.basis):
            if c != 0:
                residue = [a - c * b for a, b in zip(residue, row)]
        if not is_zero_vector(residue):
            return None
        return coeffs

    def contains(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(self.contains_vector(row) for row in other.basis)

    def _check_ambient(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace.from_vectors(self.ambient_dim, self.basis + other.basis)

    def __and__(self, other: "Subspace") -> "Subspace":
        """Intersection, by the Zassenhaus block trick."""
        self._check_ambient(other)
        n = self.ambient_dim
        block = [list(row) + list(row) for row in self.basis]
        block += [list(row) + [Fraction(0)] * n for row in other.basis]
        rows, _ = rref(block)
        inter = [row[n:] for row in rows if is_zero_vector(row[:n])]
        return Subspace.from_vectors(n, inter)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)


@dataclass(frozen=True)
class LinearSolution:
    particular: Vec
    kernel: Subspace


def nullspace(M: Sequence[Sequence[Rat]]) -> Subspace:
    """Kernel of M as a canonical subspace of the column-coordinate space."""
    M = matrix(M)
    if not M:
        raise DimensionMismatch("nullspace of an empty matrix is undefined")
    ncols = len(M[0])
    rows, pivots = rref(M)
    free = [c for c in range(ncols) if c not in pivots]
    gens = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        gens.append(v)
    return Subspace.from_vectors(ncols, gens)


def solve(M: Sequence[Sequence[Rat]], b: Sequence[Rat]) -> Optional[LinearSolution]:
    """Exact solution set of M x = b, or None when b is outside the column space."""
    M = matrix(M)
    b = vector(b)
    if len(M) != len(b):
        raise DimensionMismatch("right-hand side length does not match row count")
    if not M:
        raise DimensionMismatch("cannot solve an empty system")
    ncols = len(M[0])
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    rows, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, p in enumerate(pivots):
        x[p] = rows[r][ncols]
    return LinearSolution(tuple(x), nullspace(M))


def invert(M: Sequence[Sequence[Rat]]) -> Mat:
    """Inverse of a square nonsingular matrix."""
    M = matrix(M)
    n = len(M)
    aug = [list(row) + list(idrow) for row, idrow in zip(M, identity(n))]
    rows, pivots = rref(aug)
    if list(pivots) != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in rows)


def char_poly(M: Sequence[Sequence[Rat]]) -> list[Rat]:
    """Monic characteristic polynomial, coefficients [c0, ..., cn] with cn = 1.

    Faddeev-LeVerrier recursion; exact over the rationals.
    """
    M = matrix(M)
    n = len(M)
    if any(len(row) != n for row in M):
        raise DimensionMismatch("characteristic polynomial needs a square matrix")
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    B = M
    for k in range(1, n + 1):
        if k > 1:
            shifted = tuple(
                tuple(B[i][j] + (coeffs[n - k + 1] if i == j else 0) for j in range(n))
                for i in range(n)
            )
            B = mat_mul(M, shifted)
        tr = sum((B[i][i] for i in range(n)), Fraction(0))
        coeffs[n - k] = -tr / k
    return coeffs


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            out.add(d)
            out.add(n // d)
    return sorted(out)


def _eval_poly(coeffs: Sequence[Rat], x: Rat) -> Rat:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(coeffs: list[Rat], root: Rat) -> list[Rat]:
    # synthetic division by (t - root); assumes root is exact
    out = [Fraction(0)] * (len(coeffs) - 1)
    carry = Fraction(0)
    for i in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[i] + carry * root
        out[i - 1] = carry
    return out


def rational_roots(coeffs: Sequence[Rat]) -> list[tuple[Rat, int]]:
    """All rational roots with multiplicities, sorted by root value."""
    cs = [rat(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ValueError("zero polynomial has no well-defined root set")
    mult0 = 0
    while cs[0] == 0:
        cs = cs[1:]
        mult0 += 1
    roots: dict[Rat, int] = {}
    if mult0:
        roots[Fraction(0)] = mult0
    if len(cs) > 1:
        den = 1
        for c in cs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in cs]
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                if gcd(p, q) != 1:
                    continue
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if cand in roots:
                        continue
                    mult = 0
                    work = [Fraction(c) for c in ints]
                    while len(work) > 1 and _eval_poly(work, cand) == 0:
                        work = _deflate(work, cand)
                        mult += 1
                    if mult:
                        roots[cand] = mult
    return sorted(roots.items())


@dataclass(frozen=True)
class EigenReport:
    """Rational eigenstructure of a square matrix."""

    size: int
    eigs: tuple[tuple[Rat, Subspace], ...]  # distinct rational eigenvalues
    alg_mult_sum: int
    geom_mult_sum: int

    @property
    def diagonalizable_over_q(self) -> bool:
        return self.geom_mult_sum == self.size


def eigen_decomposition(M: Sequence[Sequence[Rat]]) -> EigenReport:
    M = matrix(M)
    n = len(M)
    roots = rational_roots(char_poly(M))
    eigs = []
    geom = 0
    for val, _ in roots:
        shifted = tuple(
            tuple(M[i][j] - (val if i == j else 0) for j in range(n)) for i in range(n)
        )
        space = nullspace(shifted)
        eigs.append((val, space))
        geom += space.dim
    alg = sum(m for _, m in roots)
    return EigenReport(n, tuple(eigs), alg, geom)
