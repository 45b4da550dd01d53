"""Split semisimple Lie algebras over the rationals.

Algebras are given by exact structure constants.  Built-in constructors
cover sl(n) for n <= 4 and direct sums of those; anything else can be
entered as an explicit structure-constant table (the nilpotent-orbit
catalog is then unavailable).  Construction validates antisymmetry, the
Jacobi identity and nondegeneracy of the Killing form, so every value
of type LieAlgebra is genuinely semisimple.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .qlinalg import (
    DimensionMismatch,
    Mat,
    Rat,
    Vec,
    invert,
    is_zero_matrix,
    is_zero_vector,
    mat_mul,
    mat_vec,
    matrix,
    nullspace,
    rat,
    vector,
    zero_vector,
)


class StructureError(ValueError):
    """A structure-constant table fails to define a semisimple Lie algebra."""


class AntisymmetryViolation(StructureError):
    def __init__(self, i: int, j: int, k: int):
        self.triple = (i, j, k)
        super().__init__(f"antisymmetry fails at c[{i}][{j}][{k}] != -c[{j}][{i}][{k}]")


class JacobiViolation(StructureError):
    def __init__(self, i: int, j: int, k: int):
        self.triple = (i, j, k)
        super().__init__(f"Jacobi identity fails on basis triple ({i}, {j}, {k})")


class DegenerateKilling(StructureError):
    def __init__(self, kernel_vector: Vec):
        self.kernel_vector = kernel_vector
        super().__init__(
            "Killing form is degenerate; kernel contains "
            + "(" + ", ".join(str(x) for x in kernel_vector) + ")"
        )


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """A Lie algebra with exact rational structure constants.

    ``c[i][j]`` is the coordinate vector of the bracket of basis
    elements i and j.  ``rep`` holds defining-representation matrices
    (present for built-in sl(n) and direct sums), ``factors`` the block
    sizes of the defining representation.
    """

    dim: int
    labels: tuple[str, ...]
    c: tuple[tuple[Vec, ...], ...]
    killing: Mat
    killing_inv: Mat = field(repr=False)
    rep: Optional[tuple[Mat, ...]] = field(default=None, repr=False)
    factors: tuple[int, ...] = ()

    # -- elements ----------------------------------------------------------

    def zero(self) -> Vec:
        return zero_vector(self.dim)

    def element(self, coeffs: dict[str, object] | Sequence) -> Vec:
        """Build an element from a coordinate sequence or {label: coeff}."""
        if isinstance(coeffs, dict):
            out = [Fraction(0)] * self.dim
            for label, val in coeffs.items():
                try:
                    idx = self.labels.index(label)
                except ValueError:
                    raise KeyError(f"unknown basis label {label!r}") from None
                out[idx] = rat(val)
            return tuple(out)
        v = vector(coeffs)
        if len(v) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {len(v)}")
        return v

    def basis_vector(self, i: int) -> Vec:
        return tuple(Fraction(1 if j == i else 0) for j in range(self.dim))

    def describe(self, x: Sequence[Rat]) -> str:
        parts = []
        for coeff, label in zip(x, self.labels):
            if coeff == 0:
                continue
            parts.append(f"{coeff}*{label}" if coeff != 1 else label)
        return " + ".join(parts) if parts else "0"

    # -- bracket and forms -------------------------------------------------

    def bracket(self, x: Sequence[Rat], y: Sequence[Rat]) -> Vec:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("element coordinates do not match dim")
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            ci = self.c[i]
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                v = ci[j]
                f = xi * yj
                for k, cv in enumerate(v):
                    if cv != 0:
                        out[k] += f * cv
        return tuple(out)

    def ad_matrix(self, x: Sequence[Rat]) -> Mat:
        """Matrix of ad(x): column j holds the coordinates of [x, e_j]."""
        cols = [self.bracket(x, self.basis_vector(j)) for j in range(self.dim)]
        return tuple(tuple(col[i] for col in cols) for i in range(self.dim))

    def killing_form(self, x: Sequence[Rat], y: Sequence[Rat]) -> Rat:
        return sum(
            (xi * kv for xi, kv in zip(x, mat_vec(self.killing, y), strict=True)),
            Fraction(0),
        )

    def dualize(self, xi: Sequence[Rat]) -> Vec:
        """The unique z with killing_form(z, .) equal to the functional xi."""
        if len(xi) != self.dim:
            raise DimensionMismatch("functional coordinates do not match dim")
        return mat_vec(self.killing_inv, vector(xi))

    # -- nilpotency and exponentials ----------------------------------------

    def is_ad_nilpotent(self, x: Sequence[Rat]) -> bool:
        A = self.ad_matrix(x)
        P = A
        for _ in range(self.dim):
            if is_zero_matrix(P):
                return True
            P = mat_mul(P, A)
        return is_zero_matrix(P)

    def exp_ad_apply(self, t: Rat, u: Sequence[Rat], v: Sequence[Rat]) -> Vec:
        """exp(t ad u) applied to v; u must be ad-nilpotent."""
        A = self.ad_matrix(u)
        acc = list(vector(v))
        term = vector(v)
        for q in range(1, self.dim + 2):
            term = tuple(rat(t) / q * x for x in mat_vec(A, term))
            if is_zero_vector(term):
                return tuple(acc)
            acc = [a + b for a, b in zip(acc, term)]
        raise ValueError("element is not ad-nilpotent; exponential does not terminate")

    # -- defining representation ---------------------------------------------

    def rep_matrix(self, x: Sequence[Rat]) -> Mat:
        if self.rep is None:
            raise UnsupportedType("this algebra carries no defining representation")
        n = len(self.rep[0])
        out = [[Fraction(0)] * n for _ in range(n)]
        for coeff, base in zip(x, self.rep, strict=True):
            if coeff == 0:
                continue
            for i in range(n):
                for j in range(n):
                    if base[i][j] != 0:
                        out[i][j] += coeff * base[i][j]
        return tuple(tuple(row) for row in out)

    def coords_of_rep_matrix(self, M: Sequence[Sequence[Rat]]) -> Vec:
        """Coordinates of a block-diagonal traceless matrix in this basis."""
        if self.rep is None:
            raise UnsupportedType("this algebra carries no defining representation")
        M = matrix(M)
        coords: list[Rat] = []
        offset = 0
        for n in self.factors:
            block = [[M[offset + i][offset + j] for j in range(n)] for i in range(n)]
            if sum((block[i][i] for i in range(n)), Fraction(0)) != 0:
                raise ValueError("matrix block is not traceless")
            uppers = [block[i][j] for i in range(n) for j in range(i + 1, n)]
            partial = Fraction(0)
            hs = []
            for i in range(n - 1):
                partial += block[i][i]
                hs.append(partial)
            lowers = [block[j][i] for i in range(n) for j in range(i + 1, n)]
            coords.extend(uppers + hs + lowers)
            offset += n
        if offset != len(M):
            raise DimensionMismatch("matrix size does not match the factor blocks")
        return tuple(coords)


class UnsupportedType(TypeError):
    """Operation needs a built-in (type A) defining representation."""


# -- construction and validation --------------------------------------------


def _validate_structure(dim: int, c) -> None:
    for i in range(dim):
        for j in range(i, dim):
            for k in range(dim):
                if c[i][j][k] != -c[j][i][k]:
                    raise AntisymmetryViolation(i, j, k)


def _validate_jacobi(alg: LieAlgebra) -> None:
    for i in range(alg.dim):
        ei = alg.basis_vector(i)
        for j in range(i + 1, alg.dim):
            ej = alg.basis_vector(j)
            for k in range(j + 1, alg.dim):
                ek = alg.basis_vector(k)
                total = vector(
                    a + b + c
                    for a, b, c in zip(
                        alg.bracket(ei, alg.bracket(ej, ek)),
                        alg.bracket(ej, alg.bracket(ek, ei)),
                        alg.bracket(ek, alg.bracket(ei, ej)),
                    )
                )
                if not is_zero_vector(total):
                    raise JacobiViolation(i, j, k)


def _killing_matrix(dim: int, c) -> Mat:
    K = []
    for i in range(dim):
        row = []
        for j in range(dim):
            total = Fraction(0)
            for a in range(dim):
                cib = c[i][a]
                for b in range(dim):
                    if cib[b] != 0 and c[j][b][a] != 0:
                        total += cib[b] * c[j][b][a]
            row.append(total)
        K.append(tuple(row))
    return tuple(K)


def from_structure_constants(
    c_table: Sequence[Sequence[Sequence]],
    labels: Optional[Sequence[str]] = None,
    rep: Optional[Sequence[Sequence[Sequence]]] = None,
    factors: Sequence[int] = (),
) -> LieAlgebra:
    """Build and validate a Lie algebra from a full structure tensor."""
    dim = len(c_table)
    c = tuple(tuple(vector(c_table[i][j]) for j in range(dim)) for i in range(dim))
    for i in range(dim):
        if len(c[i]) != dim or any(len(v) != dim for v in c[i]):
            raise DimensionMismatch("structure tensor is not dim x dim x dim")
    _validate_structure(dim, c)
    K = _killing_matrix(dim, c)
    ker = nullspace(K)
    if ker.dim > 0:
        raise DegenerateKilling(ker.basis[0])
    if labels is None:
        labels = tuple(f"x{i}" for i in range(dim))
    alg = LieAlgebra(
        dim=dim,
        labels=tuple(labels),
        c=c,
        killing=K,
        killing_inv=invert(K),
        rep=tuple(matrix(m) for m in rep) if rep is not None else None,
        factors=tuple(factors),
    )
    _validate_jacobi(alg)
    return alg


def _sl_basis_matrices(n: int) -> tuple[list[str], list[Mat]]:
    labels: list[str] = []
    mats: list[Mat] = []

    def unit(i: int, j: int) -> Mat:
        return tuple(
            tuple(Fraction(1) if (r, s) == (i, j) else Fraction(0) for s in range(n))
            for r in range(n)
        )

    for i in range(n):
        for j in range(i + 1, n):
            labels.append(f"e{i + 1}{j + 1}")
            mats.append(unit(i, j))
    for i in range(n - 1):
        labels.append(f"h{i + 1}")
        mats.append(
            tuple(
                tuple(
                    Fraction(1)
                    if (r, s) == (i, i)
                    else Fraction(-1)
                    if (r, s) == (i + 1, i + 1)
                    else Fraction(0)
                    for s in range(n)
                )
                for r in range(n)
            )
        )
    for i in range(n):
        for j in range(i + 1, n):
            labels.append(f"e{j + 1}{i + 1}")
            mats.append(unit(j, i))
    return labels, mats


def _matrix_coords_sl(n: int, M: Sequence[Sequence[Rat]]) -> Vec:
    uppers = [M[i][j] for i in range(n) for j in range(i + 1, n)]
    partial = Fraction(0)
    hs = []
    for i in range(n - 1):
        partial += M[i][i]
        hs.append(partial)
    lowers = [M[j][i] for i in range(n) for j in range(i + 1, n)]
    return tuple(uppers + hs + lowers)


def sl(n: int) -> LieAlgebra:
    """The split special linear algebra sl(n), 2 <= n <= 4."""
    if not 2 <= n <= 4:
        raise ValueError("built-in catalog covers sl(n) for 2 <= n <= 4 only")
    labels, mats = _sl_basis_matrices(n)
    dim = len(mats)
    c_table = []
    for i in range(dim):
        row = []
        for j in range(dim):
            comm = tuple(
                tuple(a - b for a, b in zip(r1, r2))
                for r1, r2 in zip(mat_mul(mats[i], mats[j]), mat_mul(mats[j], mats[i]))
            )
            row.append(_matrix_coords_sl(n, comm))
        c_table.append(row)
    return from_structure_constants(c_table, labels=labels, rep=mats, factors=(n,))


def direct_sum(*algebras: LieAlgebra) -> LieAlgebra:
    """Direct sum; cross brackets vanish, defining reps go block diagonal."""
    if not algebras:
        raise ValueError("direct sum of no algebras")
    if len(algebras) == 1:
        return algebras[0]
    dim = sum(a.dim for a in algebras)
    labels: list[str] = []
    for idx, a in enumerate(algebras):
        labels.extend(f"{lbl}@{idx}" for lbl in a.labels)
    c_table = [[zero_vector(dim) for _ in range(dim)] for _ in range(dim)]
    offset = 0
    for a in algebras:
        for i in range(a.dim):
            for j in range(a.dim):
                v = a.c[i][j]
                c_table[offset + i][offset + j] = (
                    zero_vector(offset) + v + zero_vector(dim - offset - a.dim)
                )
        offset += a.dim
    rep = None
    factors: tuple[int, ...] = ()
    if all(a.rep is not None for a in algebras):
        factors = tuple(n for a in algebras for n in a.factors)
        total = sum(len(a.rep[0]) for a in algebras)
        rep_list = []
        roff = 0
        for a in algebras:
            size = len(a.rep[0])
            for m in a.rep:
                big = [[Fraction(0)] * total for _ in range(total)]
                for i in range(size):
                    for j in range(size):
                        big[roff + i][roff + j] = m[i][j]
                rep_list.append(tuple(tuple(row) for row in big))
            roff += size
        rep = rep_list
    return from_structure_constants(c_table, labels=labels, rep=rep, factors=factors)


_BUILTIN_RE = re.compile(r"^sl\(?([2-4])\)?$")


def build_algebra(spec: str) -> LieAlgebra:
    """Parse "sl2", "sl(3)", or sums like "sl2+sl2" into an algebra."""
    parts = [p.strip() for p in spec.split("+")]
    algs = []
    for p in parts:
        m = _BUILTIN_RE.match(p)
        if not m:
            raise ValueError(f"unknown algebra spec {p!r}; expected sl2, sl3, or sl4")
        algs.append(sl(int(m.group(1))))
    return direct_sum(*algs)


def parse_structure_table(
    text: str, dim: Optional[int] = None, labels: Optional[Sequence[str]] = None
) -> LieAlgebra:
    """Structure constants from lines ``i j k c`` (0-based, c rational).

    Omitted entries are zero.  The table must already be antisymmetric;
    nothing is mirrored automatically.
    """
    entries: list[tuple[int, int, int, Rat]] = []
    maxidx = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4:
            raise StructureError(f"line {lineno}: expected 'i j k c', got {raw!r}")
        try:
            i, j, k = (int(p) for p in parts[:3])
            val = rat(parts[3])
        except (ValueError, TypeError) as exc:
            raise StructureError(f"line {lineno}: {exc}") from None
        if min(i, j, k) < 0:
            raise StructureError(f"line {lineno}: negative index")
        entries.append((i, j, k, val))
        maxidx = max(maxidx, i, j, k)
    if dim is None:
        dim = maxidx + 1
    if dim <= 0:
        raise StructureError("empty structure table and no dimension given")
    table = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for i, j, k, val in entries:
        if max(i, j, k) >= dim:
            raise StructureError(f"index out of range for dimension {dim}")
        table[i][j][k] = val
    return from_structure_constants(table, labels=labels)


def load_structure_table(path: str) -> LieAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_structure_table(fh.read())
