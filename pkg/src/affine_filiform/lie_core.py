"""Lie algebras given by exact structure constants.

``c[i][j][k]`` is the coefficient of ``X_k`` in ``[X_i, X_j]``. Indices are
0-based in code and 1-based in every document and message.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, NamedTuple, Sequence

from .errors import AntisymmetryViolation, BadDimension, DimensionMismatch, JacobiViolation, ShapeMismatch
from .exact_linalg import Matrix, Subspace, as_scalar, kernel_basis

Tensor3 = tuple[tuple[tuple[Fraction, ...], ...], ...]


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    structure_constants: Tensor3 = field(repr=False)
    basis_names: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.basis_names:
            object.__setattr__(self, "basis_names", tuple(f"X{i + 1}" for i in range(self.dim)))

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        return bracket(self, x, y)

    def basis_vector(self, i: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def basis_bracket(self, i: int, j: int) -> tuple[Fraction, ...]:
        return self.structure_constants[i][j]

    def ad(self, x: Sequence) -> Matrix:
        """Matrix of Y -> [x, Y]; column j is [x, X_j]."""
        _check_len(self, x)
        c = self.structure_constants
        n = self.dim
        cols = []
        for j in range(n):
            col = []
            for k in range(n):
                acc = 0
                for i in range(n):
                    if x[i] and c[i][j][k]:
                        acc = x[i] * c[i][j][k] + acc
                col.append(acc)
            cols.append(col)
        return Matrix.from_columns(cols)

    def ad_basis(self, i: int) -> Matrix:
        return self.ad(self.basis_vector(i))

    def is_abelian(self) -> bool:
        return not any(x for plane in self.structure_constants for vec in plane for x in vec)

    def brackets(self) -> dict[tuple[int, int], tuple[Fraction, ...]]:
        """Nonzero brackets [X_i, X_j] with i < j."""
        out = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                v = self.structure_constants[i][j]
                if any(v):
                    out[(i, j)] = v
        return out


def _check_len(g: LieAlgebra, v: Sequence):
    if len(v) != g.dim:
        raise DimensionMismatch(f"vector of length {len(v)} in a {g.dim}-dimensional algebra")


def _freeze(tensor, n: int) -> Tensor3:
    if len(tensor) != n or any(len(p) != n for p in tensor) or any(len(v) != n for p in tensor for v in p):
        raise ShapeMismatch(f"structure constants must have shape {n}x{n}x{n}")
    return tuple(tuple(tuple(as_scalar(x) for x in v) for v in p) for p in tensor)


def _vec_add(*vs):
    return tuple(sum(xs, Fraction(0)) for xs in zip(*vs))


def make_lie_algebra(dim: int, structure_constants, basis_names: Sequence[str] = ()) -> LieAlgebra:
    """Validate a full n x n x n tensor (antisymmetry, then Jacobi) and wrap it."""
    if dim < 1:
        raise BadDimension("dimension must be positive")
    c = _freeze(structure_constants, dim)
    if basis_names and len(basis_names) != dim:
        raise ShapeMismatch(f"{len(basis_names)} basis names for dimension {dim}")
    zero = (Fraction(0),) * dim
    for i in range(dim):
        if c[i][i] != zero:
            raise AntisymmetryViolation((i, i), c[i][i])
        for j in range(i + 1, dim):
            s = _vec_add(c[i][j], c[j][i])
            if any(s):
                raise AntisymmetryViolation((i, j), s)
    g = LieAlgebra(dim, c, tuple(basis_names))
    e = [g.basis_vector(i) for i in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(j + 1, dim):
                s = _vec_add(
                    bracket(g, e[i], c[j][k]),
                    bracket(g, e[j], c[k][i]),
                    bracket(g, e[k], c[i][j]),
                )
                if any(s):
                    raise JacobiViolation((i, j, k), s)
    return g


def from_brackets(
    dim: int,
    brackets: Mapping[tuple[int, int], Sequence | Mapping[int, object]],
    basis_names: Sequence[str] = (),
) -> LieAlgebra:
    """Build from brackets [X_i, X_j] with 0-based i < j; the rest is mirrored.

    A bracket value is either a full coefficient vector or a sparse
    ``{k: coefficient}`` mapping.
    """
    if dim < 1:
        raise BadDimension("dimension must be positive")
    c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j), value in brackets.items():
        if not (0 <= i < j < dim):
            raise ShapeMismatch(f"bracket indices must satisfy i < j < dim, got ({i + 1}, {j + 1})")
        if isinstance(value, Mapping):
            vec = [Fraction(0)] * dim
            for k, coeff in value.items():
                if not 0 <= k < dim:
                    raise ShapeMismatch(f"basis index {k + 1} out of range")
                vec[k] = as_scalar(coeff)
        else:
            if len(value) != dim:
                raise ShapeMismatch(f"bracket vector must have length {dim}")
            vec = [as_scalar(x) for x in value]
        c[i][j] = vec
        c[j][i] = [-x for x in vec]
    return make_lie_algebra(dim, c, basis_names)


def bracket(g: LieAlgebra, x: Sequence, y: Sequence) -> tuple:
    """Bilinear extension of the structure constants. Works for polynomial coordinates too."""
    _check_len(g, x)
    _check_len(g, y)
    c = g.structure_constants
    n = g.dim
    out = [0] * n
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if not y[j] or i == j:
                continue
            vec = c[i][j]
            if not any(vec):
                continue
            w = x[i] * y[j]
            for k in range(n):
                if vec[k]:
                    out[k] = w * vec[k] + out[k]
    return tuple(Fraction(v) if isinstance(v, int) else v for v in out)


@dataclass(frozen=True)
class CentralSeries:
    """C^0 g = g, C^{i+1} g = [g, C^i g], up to and including the first repeated term."""

    terms: tuple[Subspace, ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(t.dim for t in self.terms)


def lower_central_series(g: LieAlgebra) -> CentralSeries:
    current = Subspace.full(g.dim)
    terms = [current]
    basis = [g.basis_vector(i) for i in range(g.dim)]
    while True:
        nxt = Subspace.span((bracket(g, b, v) for b in basis for v in current.basis), g.dim)
        terms.append(nxt)
        if nxt.is_zero() or nxt == current:
            return CentralSeries(tuple(terms))
        current = nxt


def center(g: LieAlgebra) -> Subspace:
    """Z(g): x with [x, X_j] = 0 for every j."""
    n = g.dim
    c = g.structure_constants
    rows = [[c[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
    return kernel_basis(Matrix(rows))


class NilpotencyIndex(NamedTuple):
    is_nilpotent: bool
    index: int | None


def nilpotency_index(g: LieAlgebra) -> NilpotencyIndex:
    """Smallest k with C^k g = 0, or (False, None)."""
    series = lower_central_series(g)
    for k, term in enumerate(series.terms):
        if term.is_zero():
            return NilpotencyIndex(True, k)
    return NilpotencyIndex(False, None)


def is_filiform(g: LieAlgebra) -> bool:
    # dimensions <= 2 are excluded: the 2-dim abelian algebra would otherwise qualify
    n = g.dim
    if n < 3:
        return False
    nil, k = nilpotency_index(g)
    if not nil or k != n - 1:
        return False
    dims = lower_central_series(g).dims
    expected = (n,) + tuple(n - i - 1 for i in range(1, n))
    if dims != expected:
        raise AssertionError(f"filiform algebra with unexpected series dimensions {dims}")
    return True


def model_filiform(n: int) -> LieAlgebra:
    """L_n: [X_1, X_i] = X_{i+1} for 2 <= i <= n-1."""
    if n < 3:
        raise BadDimension(f"L_n needs n >= 3, got {n}")
    return from_brackets(n, {(0, i): {i + 1: 1} for i in range(1, n - 1)})


def heisenberg() -> LieAlgebra:
    return model_filiform(3)


def abelian(n: int) -> LieAlgebra:
    if n < 1:
        raise BadDimension(f"abelian algebra needs n >= 1, got {n}")
    return from_brackets(n, {})
