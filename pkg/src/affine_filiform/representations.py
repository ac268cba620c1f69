"""Matrix representations of Lie algebras: validation, kernels, weights, nilpotentization."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import (
    HomomorphismViolation,
    IrrationalWeights,
    NotFaithful,
    NotNilpotentAlgebra,
    ShapeMismatch,
)
from .exact_linalg import (
    Matrix,
    Subspace,
    first_nonzero_char_coefficient,
    generalized_eigenspace,
    generic_vector,
    inverse,
    kernel_basis,
    rank,
    rational_eigenvalues,
    solve,
)
from .lie_core import LieAlgebra, center, lower_central_series, nilpotency_index


@dataclass(frozen=True)
class Representation:
    algebra: LieAlgebra
    module_dim: int
    matrices: tuple[Matrix, ...]

    def evaluate(self, x: Sequence) -> Matrix:
        """rho(x) = sum_i x_i rho(X_i); polynomial coordinates give a polynomial matrix."""
        if len(x) != self.algebra.dim:
            raise ShapeMismatch(f"need {self.algebra.dim} coordinates, got {len(x)}")
        m = self.module_dim
        rows = [[0] * m for _ in range(m)]
        for xi, mat in zip(x, self.matrices):
            if not xi:
                continue
            for r in range(m):
                row = mat.rows[r]
                for c in range(m):
                    if row[c]:
                        rows[r][c] = xi * row[c] + rows[r][c]
        return Matrix(rows)

    def generic_matrix(self) -> Matrix:
        return self.evaluate(generic_vector(self.algebra.dim))


def _combination(g: LieAlgebra, coeffs: Sequence[Fraction], matrices: Sequence[Matrix], m: int) -> Matrix:
    out = Matrix.zeros(m)
    for c, mat in zip(coeffs, matrices):
        if c:
            out = out + mat * c
    return out


def homomorphism_defect(g: LieAlgebra, matrices: Sequence[Matrix], i: int, j: int) -> Matrix:
    m = matrices[0].nrows
    lhs = matrices[i].commutator(matrices[j])
    return lhs - _combination(g, g.structure_constants[i][j], matrices, m)


def make_representation(g: LieAlgebra, matrices: Sequence) -> Representation:
    """Check shapes and rho([X_i, X_j]) = [rho(X_i), rho(X_j)] for all i < j."""
    mats = tuple(m if isinstance(m, Matrix) else Matrix(m) for m in matrices)
    if len(mats) != g.dim:
        raise ShapeMismatch(f"{len(mats)} matrices for a {g.dim}-dimensional algebra")
    if not mats[0].nrows:
        raise ShapeMismatch("module dimension must be positive")
    size = mats[0].nrows
    for mat in mats:
        if mat.shape != (size, size):
            raise ShapeMismatch(f"expected {size}x{size} matrices, got {mat.shape}")
        if mat.is_polynomial:
            raise ShapeMismatch("representation matrices must be rational")
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            d = homomorphism_defect(g, mats, i, j)
            if not d.is_zero():
                raise HomomorphismViolation((i, j), d)
    return Representation(g, size, mats)


def _flatten_map(rho: Representation) -> Matrix:
    """The m^2 x n matrix of x -> sum_i x_i rho(X_i)."""
    cols = [[x for row in mat.rows for x in row] for mat in rho.matrices]
    return Matrix.from_columns(cols)


def rep_kernel(rho: Representation) -> Subspace:
    return kernel_basis(_flatten_map(rho))


def is_faithful(rho: Representation) -> bool:
    return rep_kernel(rho).is_zero()


def _require_nilpotent(g: LieAlgebra):
    if not nilpotency_index(g).is_nilpotent:
        raise NotNilpotentAlgebra("this operation is defined for nilpotent Lie algebras")


def faithful_by_center(rho: Representation) -> bool:
    """Faithfulness tested on the center only (valid for nilpotent algebras)."""
    _require_nilpotent(rho.algebra)
    z = center(rho.algebra)
    if z.is_zero():
        return True
    images = [[x for row in rho.evaluate(v).rows for x in row] for v in z.basis]
    return rank(Matrix(images)) == z.dim


def is_nilpotent_rep(rho: Representation) -> bool:
    """rho(x) nilpotent for every x, decided on the generic element."""
    return first_nonzero_char_coefficient(rho.generic_matrix()) is None


@dataclass(frozen=True)
class WeightDecomposition:
    """Module = direct sum of ``subspaces``; rho(X_j) - weights[i][j] is nilpotent on block i."""

    weights: tuple[tuple[Fraction, ...], ...]
    subspaces: tuple[Subspace, ...]

    @property
    def block_dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.subspaces)

    def adapted_basis(self) -> Matrix:
        """Block bases concatenated as columns."""
        return Matrix.from_columns([v for s in self.subspaces for v in s.basis])


def weight_decomposition(rho: Representation) -> WeightDecomposition:
    """Common refinement of generalized eigenspaces of rho(X_1), ..., rho(X_n), in that order."""
    _require_nilpotent(rho.algebra)
    blocks: list[tuple[tuple[Fraction, ...], Subspace]] = [((), Subspace.full(rho.module_dim))]
    for j, mat in enumerate(rho.matrices):
        refined = []
        for weight, block in blocks:
            local = block.restrict(mat)
            spec = rational_eigenvalues(local)
            if not spec.splits_over_q:
                raise IrrationalWeights(
                    f"rho(X{j + 1}) restricted to a {block.dim}-dimensional block does not split over Q"
                )
            for lam in spec.values:
                piece = generalized_eigenspace(local, lam)
                ambient = [
                    tuple(sum((c * b[k] for c, b in zip(coords, block.basis)), Fraction(0)) for k in range(block.ambient_dim))
                    for coords in piece.basis
                ]
                refined.append((weight + (lam,), Subspace.span(ambient, rho.module_dim)))
        blocks = refined
    return WeightDecomposition(tuple(w for w, _ in blocks), tuple(s for _, s in blocks))


class Nilpotentization(NamedTuple):
    """Result of :func:`nilpotentize`.

    ``change_of_basis`` has the adapted basis as columns, so the twisted
    matrices are ``P^-1 rho(X) P - lambda(X)`` blockwise. ``extra_dim``
    counts coordinates appended after the twisted module (0 unless the twist
    alone lost faithfulness, see :func:`nilpotentize`).
    """

    representation: Representation
    change_of_basis: Matrix
    decomposition: WeightDecomposition
    extra_dim: int


def nilpotentize(rho: Representation) -> Nilpotentization:
    """Faithful nilpotent representation obtained by untwisting every weight block.

    On block i, rho(X) is replaced by rho(X) - lambda_i(X) I. The twist keeps
    faithfulness when the center lies in [g, g]; otherwise central directions
    outside [g, g] can die, and they are restored by appending the nilpotent
    module X -> [[0, phi(X)], [0, 0]] built from linear forms phi vanishing
    on [g, g].
    """
    if not is_faithful(rho):
        raise NotFaithful("nilpotentize needs a faithful representation")
    wd = weight_decomposition(rho)
    g = rho.algebra
    p = wd.adapted_basis()
    p_inv = inverse(p)
    offsets = []
    start = 0
    for d in wd.block_dims:
        offsets.append((start, start + d))
        start += d
    twisted = []
    for j, mat in enumerate(rho.matrices):
        local = p_inv @ mat @ p
        shift = [[0] * rho.module_dim for _ in range(rho.module_dim)]
        for (lo, hi), w in zip(offsets, wd.weights):
            for k in range(lo, hi):
                shift[k][k] = w[j]
        twisted.append(local - Matrix(shift))
    out = Representation(g, rho.module_dim, tuple(twisted))

    lost = rep_kernel(out)
    extra = 0
    if not lost.is_zero():
        forms = _separating_forms(g, lost)
        extra = len(forms) + 1
        m = rho.module_dim
        total = m + extra
        mats = []
        for j, mat in enumerate(twisted):
            rows = [list(r) + [0] * extra for r in mat.rows] + [[0] * total for _ in range(extra)]
            for s, phi in enumerate(forms):
                rows[m][m + 1 + s] = phi[j]
            mats.append(rows)
        out = make_representation(g, mats)
    else:
        out = make_representation(g, twisted)
    if not rep_kernel(out).is_zero():
        raise AssertionError("nilpotentized representation is not faithful")
    return Nilpotentization(out, p, wd, extra)


def _separating_forms(g: LieAlgebra, lost: Subspace) -> list[tuple[Fraction, ...]]:
    # phi_s vanish on [g, g] and are dual to the basis of the lost subspace
    derived = lower_central_series(g).terms[1]
    rows = [list(v) for v in derived.basis] + [list(v) for v in lost.basis]
    system = Matrix(rows)
    forms = []
    for s in range(lost.dim):
        rhs = [0] * derived.dim + [int(t == s) for t in range(lost.dim)]
        phi = solve(system, rhs)
        if phi is None:
            raise NotFaithful("kernel of the twisted module meets [g, g]; no nilpotent repair exists")
        forms.append(phi)
    return forms
