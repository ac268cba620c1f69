"""Affine connections (left-symmetric products) on Lie algebras.

``gamma[i][j][k]`` is the coefficient of ``X_k`` in ``nabla(X_i, X_j)``. The
left operator ``f_x`` is ``y -> nabla(x, y)`` and the right operator ``R_x``
is ``y -> nabla(y, x)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import (
    Degenerate,
    FlatnessViolation,
    NotAffineShape,
    NotAntisymmetric,
    NotClosed,
    OddDimension,
    ShapeMismatch,
    TorsionViolation,
)
from .exact_linalg import (
    Entry,
    Matrix,
    MultiPoly,
    as_scalar,
    char_poly_coefficients,
    first_nonzero_char_coefficient,
    generic_vector,
    inverse,
    rank,
    sign_combinations,
)
from .lie_core import LieAlgebra, Tensor3, bracket
from .representations import Representation, _require_nilpotent, make_representation, rep_kernel


@dataclass(frozen=True)
class AffineConnection:
    algebra: LieAlgebra
    gamma: Tensor3

    def __call__(self, x: Sequence, y: Sequence) -> tuple:
        return nabla(self.gamma, x, y)


def nabla(gamma: Tensor3, x: Sequence, y: Sequence) -> tuple:
    """Bilinear extension of gamma."""
    n = len(gamma)
    out = [0] * n
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if not y[j]:
                continue
            vec = gamma[i][j]
            w = x[i] * y[j]
            for k in range(n):
                if vec[k]:
                    out[k] = w * vec[k] + out[k]
    return tuple(Fraction(v) if isinstance(v, int) else v for v in out)


def _freeze_gamma(gamma, n: int) -> Tensor3:
    if len(gamma) != n or any(len(p) != n for p in gamma) or any(len(v) != n for p in gamma for v in p):
        raise ShapeMismatch(f"connection tensor must have shape {n}x{n}x{n}")
    return tuple(tuple(tuple(as_scalar(x) for x in v) for v in p) for p in gamma)


def _sub(*vs):
    head, *rest = vs
    return tuple(a - sum(others, Fraction(0)) for a, *others in zip(head, *rest))


def torsion_defect(g: LieAlgebra, gamma: Tensor3, i: int, j: int) -> tuple:
    return _sub(gamma[i][j], gamma[j][i], g.structure_constants[i][j])


def flatness_defect(g: LieAlgebra, gamma: Tensor3, i: int, j: int, k: int) -> tuple:
    e = [g.basis_vector(t) for t in range(g.dim)]
    return _sub(
        nabla(gamma, e[i], gamma[j][k]),
        nabla(gamma, e[j], gamma[i][k]),
        nabla(gamma, g.structure_constants[i][j], e[k]),
    )


def make_connection(g: LieAlgebra, gamma) -> AffineConnection:
    """Validate both connection axioms exactly; report the first violation in lexicographic order."""
    n = g.dim
    gam = _freeze_gamma(gamma, n)
    for i in range(n):
        for j in range(i + 1, n):
            d = torsion_defect(g, gam, i, j)
            if any(d):
                raise TorsionViolation((i, j), d)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                d = flatness_defect(g, gam, i, j, k)
                if any(d):
                    raise FlatnessViolation((i, j, k), d)
    return AffineConnection(g, gam)


def adjoint_gamma(g: LieAlgebra) -> Tensor3:
    """nabla(X, Y) = [X, Y]; satisfies torsion only when g is abelian."""
    return g.structure_constants


def zero_connection(g: LieAlgebra) -> AffineConnection:
    n = g.dim
    return make_connection(g, [[[0] * n for _ in range(n)] for _ in range(n)])


def left_operator(c: AffineConnection, x: Sequence) -> Matrix:
    """Matrix of y -> nabla(x, y)."""
    _check_len(c, x)
    e = [c.algebra.basis_vector(j) for j in range(c.algebra.dim)]
    return _columns_matrix([nabla(c.gamma, x, ej) for ej in e], x)


def right_operator(c: AffineConnection, x: Sequence | None = None) -> Matrix:
    """Matrix of y -> nabla(y, x). ``x=None`` gives the generic operator in x1..xn."""
    if x is None:
        x = generic_vector(c.algebra.dim)
    _check_len(c, x)
    e = [c.algebra.basis_vector(j) for j in range(c.algebra.dim)]
    return _columns_matrix([nabla(c.gamma, ej, x) for ej in e], x)


def _columns_matrix(cols, x) -> Matrix:
    variables = next((v.variables for v in x if isinstance(v, MultiPoly)), None)
    if variables is not None:
        cols = [[v if isinstance(v, MultiPoly) else MultiPoly.constant(v, variables) for v in col] for col in cols]
    return Matrix.from_columns(cols)


def _check_len(c: AffineConnection, x: Sequence):
    if len(x) != c.algebra.dim:
        raise ShapeMismatch(f"need {c.algebra.dim} coordinates, got {len(x)}")


class Completeness(NamedTuple):
    """Verdict of :func:`is_complete`.

    For an incomplete connection, ``coefficient`` is the first nonvanishing
    coefficient (of t^``power``) of det(t - R_x) as a polynomial in x, and
    ``witness`` is a rational x at which it evaluates to ``witness_value`` != 0.
    """

    complete: bool
    witness: tuple[Fraction, ...] | None = None
    power: int | None = None
    coefficient: Entry | None = None
    witness_value: Fraction | None = None

    def __bool__(self) -> bool:
        return self.complete


def is_complete(c: AffineConnection, seed: int = 0) -> Completeness:
    """Complete iff R_x is nilpotent for every x, decided on the generic R_x."""
    _require_nilpotent(c.algebra)
    found = first_nonzero_char_coefficient(right_operator(c))
    if found is None:
        return Completeness(True)
    power, coeff = found
    witness = find_witness(coeff, c.algebra.dim, seed=seed)
    r_w = right_operator(c, witness)
    value = char_poly_coefficients(r_w)[c.algebra.dim - power]
    if not value:
        raise AssertionError("witness does not reproduce the nonzero coefficient")
    return Completeness(False, witness, power, coeff, value)


def find_witness(poly: Entry, n: int, seed: int = 0, attempts: int = 1000) -> tuple[Fraction, ...]:
    """A rational point where ``poly`` does not vanish.

    Sweeps basis vectors, then {-1, 0, 1} combinations, then seeded random
    rationals.
    """
    def value(pt):
        return poly.evaluate(pt) if isinstance(poly, MultiPoly) else poly

    for combo in sign_combinations(n):
        pt = tuple(Fraction(v) for v in combo)
        if value(pt):
            return pt
    rng = random.Random(seed)
    for _ in range(attempts):
        pt = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n))
        if value(pt):
            return pt
    raise AssertionError("no witness found for a nonzero polynomial")


def affine_rep(c: AffineConnection) -> Representation:
    """The (n+1)-dimensional module rho(X)(Y, t) = (f_X(Y) + tX, 0)."""
    g = c.algebra
    n = g.dim
    mats = []
    for i in range(n):
        f = left_operator(c, g.basis_vector(i))
        rows = [list(f.rows[r]) + [int(r == i)] for r in range(n)]
        rows.append([0] * (n + 1))
        mats.append(rows)
    rho = make_representation(g, mats)
    if not rep_kernel(rho).is_zero():
        raise AssertionError("affine representation of a connection must be faithful")
    return rho


def connection_from_rep(rho: Representation) -> AffineConnection:
    """Read nabla_{X_i} off the first n x n block of an affine-shaped module."""
    g = rho.algebra
    n = g.dim
    if rho.module_dim != n + 1:
        raise NotAffineShape(f"module dimension {rho.module_dim} != {n + 1}")
    for i, mat in enumerate(rho.matrices):
        if any(mat.rows[n]):
            raise NotAffineShape(f"rho(X{i + 1}) has a nonzero last row")
        if mat.column(n) != g.basis_vector(i) + (Fraction(0),):
            raise NotAffineShape(f"last column of rho(X{i + 1}) is not e{i + 1}")
    gamma = [[[rho.matrices[i].rows[k][j] for k in range(n)] for j in range(n)] for i in range(n)]
    return make_connection(g, gamma)


@dataclass(frozen=True)
class SymplecticForm:
    algebra: LieAlgebra
    theta: Matrix

    def __call__(self, x: Sequence, y: Sequence) -> Fraction:
        return sum((a * t * b for a, row in zip(x, self.theta.rows) for t, b in zip(row, y) if a and t and b), Fraction(0))


def d_theta(g: LieAlgebra, theta: Matrix, i: int, j: int, k: int) -> Fraction:
    """theta(X,[Y,Z]) + theta(Y,[Z,X]) + theta(Z,[X,Y]) on basis vectors, no alternating signs."""
    c = g.structure_constants

    def form(a: int, v):
        return sum((theta.rows[a][b] * v[b] for b in range(g.dim)), Fraction(0))

    return form(i, c[j][k]) + form(j, c[k][i]) + form(k, c[i][j])


def check_symplectic(g: LieAlgebra, theta) -> SymplecticForm:
    theta = theta if isinstance(theta, Matrix) else Matrix(theta)
    n = g.dim
    if theta.shape != (n, n):
        raise ShapeMismatch(f"form must be {n}x{n}, got {theta.shape}")
    if n % 2:
        raise OddDimension(f"a symplectic form needs even dimension, got {n}")
    if theta.T != -theta:
        raise NotAntisymmetric("theta is not antisymmetric")
    r = rank(theta)
    if r < n:
        raise Degenerate(r, n)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                d = d_theta(g, theta, i, j, k)
                if d:
                    raise NotClosed((i, j, k), d)
    return SymplecticForm(g, theta)


class SymplecticConnection(NamedTuple):
    connection: AffineConnection
    convention: str  # "as-written" or "opposite-sign"


def symplectic_connection(sf: SymplecticForm) -> SymplecticConnection:
    """Solve theta(ad_X Y, Z) = -theta(Y, f_X Z) for each f_X and validate.

    The relation gives ad_X^T Theta = -Theta F_X, so F_X = -Theta^-1 ad_X^T Theta.
    If that fails validation the opposite sign is tried and reported.
    """
    g = sf.algebra
    n = g.dim
    t_inv = inverse(sf.theta)
    solved = [t_inv @ g.ad_basis(i).T @ sf.theta for i in range(n)]
    failure = None
    for sign, label in ((-1, "as-written"), (1, "opposite-sign")):
        gamma = [[[sign * solved[i][k, j] for k in range(n)] for j in range(n)] for i in range(n)]
        try:
            return SymplecticConnection(make_connection(g, gamma), label)
        except (TorsionViolation, FlatnessViolation) as exc:
            failure = failure or exc
    raise AssertionError(f"symplectic connection failed validation under both signs: {failure}")
