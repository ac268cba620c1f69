"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`. Polynomials are sparse
:class:`MultiPoly` objects over the rationals. :class:`Matrix` holds either
kind of entry and works with the same code paths for both, which is what lets
the characteristic polynomial of a *generic* element ``x1*X1 + ... + xn*Xn``
be computed with the same routine as that of a numeric matrix.

Nothing in this module touches floating point.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from .errors import DimensionMismatch, NonSquare, ParseError, ShapeMismatch

Scalar = Fraction

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def as_scalar(value) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Accepts ints, Fractions and strings of the form ``"p"`` or ``"p/q"``.
    Floats and decimal strings are rejected on purpose.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _SCALAR_RE.match(value)
        if not m:
            raise ParseError(f"not an exact rational 'p/q': {value!r}")
        num, den = m.groups()
        if den is not None and int(den) == 0:
            raise ParseError(f"zero denominator: {value!r}")
        return Fraction(int(num), int(den) if den else 1)
    raise ParseError(f"not an exact rational: {value!r}")


def format_scalar(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_vector(v: Iterable) -> str:
    return "(" + ", ".join(format_scalar(x) if not isinstance(x, MultiPoly) else str(x) for x in v) + ")"


# ---------------------------------------------------------------------------
# polynomials


def _grlex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


class MultiPoly:
    """Sparse multivariate polynomial with rational coefficients.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    Fractions. Instances are treated as immutable.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: dict | None = None):
        self.variables = tuple(variables)
        nv = len(self.variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nv:
                raise ShapeMismatch(f"exponent {exps} does not match {nv} variables")
            c = as_scalar(c)
            if c:
                clean[exps] = c
        self.terms = clean

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict) -> "MultiPoly":
        p = object.__new__(cls)
        p.variables = variables
        p.terms = terms
        return p

    @classmethod
    def constant(cls, value, variables: Sequence[str]) -> "MultiPoly":
        variables = tuple(variables)
        c = as_scalar(value)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def variable(cls, name: str, variables: Sequence[str]) -> "MultiPoly":
        variables = tuple(variables)
        exps = tuple(int(v == name) for v in variables)
        if sum(exps) != 1:
            raise ParseError(f"{name!r} is not one of {variables}")
        return cls._raw(variables, {exps: Fraction(1)})

    # -- predicates / accessors

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in descending graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != len(self.variables):
            raise DimensionMismatch(f"need {len(self.variables)} values, got {len(point)}")
        point = [as_scalar(p) for p in point]
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for x, e in zip(point, exps):
                if e:
                    term *= x**e
            total += term
        return total

    # -- arithmetic

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ShapeMismatch(f"variable sets differ: {self.variables} vs {other.variables}")
            return other
        return MultiPoly.constant(other, self.variables)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except ParseError:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except ParseError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                c = as_scalar(other)
            except ParseError:
                return NotImplemented
            if not c:
                return MultiPoly._raw(self.variables, {})
            return MultiPoly._raw(self.variables, {e: v * c for e, v in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.variables, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self.terms == other.terms
        try:
            c = as_scalar(other)
        except ParseError:
            return NotImplemented
        return self.is_constant() and self.constant_value() == c

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.variables, frozenset(self.terms.items())))

    # -- text

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exps) if e
            )
            mag = abs(c)
            if not mono:
                body = format_scalar(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_scalar(mag)}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r}, variables={self.variables})"

    def to_monomials(self) -> list[list]:
        """Canonical serialisation: ``[["p/q", [e1, ..., ek]], ...]`` in grlex order."""
        return [[format_scalar(c), list(e)] for e, c in self.sorted_terms()]

    @classmethod
    def from_monomials(cls, variables: Sequence[str], data: Iterable) -> "MultiPoly":
        terms: dict = {}
        for coeff, exps in data:
            exps = tuple(int(e) for e in exps)
            if exps in terms:
                raise ParseError(f"repeated monomial {exps}")
            terms[exps] = as_scalar(coeff)
        return cls(variables, terms)


def generic_vector(n: int, prefix: str = "x") -> tuple[MultiPoly, ...]:
    """The generic element ``(x1, ..., xn)`` as polynomial coordinates."""
    names = tuple(f"{prefix}{i + 1}" for i in range(n))
    return tuple(MultiPoly.variable(v, names) for v in names)


Entry = Union[Fraction, MultiPoly]


def _zero_like(x: Entry) -> Entry:
    if isinstance(x, MultiPoly):
        return MultiPoly._raw(x.variables, {})
    return Fraction(0)


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Immutable dense matrix of Fractions or of MultiPolys (never mixed)."""

    __slots__ = ("rows", "nrows", "ncols", "variables")

    def __init__(self, rows: Iterable[Iterable]):
        raw = [list(r) for r in rows]
        nrows = len(raw)
        ncols = len(raw[0]) if raw else 0
        if any(len(r) != ncols for r in raw):
            raise ShapeMismatch("ragged rows")
        variables = None
        for r in raw:
            for x in r:
                if isinstance(x, MultiPoly):
                    if variables is None:
                        variables = x.variables
                    elif x.variables != variables:
                        raise ShapeMismatch("polynomial entries over different variables")
        if variables is None:
            rows_t = tuple(tuple(as_scalar(x) for x in r) for r in raw)
        else:
            rows_t = tuple(
                tuple(x if isinstance(x, MultiPoly) else MultiPoly.constant(x, variables) for x in r)
                for r in raw
            )
        self.rows = rows_t
        self.nrows = nrows
        self.ncols = ncols
        self.variables = variables

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Matrix":
        if not columns:
            raise ShapeMismatch("no columns")
        return cls(list(zip(*columns)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_polynomial(self) -> bool:
        return self.variables is not None

    def zero_entry(self) -> Entry:
        return MultiPoly._raw(self.variables, {}) if self.variables is not None else Fraction(0)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)) if self.rows else [])

    T = property(transpose)

    def trace(self) -> Entry:
        if not self.is_square():
            raise NonSquare(f"trace of {self.shape} matrix")
        total = self.zero_entry()
        for i in range(self.nrows):
            total = total + self.rows[i][i]
        return total

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(x) for x in r] for r in self.rows])

    def evaluate(self, point: Sequence) -> "Matrix":
        """Substitute rationals for the variables of a polynomial matrix."""
        if self.variables is None:
            return self
        return self.map(lambda p: p.evaluate(point))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix([[self.rows[i][j] for j in cols] for i in rows])

    # -- arithmetic

    def _check_same_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.rows])

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            return NotImplemented
        return Matrix([[a * c for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            return _matmul(self, other)
        return self.apply(other)

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product."""
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        zero = self.zero_entry()
        for x in v:
            if isinstance(x, MultiPoly):
                zero = _zero_like(x)
                break
        out = []
        for r in self.rows:
            acc = zero
            for a, x in zip(r, v):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square():
            raise NonSquare(f"power of {self.shape} matrix")
        result = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Matrix({self.to_strings()})"

    def to_strings(self) -> list[list[str]]:
        return [[str(x) if isinstance(x, MultiPoly) else format_scalar(x) for x in r] for r in self.rows]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.ncols != b.nrows:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
    if a.variables is None and b.variables is None:
        out = []
        bcols = b.ncols
        for r in a.rows:
            acc = [Fraction(0)] * bcols
            for k, x in enumerate(r):
                if x:
                    brow = b.rows[k]
                    for j in range(bcols):
                        y = brow[j]
                        if y:
                            acc[j] += x * y
            out.append(acc)
        return Matrix(out) if a.nrows else Matrix([])
    return _poly_matmul(a, b)


def _terms_of(x: Entry, nv: int) -> dict:
    if isinstance(x, MultiPoly):
        return x.terms
    return {(0,) * nv: x} if x else {}


def _poly_matmul(a: Matrix, b: Matrix) -> Matrix:
    # accumulate directly into exponent dictionaries; this is the hot loop of
    # symbolic characteristic polynomials
    variables = a.variables if a.variables is not None else b.variables
    if a.variables is not None and b.variables is not None and a.variables != b.variables:
        raise ShapeMismatch("polynomial matrices over different variables")
    nv = len(variables)
    bterms = [[_terms_of(y, nv) for y in r] for r in b.rows]
    out = []
    for r in a.rows:
        accs = [dict() for _ in range(b.ncols)]
        for k, x in enumerate(r):
            xt = _terms_of(x, nv)
            if not xt:
                continue
            for j, yt in enumerate(bterms[k]):
                if not yt:
                    continue
                acc = accs[j]
                for e1, c1 in xt.items():
                    for e2, c2 in yt.items():
                        e = tuple(p + q for p, q in zip(e1, e2))
                        acc[e] = acc.get(e, 0) + c1 * c2
        out.append([MultiPoly._raw(variables, {e: c for e, c in acc.items() if c}) for acc in accs])
    return Matrix(out)


def _as_matrix(m) -> Matrix:
    return m if isinstance(m, Matrix) else Matrix(m)


def _require_square(m: Matrix, what: str):
    if not m.is_square():
        raise NonSquare(f"{what} needs a square matrix, got {m.shape}")


# ---------------------------------------------------------------------------
# row reduction and subspaces


def rref(m) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row-echelon form and the pivot columns of a rational matrix."""
    m = _as_matrix(m)
    if m.is_polynomial:
        raise TypeError("rref needs rational entries")
    rows = [list(r) for r in m.rows]
    pivots = _rref_in_place(rows, m.ncols)
    return Matrix(rows) if rows else m, tuple(pivots)


def _rref_in_place(rows: list[list[Fraction]], ncols: int) -> list[int]:
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(m) -> int:
    return len(rref(m)[1])


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n stored by its canonical (RREF) basis.

    Equal subspaces are equal as Python objects.
    """

    ambient_dim: int
    basis: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        rows = [[as_scalar(x) for x in v] for v in vectors]
        if any(len(r) != ambient_dim for r in rows):
            raise DimensionMismatch(f"vectors must have length {ambient_dim}")
        pivots = _rref_in_place(rows, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in rows[: len(pivots)]))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls.span(Matrix.identity(n).rows, n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(v) if x) for v in self.basis)

    def coordinates(self, v: Sequence) -> tuple[Fraction, ...] | None:
        """Coordinates of ``v`` in the canonical basis, or None if ``v`` is outside."""
        v = [as_scalar(x) for x in v]
        coords = tuple(v[p] for p in self.pivots)
        rebuilt = [Fraction(0)] * self.ambient_dim
        for c, b in zip(coords, self.basis):
            if c:
                for j, x in enumerate(b):
                    rebuilt[j] += c * x
        return coords if rebuilt == v else None

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(v in self for v in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def is_zero(self) -> bool:
        return not self.basis

    def basis_matrix(self) -> Matrix:
        """Basis vectors as columns."""
        return Matrix.from_columns(self.basis) if self.basis else Matrix([[] for _ in range(self.ambient_dim)])

    def restrict(self, m: Matrix) -> Matrix:
        """Matrix of ``m`` restricted to this (invariant) subspace, in the canonical basis."""
        cols = []
        for b in self.basis:
            coords = self.coordinates(m.apply(b))
            if coords is None:
                raise ValueError("subspace is not invariant under the matrix")
            cols.append(coords)
        if not cols:
            return Matrix([])
        return Matrix.from_columns(cols)


def kernel_basis(m) -> Subspace:
    """Null space of a rational matrix, as a canonical Subspace."""
    m = _as_matrix(m)
    r, pivots = rref(m)
    free = [j for j in range(m.ncols) if j not in pivots]
    vectors = []
    for f in free:
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i, f]
        vectors.append(v)
    return Subspace.span(vectors, m.ncols)


def solve(a: Matrix, b: Sequence) -> tuple[Fraction, ...] | None:
    """One solution of ``a x = b`` or None if inconsistent."""
    aug = Matrix([list(r) + [as_scalar(y)] for r, y in zip(a.rows, b)])
    r, pivots = rref(aug)
    if a.ncols in pivots:
        return None
    x = [Fraction(0)] * a.ncols
    for i, p in enumerate(pivots):
        x[p] = r[i, a.ncols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    _require_square(m, "inverse")
    n = m.nrows
    aug = Matrix([list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(m.rows)])
    r, pivots = rref(aug)
    if tuple(pivots[:n]) != tuple(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return r.submatrix(range(n), range(n, 2 * n))


# ---------------------------------------------------------------------------
# characteristic polynomials


def _faddeev_leverrier(m: Matrix) -> Iterator[Entry]:
    """Yield c_{n-1}, ..., c_0 of det(tI - m) = t^n + c_{n-1} t^{n-1} + ... + c_0."""
    n = m.nrows
    ident = Matrix.identity(n)
    acc = None
    c = Fraction(1)
    for k in range(1, n + 1):
        acc = ident * c if acc is None else m @ acc + ident * c
        # only the diagonal of m @ acc is needed for the trace
        tr = m.zero_entry() if m.is_polynomial else Fraction(0)
        for i in range(n):
            for j in range(n):
                x, y = m.rows[i][j], acc.rows[j][i]
                if x and y:
                    tr = tr + x * y
        c = tr * Fraction(-1, k)
        yield c


def char_poly_coefficients(m) -> list[Entry]:
    """Coefficients of det(tI - m), highest power first (leading 1 included)."""
    m = _as_matrix(m)
    _require_square(m, "char_poly")
    one = MultiPoly.constant(1, m.variables) if m.is_polynomial else Fraction(1)
    return [one] + list(_faddeev_leverrier(m))


def char_poly(m, var: str = "t") -> MultiPoly:
    """det(tI - m) as a polynomial in ``var`` and the entry variables.

    ``var`` comes first in the variable list of the result; for a rational
    matrix the result is univariate.
    """
    m = _as_matrix(m)
    coeffs = char_poly_coefficients(m)
    n = m.nrows
    inner = m.variables or ()
    if var in inner:
        raise ValueError(f"{var!r} already names an entry variable")
    variables = (var,) + tuple(inner)
    terms = {}
    for power, c in zip(range(n, -1, -1), coeffs):
        if isinstance(c, MultiPoly):
            for e, v in c.terms.items():
                terms[(power,) + e] = v
        elif c:
            terms[(power,) + (0,) * len(inner)] = c
    return MultiPoly(variables, terms)


class NilpotencyWitness(NamedTuple):
    """First nonvanishing coefficient of det(tI - m): ``coefficient`` multiplies t^power."""

    power: int
    coefficient: Entry


def first_nonzero_char_coefficient(m) -> NilpotencyWitness | None:
    """None iff det(tI - m) = t^n identically; stops at the first nonzero coefficient."""
    m = _as_matrix(m)
    _require_square(m, "char_poly")
    n = m.nrows
    for k, c in enumerate(_faddeev_leverrier(m), start=1):
        if c:
            return NilpotencyWitness(n - k, c)
    return None


def is_nilpotent_matrix(m) -> bool:
    m = _as_matrix(m)
    _require_square(m, "is_nilpotent_matrix")
    return first_nonzero_char_coefficient(m) is None


def is_nilpotent_by_power(m) -> bool:
    """Independent route: m^n == 0."""
    m = _as_matrix(m)
    _require_square(m, "is_nilpotent_by_power")
    return (m ** m.nrows).is_zero()


# ---------------------------------------------------------------------------
# eigenvalues over Q


def _divisors(k: int) -> list[int]:
    k = abs(k)
    small, large = [], []
    d = 1
    while d * d <= k:
        if k % d == 0:
            small.append(d)
            if d * d != k:
                large.append(k // d)
        d += 1
    return small + large[::-1]


def _primitive_integer(coeffs_desc: Sequence[Fraction]) -> list[int]:
    lcm = 1
    for c in coeffs_desc:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs_desc]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return [x // g for x in ints] if g else ints


def _synthetic_division(coeffs_desc: list[Fraction], root: Fraction) -> tuple[list[Fraction], Fraction]:
    out = [coeffs_desc[0]]
    for c in coeffs_desc[1:]:
        out.append(c + out[-1] * root)
    return out[:-1], out[-1]


class Spectrum(NamedTuple):
    values: tuple[Fraction, ...]
    multiplicities: tuple[int, ...]
    splits_over_q: bool


def rational_roots(coeffs_desc: Sequence[Fraction]) -> list[tuple[Fraction, int]]:
    """Rational roots with multiplicity of a rational polynomial (highest power first)."""
    poly = [as_scalar(c) for c in coeffs_desc]
    while poly and not poly[0]:
        poly.pop(0)
    if len(poly) <= 1:
        return []
    found: dict[Fraction, int] = {}
    zero_mult = 0
    while len(poly) > 1 and not poly[-1]:
        poly.pop()
        zero_mult += 1
    if zero_mult:
        found[Fraction(0)] = zero_mult
    while len(poly) > 1:
        ints = _primitive_integer(poly)
        lead, const = ints[0], ints[-1]
        hit = None
        for p in _divisors(const):
            for q in _divisors(lead):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    quotient, rem = _synthetic_division(poly, cand)
                    if rem == 0:
                        hit = cand
                        poly = quotient
                        break
                if hit is not None:
                    break
            if hit is not None:
                break
        if hit is None:
            break
        found[hit] = found.get(hit, 0) + 1
    return sorted(found.items())


def rational_eigenvalues(m) -> Spectrum:
    """Distinct rational eigenvalues (ascending) and whether the spectrum splits over Q."""
    m = _as_matrix(m)
    _require_square(m, "rational_eigenvalues")
    if m.is_polynomial:
        raise TypeError("rational_eigenvalues needs rational entries")
    roots = rational_roots(char_poly_coefficients(m))
    values = tuple(r for r, _ in roots)
    mults = tuple(k for _, k in roots)
    return Spectrum(values, mults, sum(mults) == m.nrows)


def generalized_eigenspace(m, lam) -> Subspace:
    """ker (m - lam I)^n."""
    m = _as_matrix(m)
    _require_square(m, "generalized_eigenspace")
    n = m.nrows
    shifted = m - Matrix.identity(n) * as_scalar(lam)
    return kernel_basis(shifted ** n)


def sign_combinations(n: int) -> Iterator[tuple[int, ...]]:
    """All nonzero vectors with entries in {-1, 0, 1}: e_1, ..., e_n first, then sparsest first."""
    for i in range(n):
        yield tuple(int(k == i) for k in range(n))
    combos = [c for c in _cartesian((1, -1, 0), repeat=n) if sum(1 for x in c if x) > 1 or -1 in c]
    combos.sort(key=lambda c: sum(1 for x in c if x))
    yield from combos
