"""Explicit families on the model filiform algebra L_n and an end-to-end report.

The (n+1)-dimensional module of L_n is built from rho(X_1) and rho(X_2); the
remaining rho(X_{j+1}) = [rho(X_1), rho(X_j)] are forced by [X_1, X_j] = X_{j+1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any

from . import connections as conn
from . import representations as reps
from .errors import AffineFiliformError, BadDimension, NotAffineShape
from .exact_linalg import (
    Matrix,
    MultiPoly,
    as_scalar,
    format_scalar,
    format_vector,
    generic_vector,
)
from .lie_core import is_filiform, model_filiform


@dataclass(frozen=True)
class LnFamilyParams:
    n: int
    a: Fraction = Fraction(0)
    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)

    def __post_init__(self):
        if self.n < 3:
            raise BadDimension(f"the L_n family needs n >= 3, got {self.n}")
        for name in ("a", "alpha", "beta"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))

    def as_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "a": format_scalar(self.a),
            "alpha": format_scalar(self.alpha),
            "beta": format_scalar(self.beta),
        }


def heisenberg_connection(p: LnFamilyParams) -> conn.AffineConnection:
    """The three-parameter family on the Heisenberg algebra L_3."""
    if p.n != 3:
        raise BadDimension("the Heisenberg family lives in dimension 3")
    a, al, be = p.a, p.alpha, p.beta
    f1 = Matrix([[a, a, 0], [a, a, 0], [al, be, 0]])
    f2 = Matrix([[a, a, 0], [a, a, 0], [be - 1, al + 1, 0]])
    f3 = Matrix.zeros(3)
    gamma = [f.columns() for f in (f1, f2, f3)]
    return conn.make_connection(model_filiform(3), gamma)


def rho_generators(p: LnFamilyParams) -> tuple[Matrix, Matrix]:
    """rho(X_1) and rho(X_2) as (n+1) x (n+1) matrices.

    The row-n entries alpha, beta are added on top of the subdiagonal, which
    at n = 3 reproduces the Heisenberg family exactly.
    """
    n = p.n
    size = n + 1
    r1 = [[Fraction(0)] * size for _ in range(size)]
    r2 = [[Fraction(0)] * size for _ in range(size)]
    for m in (r1, r2):
        m[0][0] = m[0][1] = m[1][0] = m[1][1] = p.a
    r1[0][n] = Fraction(1)
    r2[1][n] = Fraction(1)
    # 1-based row r carries its fraction in column r-1
    for r in range(3, n + 1):
        r1[r - 1][r - 2] += Fraction(r - 3, r - 2)
        r2[r - 1][r - 2] += Fraction(1, r - 2)
    r2[2][0] += -1
    r1[n - 1][0] += p.alpha
    r1[n - 1][1] += p.beta
    r2[n - 1][0] += p.beta
    r2[n - 1][1] += p.alpha
    return Matrix(r1), Matrix(r2)


def ln_matrices(p: LnFamilyParams) -> list[Matrix]:
    r1, r2 = rho_generators(p)
    mats = [r1, r2]
    for _ in range(2, p.n):
        mats.append(r1.commutator(mats[-1]))
    return mats


def _check_affine_shape(rho: reps.Representation):
    n = rho.algebra.dim
    for i, mat in enumerate(rho.matrices):
        if any(mat.rows[n]):
            raise NotAffineShape(f"rho(X{i + 1}) has a nonzero last row")
        if mat.column(n) != rho.algebra.basis_vector(i) + (Fraction(0),):
            raise NotAffineShape(f"last column of rho(X{i + 1}) is not e{i + 1}")


def ln_representation(p: LnFamilyParams) -> reps.Representation:
    """Faithful (n+1)-dimensional module of L_n, non-nilpotent when a != 0."""
    g = model_filiform(p.n)
    rho = reps.make_representation(g, ln_matrices(p))
    if not reps.rep_kernel(rho).is_zero():
        raise AssertionError("L_n module is not faithful")
    _check_affine_shape(rho)
    last = rho.matrices[-1]
    n = p.n
    expected = Matrix([[int(r == n - 1 and c == n) for c in range(n + 1)] for r in range(n + 1)])
    if last != expected:
        raise AssertionError("rho(X_n) must send e_{n+1} to e_n and kill e_1..e_n")
    return rho


def ln_connection(p: LnFamilyParams) -> conn.AffineConnection:
    return conn.connection_from_rep(ln_representation(p))


# ---------------------------------------------------------------------------
# closed-form rules for rho(X_j)


@dataclass(frozen=True)
class RuleCheck:
    """One printed closed-form rule rho(X_j)(e_k) = expected, against the recursion.

    ``status`` is "match", "mismatch", or "undefined" (indices or factorials
    outside their domain). ``in_range`` marks entries on the range where the
    rule is expected to hold.
    """

    j: int
    k: int
    rule: str
    status: str
    in_range: bool
    expected: tuple | None
    observed: tuple


def _unit(size: int, i: int, c=Fraction(1)) -> tuple:
    return tuple(c if t == i - 1 else Fraction(0) for t in range(size))


def closed_form_checks(p: LnFamilyParams) -> list[RuleCheck]:
    """Compare every printed rule for rho(X_j), 3 <= j <= n, with the built matrices.

    The factorial rule is stated for i = j-2..n, but only i = j+1..n give
    valid indices; the e_3 line is its i = j+2 instance and therefore only in
    range while j+2 <= n.
    """
    n = p.n
    size = n + 1
    mats = ln_matrices(p)
    out: list[RuleCheck] = []

    def add(j, k, rule, expected, in_range):
        observed = mats[j - 1].column(k - 1)
        if expected is None:
            status = "undefined"
        else:
            status = "match" if observed == expected else "mismatch"
        out.append(RuleCheck(j, k, rule, status, in_range, expected, observed))

    for j in range(3, n):
        add(j, 1, "e1 -> -1/(j-1) e_{j+1}", _unit(size, j + 1, Fraction(-1, j - 1)), True)
        add(j, 2, "e2 -> 1/(j-1) e_{j+1}", _unit(size, j + 1, Fraction(1, j - 1)), True)
        add(j, 3, "e3 -> 1/(j(j-1)) e_{j+2}", _unit(size, j + 2, Fraction(1, j * (j - 1))), j + 2 <= n)
        for i in range(j - 2, n + 1):
            k = i - j + 1
            rule = f"e_{{i-j+1}} -> (j-2)!(i-j-1)!/(i-2)! e_i, i={i}"
            if k < 1 or i - j - 1 < 0:
                out.append(RuleCheck(j, k, rule, "undefined", False, None, ()))
                continue
            coeff = Fraction(factorial(j - 2) * factorial(i - j - 1), factorial(i - 2))
            add(j, k, rule, _unit(size, i, coeff), j + 1 <= i <= n)
        for i in range(n + 1, n + j):
            add(j, i - j + 1, f"e_{{i-j+1}} -> 0, i={i}", (Fraction(0),) * size, True)
        add(j, n + 1, "e_{n+1} -> e_j", _unit(size, j), True)
    for k in range(1, n + 1):
        add(n, k, "X_n: e_i -> 0", (Fraction(0),) * size, True)
    add(n, n + 1, "X_n: e_{n+1} -> e_n", _unit(size, n), True)
    return out


# ---------------------------------------------------------------------------
# report


@dataclass
class Check:
    name: str
    verdict: str  # "pass", "fail" or "n/a"
    detail: dict[str, Any] = field(default_factory=dict)


@dataclass
class VerificationReport:
    params: LnFamilyParams
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, verdict: str, **detail):
        if any(c.name == name for c in self.checks):
            raise ValueError(f"duplicate check name {name!r}")
        if verdict not in ("pass", "fail", "n/a"):
            raise ValueError(f"bad verdict {verdict!r}")
        self.checks.append(Check(name, verdict, detail))

    @property
    def passed(self) -> bool:
        return all(c.verdict != "fail" for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self) -> dict[str, Any]:
        return {
            "params": self.params.as_dict(),
            "passed": self.passed,
            "checks": [{"name": c.name, "verdict": c.verdict, "detail": c.detail} for c in self.checks],
        }

    def table(self) -> str:
        width = max(len(c.name) for c in self.checks)
        head = f"L_n family  n={self.params.n} " + " ".join(
            f"{k}={v}" for k, v in self.params.as_dict().items() if k != "n"
        )
        lines = [head, "-" * len(head)]
        for c in self.checks:
            summary = c.detail.get("summary", "")
            lines.append(f"{c.name.ljust(width)}  {c.verdict.upper():4}  {summary}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def verify_paper(p: LnFamilyParams, seed: int = 0) -> VerificationReport:
    """Run the whole pipeline for one parameter set; failures become report entries."""
    report = VerificationReport(p)
    g = model_filiform(p.n)
    report.add("algebra is filiform", "pass" if is_filiform(g) else "fail", summary=f"L_{p.n}")

    try:
        rho = reps.make_representation(g, ln_matrices(p))
    except AffineFiliformError as exc:
        report.add("representation is a homomorphism", "fail", summary=str(exc))
        return report
    report.add("representation is a homomorphism", "pass", summary="all commutator defects zero")

    try:
        _check_affine_shape(rho)
        report.add("affine shape", "pass", summary="last row 0, last column e_i")
    except NotAffineShape as exc:
        report.add("affine shape", "fail", summary=str(exc))

    kernel = reps.rep_kernel(rho)
    by_center = reps.faithful_by_center(rho)
    report.add("faithful (kernel)", "pass" if kernel.is_zero() else "fail", summary=f"kernel dim {kernel.dim}")
    report.add(
        "faithful (center criterion)",
        "pass" if by_center and kernel.is_zero() else "fail",
        summary="agrees with kernel" if by_center == kernel.is_zero() else "disagrees with kernel",
    )

    nilpotent = reps.is_nilpotent_rep(rho)
    if p.a:
        report.add(
            "representation not nilpotent",
            "fail" if nilpotent else "pass",
            summary=f"nilpotent={nilpotent}",
        )
    else:
        report.add("representation not nilpotent", "n/a", summary=f"a=0, nilpotent={nilpotent}", nilpotent=nilpotent)

    x = generic_vector(p.n)
    trace = rho.evaluate(x).trace()
    expected_trace = (x[0] + x[1]) * (2 * p.a)
    report.add(
        "trace rho(x) = 2a(x1+x2)",
        "pass" if trace == expected_trace else "fail",
        summary=str(trace),
    )

    if p.n == 3:
        same = rho == conn.affine_rep(heisenberg_connection(p))
        report.add("matches Heisenberg family", "pass" if same else "fail", summary="matrix-by-matrix")

    rules = closed_form_checks(p)
    bad = [r for r in rules if r.in_range and r.status != "match"]
    report.add(
        "closed-form rho(X_j) rules",
        "fail" if bad else "pass",
        summary=(
            f"{sum(r.status == 'match' for r in rules)} match, "
            f"{sum(r.status == 'mismatch' for r in rules)} mismatch, "
            f"{sum(r.status == 'undefined' for r in rules)} undefined; "
            f"factorial rule holds for i=j+1..n"
        ),
        entries=[
            {
                "j": r.j,
                "k": r.k,
                "rule": r.rule,
                "status": r.status,
                "in_range": r.in_range,
                "expected": None if r.expected is None else format_vector(r.expected),
                "observed": format_vector(r.observed),
            }
            for r in rules
        ],
    )

    try:
        nabla = conn.connection_from_rep(rho)
    except AffineFiliformError as exc:
        report.add("connection axioms", "fail", summary=str(exc))
        return report
    report.add("connection axioms", "pass", summary="torsion and flatness defects zero")

    r1 = conn.right_operator(nabla, g.basis_vector(0))
    tr = r1.trace()
    report.add(
        "trace R_X1 = 2a",
        "pass" if tr == 2 * p.a else "fail",
        summary=f"trace {format_scalar(tr)}",
    )

    verdict = conn.is_complete(nabla, seed=seed)
    info: dict[str, Any] = {"complete": verdict.complete}
    if not verdict.complete:
        info.update(
            witness=format_vector(verdict.witness),
            power=verdict.power,
            coefficient=str(verdict.coefficient),
            witness_value=format_scalar(verdict.witness_value),
        )
        summary = f"not complete, witness {format_vector(verdict.witness)}, t^{verdict.power} coeff {format_scalar(verdict.witness_value)}"
    else:
        summary = "complete"
    if p.a:
        report.add("connection not complete", "fail" if verdict.complete else "pass", summary=summary, **info)
    else:
        report.add("connection not complete", "n/a", summary=f"a=0: {summary}", **info)

    try:
        result = reps.nilpotentize(rho)
        out = result.representation
        ok = reps.is_nilpotent_rep(out) and reps.rep_kernel(out).is_zero()
        report.add(
            "nilpotentized module faithful and nilpotent",
            "pass" if ok else "fail",
            summary=f"weights {[format_vector(w) for w in result.decomposition.weights]}, blocks {list(result.decomposition.block_dims)}",
        )
    except AffineFiliformError as exc:
        report.add("nilpotentized module faithful and nilpotent", "fail", summary=str(exc))
    return report


def generic_trace_coefficient(p: LnFamilyParams) -> MultiPoly:
    """Coefficient of t^n in det(t - rho(x)): minus the trace of the generic element."""
    return -ln_representation(p).generic_matrix().trace()
