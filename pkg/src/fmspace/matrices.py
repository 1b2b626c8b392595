"""Exact 4x4 matrices over the coefficient ring, the metric, and the form.

Index convention: entry (mu, nu) is row mu, column nu, both 0-based; the
counter-diagonal runs from (0,3) to (3,0).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .ring import ONE, ZERO, RingElem

Scalar = Union["RingElem", int, Fraction]


def _as_ring(x) -> RingElem:
    if isinstance(x, RingElem):
        return x
    if isinstance(x, (int, Fraction)):
        return RingElem.monomial(x)
    raise TypeError(f"expected a ring element, got {type(x).__name__}")


class Mat4:
    """Immutable 4x4 matrix with RingElem entries."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        mat = tuple(tuple(_as_ring(x) for x in row) for row in rows)
        if len(mat) != 4 or any(len(r) != 4 for r in mat):
            raise ValueError("Mat4 requires a 4x4 grid of entries")
        object.__setattr__(self, "_rows", mat)

    def __setattr__(self, name, value):
        raise AttributeError("Mat4 is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Mat4":
        return Mat4([[ZERO] * 4 for _ in range(4)])

    @staticmethod
    def identity() -> "Mat4":
        return Mat4([[ONE if i == j else ZERO for j in range(4)] for i in range(4)])

    @staticmethod
    def from_entries(entries: Iterable[tuple]) -> "Mat4":
        """Build from (row, col, coef, q_pow, pi_pow) tuples; trailing powers optional."""
        rows = [[ZERO] * 4 for _ in range(4)]
        for entry in entries:
            r, c, coef, *pows = entry
            q_pow = pows[0] if len(pows) > 0 else 0
            pi_pow = pows[1] if len(pows) > 1 else 0
            rows[r][c] = rows[r][c] + RingElem.monomial(coef, q_pow, pi_pow)
        return Mat4(rows)

    # -- access ------------------------------------------------------------

    def __getitem__(self, rc: tuple[int, int]) -> RingElem:
        r, c = rc
        return self._rows[r][c]

    @property
    def rows(self) -> tuple:
        return self._rows

    @property
    def is_zero(self) -> bool:
        return all(x.is_zero for row in self._rows for x in row)

    # -- ring-linear algebra -------------------------------------------------

    def __add__(self, other: "Mat4") -> "Mat4":
        return Mat4(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)]
        )

    def __sub__(self, other: "Mat4") -> "Mat4":
        return Mat4(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)]
        )

    def __neg__(self) -> "Mat4":
        return Mat4([[-a for a in row] for row in self._rows])

    def scale(self, factor: Scalar) -> "Mat4":
        f = _as_ring(factor)
        return Mat4([[a * f for a in row] for row in self._rows])

    def __mul__(self, factor: Scalar) -> "Mat4":
        return self.scale(factor)

    __rmul__ = __mul__

    def __matmul__(self, other: "Mat4") -> "Mat4":
        a, b = self._rows, other._rows
        out = []
        for i in range(4):
            arow = a[i]
            orow = []
            for j in range(4):
                acc = ZERO
                for k in range(4):
                    x = arow[k]
                    if x.is_zero:
                        continue
                    y = b[k][j]
                    if y.is_zero:
                        continue
                    acc = acc + x * y
                orow.append(acc)
            out.append(orow)
        return Mat4(out)

    def transpose(self) -> "Mat4":
        return Mat4([[self._rows[j][i] for j in range(4)] for i in range(4)])

    def counter_transpose(self) -> "Mat4":
        """Mirror entries on the counter diagonal: out(mu,nu) = in(3-nu,3-mu)."""
        return Mat4([[self._rows[3 - j][3 - i] for j in range(4)] for i in range(4)])

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Mat4):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self._rows)
        return f"Mat4[{body}]"

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"rows": [[x.to_json_dict() for x in row] for row in self._rows]}

    @staticmethod
    def from_json_dict(d: dict) -> "Mat4":
        return Mat4([[RingElem.from_json_dict(x) for x in row] for row in d["rows"]])


# The pseudo metric: unit entries on the counter diagonal, (+ + - -) signature.
METRIC = Mat4.from_entries([(0, 3, 1), (1, 2, 1), (2, 1, 1), (3, 0, 1)])

IDENTITY = Mat4.identity()


def mat_mul(a: Mat4, b: Mat4) -> Mat4:
    return a @ b


def counter_transpose(x: Mat4) -> Mat4:
    return x.counter_transpose()


def commutator(x: Mat4, y: Mat4) -> Mat4:
    return x @ y - y @ x


def anticommutator(x: Mat4, y: Mat4) -> Mat4:
    return x @ y + y @ x


def eval_mat(x: Mat4, q):
    """Entrywise numeric evaluation at wave number q > 0.

    Returns a float64 ndarray for float q, or a nested list of mpf for an
    mpmath q (the caller controls mpmath precision).
    """
    if not (q > 0):
        raise ValueError(f"wave number q must be positive, got {q!r}")
    if isinstance(q, (int, float)):
        return np.array(
            [[entry.evaluate(float(q)) for entry in row] for row in x.rows], dtype=float
        )
    return [[entry.evaluate(q) for entry in row] for row in x.rows]


def bilinear(u: Sequence, v: Sequence) -> float:
    """Scalar product u^t . M . v = u0 v3 + u1 v2 + u2 v1 + u3 v0."""
    return u[0] * v[3] + u[1] * v[2] + u[2] * v[1] + u[3] * v[0]


def char_poly_coeffs(a: np.ndarray) -> list[float]:
    """Coefficients [c3, c2, c1, c0] of det(lambda*1 - A), Faddeev-LeVerrier."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    coeffs = []
    m = np.zeros_like(a)
    c = 1.0
    for k in range(1, n + 1):
        m = a @ m + c * np.eye(n)
        c = -(a * m.T).sum() / k
        coeffs.append(c)
    return coeffs


def metric_eigenvalues(q: float = 1.0) -> list[float]:
    """Eigenvalues of the evaluated metric from its characteristic polynomial.

    The metric's polynomial is biquadratic, so the roots come in closed form
    as +/- sqrt of the roots of a quadratic; no general eigensolver involved.
    """
    c3, c2, c1, c0 = char_poly_coeffs(eval_mat(METRIC, q))
    if abs(c3) > 1e-12 or abs(c1) > 1e-12:
        raise ValueError("metric characteristic polynomial is not biquadratic")
    # lambda^4 + c2 lambda^2 + c0 = 0  =>  y^2 + c2 y + c0 = 0 with y = lambda^2
    disc = c2 * c2 - 4.0 * c0
    if disc < 0:
        raise ValueError("complex eigenvalue pair; not a real-diagonalizable metric")
    y1 = (-c2 + disc**0.5) / 2.0
    y2 = (-c2 - disc**0.5) / 2.0
    if y1 < 0 or y2 < 0:
        raise ValueError("negative squared eigenvalue; metric is not real-symmetric")
    r1, r2 = y1**0.5, y2**0.5
    return sorted([-r1, -r2, r2, r1])
