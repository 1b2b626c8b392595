"""Hard-sphere weight functions, Mayer-bond identities, and the shift kernel.

The four scalar weight functions of a sphere of radius R are, with
s = sin(qR) and c = cos(qR):

    w0 = c + qR s / 2
    w1 = (qR c + s) / (2 q)
    w2 = 4 pi R s / q
    w3 = 4 pi (s - qR c) / q^3

w3 is the Fourier transform of a unit step of range R; the bilinear form of
two weight vectors reproduces the step of the summed radii (the Mayer bond
up to sign), and exp(R * t1) is the shifting kernel whose first column is
the weight vector itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .algebra import Decomposition, decompose
from .catalog import GeneratorId, get_generator
from .flows import closed_flow, weight_column
from .matrices import IDENTITY, bilinear, commutator
from .ring import RingElem

SHIFT_TAGS = (GeneratorId.T0, GeneratorId.T1, GeneratorId.T2, GeneratorId.T3)


def kr_weights(R: float, q: float) -> np.ndarray:
    """Weight vector (w0, w1, w2, w3) of a sphere of radius R at wave number q.

    Component w_nu carries units (length)^nu.  Below qR = 1e-4 the 0/0-prone
    expressions evaluate by series.
    """
    if not R > 0:
        raise ValueError(f"radius must be positive, got {R!r}")
    if not q > 0:
        raise ValueError(f"wave number q must be positive, got {q!r}")
    return np.array(weight_column(float(R), float(q)), dtype=float)


def step_hat(Rtot: float, q: float) -> float:
    """Fourier transform 4 pi [sin(q R) - q R cos(q R)] / q^3 of a unit step."""
    if not Rtot > 0:
        raise ValueError(f"step range must be positive, got {Rtot!r}")
    if not q > 0:
        raise ValueError(f"wave number q must be positive, got {q!r}")
    return float(weight_column(float(Rtot), float(q))[3])


def mayer_bond(Ra: float, Rb: float, q: float) -> float:
    """Bilinear form of two weight vectors; equals step_hat(Ra + Rb, q)."""
    return float(bilinear(kr_weights(Ra, q), kr_weights(Rb, q)))


def kernel_matrix(R: float, q: float, prec: Optional[int] = None):
    """Shifting kernel exp(R * t1); column 0 is kr_weights(R, q).

    Satisfies K_R @ K_R' = K_{R+R'} = K_R' @ K_R.
    """
    if not R > 0:
        raise ValueError(f"radius must be positive, got {R!r}")
    return closed_flow(GeneratorId.T1, R, q, prec=prec)


def jeffrey_decomposition(nu: int) -> Decomposition:
    """Exact decomposition of the shift generator t_nu in the One + 15 basis."""
    if nu not in (0, 1, 2, 3):
        raise ValueError(f"shift index must be 0..3, got {nu!r}")
    return decompose(get_generator(SHIFT_TAGS[nu]))


@dataclass
class CheckReport:
    """Named exact checks with a failure detail per entry."""

    checks: list = field(default_factory=list)  # (name, ok, detail)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(ok for _name, ok, _detail in self.checks)

    def failures(self) -> list:
        return [(n, d) for n, ok, d in self.checks if not ok]


def jeffrey_identities() -> CheckReport:
    """Exact identities among the shift generators, zero tolerance."""
    from . import reference_tables
    from .algebra import verify_reference_tables

    t = [get_generator(gid) for gid in SHIFT_TAGS]
    report = CheckReport()

    lhs = t[1] @ t[1]
    rhs = t[2].scale(RingElem.monomial(8, 0, 1))
    report.add("t1.t1 = 8pi t2", lhs == rhs)

    lhs = t[1] @ t[3]
    rhs = IDENTITY.scale(RingElem.monomial(Fraction(-1, 8), 4, -1))
    report.add("t1.t3 = -q^4/(8pi) 1", lhs == rhs)

    for i in range(4):
        for j in range(i + 1, 4):
            report.add(
                f"[t{i}, t{j}] = 0",
                commutator(t[i], t[j]).is_zero,
            )

    shift_specs = [s for s in reference_tables.TABLES if s.name.startswith("shift")]
    table_report = verify_reference_tables(shift_specs)
    detail = "; ".join(str(m) for m in table_report.mismatches)
    report.add("shift product/commutator tables", table_report.ok, detail)

    for nu in range(4):
        expected = reference_tables.parse_cell(reference_tables.SHIFT_DECOMPOSITIONS[f"T{nu}"])
        actual = jeffrey_decomposition(nu)
        report.add(
            f"t{nu} decomposition",
            expected == actual,
            "" if expected == actual else f"expected {expected}, generated {actual}",
        )
        report.add(
            f"t{nu} decomposition reconstructs",
            actual.reconstruct() == get_generator(SHIFT_TAGS[nu]),
        )
    return report


def _sinc(x: float) -> float:
    if abs(x) < 1e-8:
        return 1.0 - x * x / 6.0
    return math.sin(x) / x


def inverse_ft_radial(
    hat: Callable[[float], float],
    r: float,
    qmax: float = 200.0,
    n: int = 20000,
    window: bool = True,
) -> float:
    """Radial inverse Fourier transform (2 pi^2)^-1 int_0^qmax q^2 hat(q) sinc(qr) dq.

    Composite Simpson with n panels.  The default applies a Gaussian spectral
    window exp(-18 (q/qmax)^2): the bare truncated integral of a slowly
    decaying hat oscillates with O(1/qmax)..O(1) truncation error, while the
    window turns truncation into a real-space smoothing of width ~6/qmax.
    Set window=False for the bare integrand.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    if qmax <= 0 or n < 2:
        raise ValueError("need qmax > 0 and at least 2 panels")
    if n % 2:
        n += 1
    h = qmax / n
    total = 0.0
    for i in range(n + 1):
        q = i * h
        value = hat(q)
        if math.isnan(value):
            raise ValueError(f"hat returned NaN at q = {q}")
        f = q * q * value * _sinc(q * r)
        if window:
            f *= math.exp(-18.0 * (q / qmax) ** 2)
        weight = 1 if i in (0, n) else (4 if i % 2 else 2)
        total += weight * f
    return total * h / 3.0 / (2.0 * math.pi**2)
