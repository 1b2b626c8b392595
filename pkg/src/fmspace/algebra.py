"""Decomposition in the One + 15 generator basis and structure-table tooling.

The sixteen catalog matrices {One} + isometric + metamorphic form a complete
basis of the 4x4 matrix space over the fraction field, so every exact matrix
decomposes uniquely; products and commutators of catalog matrices always land
back in the span with single-monomial coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Literal, Optional, Sequence

from .catalog import BASIS_IDS, GeneratorId, get_generator, resolve_id
from .matrices import Mat4
from .ring import ONE, ZERO, FieldElem, RingElem, format_ring

TableKind = Literal["product", "half_commutator", "half_anticommutator"]

_HALF = RingElem.rational(1, 2)


class NotInSpanError(ValueError):
    """Raised when a matrix does not lie in the span of the requested basis."""

    def __init__(self, message: str, residual: Mat4):
        super().__init__(message)
        self.residual = residual


@dataclass(frozen=True)
class Decomposition:
    """Coefficients of a matrix in a named basis; absent ids mean zero."""

    coeffs: dict[GeneratorId, RingElem]

    def __post_init__(self):
        cleaned = {
            GeneratorId(k): v for k, v in self.coeffs.items() if not v.is_zero
        }
        object.__setattr__(self, "coeffs", cleaned)

    def __getitem__(self, gen_id: GeneratorId) -> RingElem:
        return self.coeffs.get(GeneratorId(gen_id), ZERO)

    def __eq__(self, other):
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self.coeffs == other.coeffs

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self):
        """(id, coefficient) pairs in canonical catalog order."""
        order = {gid: i for i, gid in enumerate(GeneratorId)}
        return sorted(self.coeffs.items(), key=lambda kv: order[kv[0]])

    def reconstruct(self) -> Mat4:
        total = Mat4.zero()
        for gid, coef in self.coeffs.items():
            total = total + get_generator(gid).scale(coef)
        return total

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for gid, coef in self.items():
            mono = coef.as_monomial()
            if mono is not None:
                negative = mono[0] < 0
                text = format_ring(-coef if negative else coef)
                piece = gid.value if text == "1" else f"{text} {gid.value}"
            else:
                negative = False
                piece = f"({format_ring(coef)}) {gid.value}"
            if not parts:
                parts.append(("-" if negative else "") + piece)
            else:
                parts.append(("- " if negative else "+ ") + piece)
        return " ".join(parts)

    def to_json_dict(self) -> dict:
        return {gid.value: coef.to_json_dict() for gid, coef in self.items()}

    @staticmethod
    def from_json_dict(d: dict) -> "Decomposition":
        return Decomposition(
            {resolve_id(k): RingElem.from_json_dict(v) for k, v in d.items()}
        )


def _vectorize(x: Mat4) -> list[RingElem]:
    return [x[mu, nu] for mu in range(4) for nu in range(4)]


@lru_cache(maxsize=None)
def _basis_inverse() -> tuple:
    """Exact inverse of the 16x16 change-of-basis matrix, entries in the ring.

    Column i of the forward matrix is the vectorized i-th basis matrix; the
    inverse is obtained once by Gauss-Jordan elimination over the fraction
    field and reused for every decomposition.
    """
    cols = [_vectorize(get_generator(gid)) for gid in BASIS_IDS]
    aug = [
        [FieldElem(cols[i][pos]) for i in range(16)]
        + [FieldElem(ONE if k == pos else ZERO) for k in range(16)]
        for pos in range(16)
    ]
    for col in range(16):
        pivot = next(r for r in range(col, 16) if not aug[r][col].is_zero)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].invert()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(16):
            if r != col and not aug[r][col].is_zero:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    out = []
    for r in range(16):
        row = []
        for c in range(16, 32):
            val = aug[r][c].to_ring()
            if val is None:
                raise ArithmeticError("basis inverse left the coefficient ring")
            row.append(val)
        out.append(tuple(row))
    return tuple(out)


def decompose(t: Mat4, basis: Optional[Sequence[GeneratorId]] = None) -> Decomposition:
    """Exact coefficients of t in the given basis (default: One + 15).

    Raises NotInSpanError (carrying the residual) if t is outside the span of
    a restricted basis; the full 16-element basis spans everything.
    """
    if basis is None or tuple(basis) == BASIS_IDS:
        inv = _basis_inverse()
        vec = _vectorize(t)
        coeffs = {}
        for i, gid in enumerate(BASIS_IDS):
            acc = ZERO
            for pos in range(16):
                entry = vec[pos]
                if entry.is_zero:
                    continue
                w = inv[i][pos]
                if w.is_zero:
                    continue
                acc = acc + w * entry
            if not acc.is_zero:
                coeffs[gid] = acc
        dec = Decomposition(coeffs)
    else:
        dec = _decompose_subset(t, tuple(GeneratorId(g) for g in basis))
    residual = t - dec.reconstruct()
    if not residual.is_zero:
        raise NotInSpanError("matrix is not in the span of the requested basis", residual)
    return dec


def _decompose_subset(t: Mat4, basis: tuple[GeneratorId, ...]) -> Decomposition:
    """Gaussian elimination with first-nonzero pivoting over the fraction field."""
    n = len(basis)
    cols = [_vectorize(get_generator(gid)) for gid in basis]
    rows = [
        [FieldElem(cols[i][pos]) for i in range(n)] + [FieldElem(_vectorize(t)[pos])]
        for pos in range(16)
    ]
    rank = 0
    pivot_cols = []
    for col in range(n):
        pivot = next((r for r in range(rank, 16) if not rows[r][col].is_zero), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].invert()
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(16):
            if r != rank and not rows[r][col].is_zero:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        pivot_cols.append(col)
        rank += 1
    coeffs: dict[GeneratorId, RingElem] = {}
    for r, col in enumerate(pivot_cols):
        val = rows[r][n].to_ring()
        if val is None:
            partial = Decomposition(coeffs)
            raise NotInSpanError(
                "solution leaves the coefficient ring", t - partial.reconstruct()
            )
        if not val.is_zero:
            coeffs[basis[col]] = val
    return Decomposition(coeffs)


def _table_op(kind: TableKind, x: Mat4, y: Mat4) -> Mat4:
    if kind == "product":
        return x @ y
    if kind == "half_commutator":
        return (x @ y - y @ x).scale(_HALF)
    if kind == "half_anticommutator":
        return (x @ y + y @ x).scale(_HALF)
    raise ValueError(f"unknown table kind {kind!r}")


@dataclass(frozen=True)
class StructureTable:
    kind: TableKind
    row_ids: tuple[GeneratorId, ...]
    col_ids: tuple[GeneratorId, ...]
    cells: tuple[tuple[Decomposition, ...], ...]

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "rows": [gid.value for gid in self.row_ids],
            "cols": [gid.value for gid in self.col_ids],
            "cells": [[cell.to_json_dict() for cell in row] for row in self.cells],
        }

    def to_text(self) -> str:
        """Aligned text rendering in the published row/column layout."""
        header = [self.kind] + [gid.value for gid in self.col_ids]
        body = [
            [rid.value] + [str(cell) for cell in row]
            for rid, row in zip(self.row_ids, self.cells)
        ]
        widths = [
            max(len(line[i]) for line in [header] + body)
            for i in range(len(header))
        ]
        lines = []
        for line in [header] + body:
            lines.append("  ".join(s.ljust(w) for s, w in zip(line, widths)).rstrip())
        return "\n".join(lines)


def build_table(
    kind: TableKind,
    rows: Iterable[GeneratorId],
    cols: Iterable[GeneratorId],
    basis: Optional[Sequence[GeneratorId]] = None,
) -> StructureTable:
    """Decompose op(row, col) for every pair; exact, zero tolerance."""
    row_ids = tuple(GeneratorId(r) for r in rows)
    col_ids = tuple(GeneratorId(c) for c in cols)
    mats_r = [get_generator(gid) for gid in row_ids]
    mats_c = [get_generator(gid) for gid in col_ids]
    cells = tuple(
        tuple(decompose(_table_op(kind, xr, xc), basis) for xc in mats_c)
        for xr in mats_r
    )
    return StructureTable(kind, row_ids, col_ids, cells)


# ---------------------------------------------------------------------------
# Verification against the shipped reference tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CellMismatch:
    table: str
    kind: TableKind
    row: str
    col: str
    expected: str
    actual: str

    def __str__(self):
        return (
            f"{self.table} [{self.row}, {self.col}]: "
            f"expected {self.expected}, generated {self.actual}"
        )


@dataclass
class TableVerification:
    cells_checked: int = 0
    mismatches: list[CellMismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_reference_tables(table_specs=None) -> TableVerification:
    """Regenerate every reference table from the catalog and diff the cells."""
    from . import reference_tables

    if table_specs is None:
        table_specs = reference_tables.TABLES
    report = TableVerification()
    for spec in table_specs:
        row_ids = tuple(resolve_id(n) for n in spec.row_names)
        col_ids = tuple(resolve_id(n) for n in spec.col_names)
        basis = tuple(resolve_id(n) for n in spec.basis_names) if spec.basis_names else None
        if spec.op_order == "row_col":
            generated = build_table(spec.kind, row_ids, col_ids, basis=basis)
            gen_cell = lambda i, j: generated.cells[i][j]
        else:  # published with reversed operand order: cell (i, j) is op(col, row)
            generated = build_table(spec.kind, col_ids, row_ids, basis=basis)
            gen_cell = lambda i, j: generated.cells[j][i]
        for i, row_name in enumerate(spec.row_names):
            for j, col_name in enumerate(spec.col_names):
                report.cells_checked += 1
                expected = reference_tables.parse_cell(spec.cells[i][j])
                actual = gen_cell(i, j)
                if expected != actual:
                    report.mismatches.append(
                        CellMismatch(
                            spec.name,
                            spec.kind,
                            row_name,
                            col_name,
                            str(expected),
                            str(actual),
                        )
                    )
    return report
