#!/usr/bin/env python3
"""Regenerate every structure table from the catalog and print it.

Usage: python scripts/dump_structure_tables.py [--json]
"""

from __future__ import annotations

import sys

from fmspace import reference_tables
from fmspace.algebra import build_table
from fmspace.catalog import resolve_id
from fmspace.cli import _json_value


def main() -> int:
    as_json = "--json" in sys.argv[1:]
    for spec in reference_tables.TABLES:
        rows = [resolve_id(n) for n in spec.row_names]
        cols = [resolve_id(n) for n in spec.col_names]
        basis = [resolve_id(n) for n in spec.basis_names] if spec.basis_names else None
        if spec.op_order == "row_col":
            table = build_table(spec.kind, rows, cols, basis=basis)
        else:
            table = build_table(spec.kind, cols, rows, basis=basis)
        print(f"# {spec.name}" + (" (reversed operand order)" if spec.op_order != "row_col" else ""))
        if as_json:
            print(_json_value(table.to_json_dict()))
        else:
            print(table.to_text())
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
