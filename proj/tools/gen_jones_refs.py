#!/usr/bin/env python3
"""Regenerate data/jones_refs.dat and tests/data/knotinfo_codes.csv from KnotInfo.

Requires the `database_knotinfo` package (pip install database_knotinfo).
Reference polynomials come from KnotInfo's `jones_polynomial` column; this
project's own Jones implementation is never used to produce them.
"""
import csv
import os
import re
import sys

import database_knotinfo
from sympy import Poly, Symbol, sympify

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
EXTRA = {"12a_181", "12a_477"}


def crossing_number(name):
    return int(re.match(r"(\d+)", name).group(1))


def quarter_terms(text):
    t = Symbol("t")
    expr = sympify(text.replace("^", "**"), locals={"t": t})
    # shift to a polynomial, then undo the shift
    shift = 64
    poly = Poly((expr * t**shift).expand(), t)
    terms = []
    for (e,), c in sorted(poly.terms()):
        terms.append(((e - shift) * 4, int(c)))
    return terms


def main():
    csv.field_size_limit(sys.maxsize)
    path = os.path.join(os.path.dirname(database_knotinfo.__file__), "csv_data", "knotinfo_data_complete.csv")
    from database_knotinfo.__version__ import value as version
    with open(path) as f:
        reader = csv.reader(f, delimiter="|")
        header = next(reader)
        col = {h: i for i, h in enumerate(header)}
        rows = [r for r in reader if re.match(r"\d+[an]?_\d+$", r[col["name"]])]

    selected = []
    for r in rows:
        name = r[col["name"]]
        if name == "0_1" or (crossing_number(name) <= 9) or name in EXTRA:
            selected.append(r)

    out = os.path.join(ROOT, "data", "jones_refs.dat")
    with open(out, "w") as f:
        f.write("# Reference Jones polynomials V(t) for prime knots up to 9 crossings,\n")
        f.write("# plus 12a_181 and 12a_477.\n")
        f.write(f"# source: KnotInfo via database_knotinfo {version}, column jones_polynomial\n")
        f.write("# generated by tools/gen_jones_refs.py\n")
        f.write("# format: name | exponent:coefficient ... | source note\n")
        f.write("# exponents are in quarter-units of t (4 means t^1)\n")
        for r in selected:
            name = r[col["name"]]
            jones = r[col["jones_polynomial"]] or "1"
            terms = " ".join(f"{e}:{c}" for e, c in quarter_terms(jones))
            label = "unknot" if name == "0_1" else name
            f.write(f"{label} | {terms} | KnotInfo\n")

    fixture = os.path.join(ROOT, "tests", "data", "knotinfo_codes.csv")
    with open(fixture, "w") as f:
        f.write(f"# KnotInfo DT and braid notation (database_knotinfo {version})\n")
        f.write("name;dt;braid\n")
        for r in selected:
            if r[col["name"]] == "0_1":
                continue
            f.write(f"{r[col['name']]};{r[col['dt_notation']]};{r[col['braid_notation']]}\n")


if __name__ == "__main__":
    main()
