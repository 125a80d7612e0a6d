"""Regenerates src/gell_mann.rs: exact su(3) d/f constants in the Gell-Mann basis.

d_abc = Tr({λa, λb} λc) / 4,  f_abc = Tr([λa, λb] λc) / (4i).
Each nonzero value is written as r + s*sqrt(3) with rational r, s.
"""
import itertools
import sys
from pathlib import Path

import sympy as sp

I, s3 = sp.I, sp.sqrt(3)
lam = [
    sp.Matrix([[0, 1, 0], [1, 0, 0], [0, 0, 0]]),
    sp.Matrix([[0, -I, 0], [I, 0, 0], [0, 0, 0]]),
    sp.Matrix([[1, 0, 0], [0, -1, 0], [0, 0, 0]]),
    sp.Matrix([[0, 0, 1], [0, 0, 0], [1, 0, 0]]),
    sp.Matrix([[0, 0, -I], [0, 0, 0], [I, 0, 0]]),
    sp.Matrix([[0, 0, 0], [0, 0, 1], [0, 1, 0]]),
    sp.Matrix([[0, 0, 0], [0, 0, -I], [0, I, 0]]),
    sp.Matrix([[1, 0, 0], [0, 1, 0], [0, 0, -2]]) / s3,
]


def split(v):
    v = sp.nsimplify(sp.simplify(v), [s3])
    s = sp.Rational(sp.simplify(v.coeff(s3)))
    r = sp.Rational(sp.simplify(v - s * s3))
    return r, s


def entries(kind):
    out = []
    for a, b, c in itertools.product(range(8), repeat=3):
        if kind == "d":
            v = ((lam[a] * lam[b] + lam[b] * lam[a]) * lam[c]).trace() / 4
        else:
            v = ((lam[a] * lam[b] - lam[b] * lam[a]) * lam[c]).trace() / (4 * I)
        v = sp.simplify(sp.expand(v))
        if v != 0:
            r, s = split(v)
            out.append((a, b, c, r.p, r.q, s.p, s.q))
    return out


def render(name, rows):
    body = "\n".join(
        f"    ({a}, {b}, {c}, {rp}, {rq}, {sp_}, {sq})," for a, b, c, rp, rq, sp_, sq in rows
    )
    return f"pub(crate) const {name}: &[(usize, usize, usize, i64, i64, i64, i64)] = &[\n{body}\n];\n"


def main():
    dst = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent.parent / "src" / "gell_mann.rs"
    text = (
        "// @generated by scripts/gen_gell_mann.py; do not edit.\n"
        "//! su(3) structure constants as (a, b, c, r_num, r_den, s_num, s_den),\n"
        "//! value = r + s*sqrt(3), zero-based indices. Nonzero entries only.\n\n"
        + render("D_TENSOR", entries("d"))
        + "\n"
        + render("F_TENSOR", entries("f"))
    )
    dst.write_text(text)


if __name__ == "__main__":
    main()
