"""Quaternion row/column determinants, Moore-Penrose inverse and Cramer-rule
least-squares solvers.

Matrices are lists of rows. Entries may be quaternion strings such as
"1-2i+1/3j" or "1/2-k", ints, floats, Fractions, or 4-tuples (w, x, y, z).
Results come back as lists of rows of canonical quaternion strings.
"""

from fractions import Fraction

from . import _core
from ._core import QcramerError

__all__ = [
    "QcramerError",
    "rank",
    "rdet",
    "cdet",
    "hermitian_det",
    "gram_det",
    "ddet",
    "inverse",
    "pinv",
    "pinv_oracle",
    "check_penrose",
    "solve_ax_b",
    "solve_xa_b",
    "solve_axb_d",
    "components",
]


def _coeff(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _entry(v):
    if isinstance(v, str):
        return v
    if isinstance(v, (tuple, list)):
        if len(v) != 4:
            raise ValueError("quaternion tuples need four components")
        terms = [_coeff(c) + unit for c, unit in zip(v, ("", "i", "j", "k")) if c != 0]
        if not terms:
            return "0"
        text = terms[0]
        for t in terms[1:]:
            text += t if t.startswith("-") else "+" + t
        return text
    return _coeff(v)


def _rows(a):
    return [[_entry(v) for v in row] for row in a]


def components(q, scalar="rational"):
    """Split a quaternion string into (w, x, y, z) as Fractions or floats."""
    conv = Fraction if scalar == "rational" else float
    return tuple(conv(c) for c in _core.components(_entry(q), scalar))


def rank(a, scalar="rational"):
    return _core.rank(_rows(a), scalar)


def rdet(a, i, scalar="rational", max_n=7):
    return _core.rdet(_rows(a), i, scalar, max_n)


def cdet(a, j, scalar="rational", max_n=7):
    return _core.cdet(_rows(a), j, scalar, max_n)


def hermitian_det(h, scalar="rational", max_n=7):
    return _core.hermitian_det(_rows(h), scalar, max_n)


def gram_det(a, scalar="rational", max_n=7):
    return _core.gram_det(_rows(a), scalar, max_n)


def ddet(a, scalar="rational", max_n=7):
    return _core.ddet(_rows(a), scalar, max_n)


def inverse(a, scalar="rational", max_n=7):
    return _core.inverse(_rows(a), scalar, max_n)


def pinv(a, route="auto", scalar="rational", max_n=7):
    return _core.pinv(_rows(a), route, scalar, max_n)


def pinv_oracle(a, mode="factorization", scalar="rational"):
    return _core.pinv_oracle(_rows(a), mode, scalar)


def check_penrose(a, x, scalar="rational", rel_tol=1e-9):
    return _core.check_penrose(_rows(a), _rows(x), scalar, rel_tol)


def solve_ax_b(a, b, scalar="rational", max_n=7):
    return _core.solve_ax_b(_rows(a), _rows(b), scalar, max_n)


def solve_xa_b(a, b, scalar="rational", max_n=7):
    return _core.solve_xa_b(_rows(a), _rows(b), scalar, max_n)


def solve_axb_d(a, b, d, route="auto", scalar="rational", max_n=7):
    return _core.solve_axb_d(_rows(a), _rows(b), _rows(d), route, scalar, max_n)
