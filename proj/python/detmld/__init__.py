"""Minimal log discrepancies of determinantal varieties.

Rationals are returned as ``fractions.Fraction``; negative infinity as
``float('-inf')``. Alphas may be ints, Fractions or strings like "7/2".
"""

from fractions import Fraction
import math

from . import _detmld
from ._detmld import InternalError, Rejected, is_terminal

__all__ = [
    "Rejected",
    "InternalError",
    "mld_at_rank",
    "mld_along",
    "is_lc_at_rank",
    "is_lc_along",
    "is_terminal",
    "beta_coefficients",
    "semicontinuity_profile",
    "orbit_info",
    "em_oracle",
    "ord_ideal_powerseries",
    "straighten",
    "is_standard",
    "verify_nash",
]


def _value(text):
    return -math.inf if text == "-inf" else Fraction(text)


def _alphas(k, alphas):
    if alphas is None:
        return ["0"] * k
    return [str(Fraction(a)) for a in alphas]


def _lam(lam):
    return [None if (x == math.inf or x == "inf") else int(x) for x in lam]


def _ext(x):
    return math.inf if x == "inf" else x


def mld_at_rank(m, k, q, alphas=None):
    return _value(_detmld.mld_at_rank(m, k, _alphas(k, alphas), q))


def mld_along(m, k, j, alphas=None):
    return _value(_detmld.mld_along(m, k, _alphas(k, alphas), j))


def is_lc_at_rank(m, k, q, alphas=None):
    return _detmld.is_lc_at_rank(m, k, _alphas(k, alphas), q)


def is_lc_along(m, k, j, alphas=None):
    return _detmld.is_lc_along(m, k, _alphas(k, alphas), j)


def beta_coefficients(m, k, count, alphas=None):
    return [Fraction(b) for b in _detmld.beta_coefficients(m, k, _alphas(k, alphas), count)]


def semicontinuity_profile(m, k, alphas=None):
    p = _detmld.semicontinuity_profile(m, k, _alphas(k, alphas))
    p["values"] = [_value(v) for v in p["values"]]
    for s in p["steps"]:
        s["difference"] = _value(s["difference"])
        s["expected"] = Fraction(s["expected"])
    return p


def orbit_info(m, k, lam, q=None):
    d = _detmld.orbit_info(m, k, _lam(lam), q)
    d["w"] = [_ext(x) for x in d["w"]]
    d["nash"] = _ext(d["nash"])
    return d


def em_oracle(m, k, target=("point", 0), L=2, alphas=None):
    """Box-bounded minimum of the EM objective next to the closed form."""
    kind, index = target
    d = _detmld.em_oracle(m, k, _alphas(k, alphas), kind, index, L)
    d["closed_form"] = _value(d["closed_form"])
    d["oracle"]["minimum"] = _value(d["oracle"]["minimum"])
    d["oracle"]["box_minimum"] = Fraction(d["oracle"]["box_minimum"])
    return d


def ord_ideal_powerseries(lam, m, s, N, seed=None):
    """t-order of I_s on diag(t^lam); None when it exceeds the truncation."""
    return _detmld.ord_ideal_powerseries(_lam(lam), m, s, N, seed)


def straighten(left, right, m, k_bound=None):
    d = _detmld.straighten(left, right, m, k_bound)
    d["terms"] = [(Fraction(c), l, r) for c, l, r in d["terms"]]
    return d


def is_standard(left, right):
    return _detmld.is_standard(left, right)


def verify_nash(m, k, threads=1):
    return _detmld.verify_nash(m, k, threads)
