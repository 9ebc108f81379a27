"""Rational-point upper bounds from numerical-semigroup data.

Thin wrapper over the C++ core: numerical semigroups and Apéry tables,
the Geil-Matsumoto / Lewittes bounds with their closed formulas, interval
specializations, Kummer-cover Weierstrass semigroups, the comparison bounds
(Hasse-Weil-Serre, Ihara, Yoo-Lee), and a brute-force cross-check.
"""

from ._core import (
    AperyTable,
    NumericalSemigroup,
    apery_interval,
    bound_report,
    cmq_semigroup,
    curve_report,
    gm_bruteforce,
    gm_equals_lewittes,
    gm_general,
    gm_interval_closed,
    gm_interval_setA,
    gm_interval_sum,
    gm_setdiff_bruteforce,
    gm_two_generators,
    hws_bound,
    ihara_bound,
    interval_contains_q,
    kummer_apery,
    kummer_consecutive_bound,
    lewittes,
    make_semigroup,
    verify,
    weierstrass_semigroup,
    yl_bound,
)

__all__ = [
    "AperyTable",
    "NumericalSemigroup",
    "apery_interval",
    "bound_report",
    "cmq_semigroup",
    "curve_report",
    "gm_bruteforce",
    "gm_equals_lewittes",
    "gm_general",
    "gm_interval_closed",
    "gm_interval_setA",
    "gm_interval_sum",
    "gm_setdiff_bruteforce",
    "gm_two_generators",
    "hws_bound",
    "ihara_bound",
    "interval_contains_q",
    "kummer_apery",
    "kummer_consecutive_bound",
    "lewittes",
    "make_semigroup",
    "verify",
    "weierstrass_semigroup",
    "yl_bound",
]

__version__ = "0.1.0"
