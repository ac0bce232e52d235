"""Exact max-knapsack-profit of the generalized harmonic function.

Rational inputs accept ``fractions.Fraction``, ``int`` or strings such as
``"4/3"`` and ``"1.75"``; rational outputs are ``fractions.Fraction``.
"""

from ._core import (
    adversarial_instance,
    build_witness,
    classify,
    compute_m,
    cost,
    enumerate_feasible,
    eval_fk,
    greedy_solution,
    harmonic_pack,
    is_feasible,
    monotonic_sweep,
    mu_for,
    profit,
    score,
    solve,
    solve_brute,
    solve_closed_form,
    sylvester_table,
    tinf_bracket,
    to_decimal,
)

__all__ = [
    "adversarial_instance",
    "build_witness",
    "classify",
    "compute_m",
    "cost",
    "enumerate_feasible",
    "eval_fk",
    "greedy_solution",
    "harmonic_pack",
    "is_feasible",
    "monotonic_sweep",
    "mu_for",
    "profit",
    "score",
    "solve",
    "solve_brute",
    "solve_closed_form",
    "sylvester_table",
    "tinf_bracket",
    "to_decimal",
]
