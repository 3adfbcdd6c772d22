"""Diagnostic figures rendered next to the verification report.

All renderers are pure consumers of the exact engines; they write PNG
files and return the written paths.  The Agg backend is forced so the
renderers work headless.
"""

from __future__ import annotations

import math
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from . import series
from .patterns import PATTERNS, count_classes
from .series import PATTERN_SERIES, RECURRENCE_NAMES, asymptotic_form, gf, recurrence_eval


def _save(fig, directory: str, name: str) -> str:
    path = os.path.join(directory, name)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def growth_ratio_figure(directory: str, n_max: int = 60) -> str:
    """Consecutive-term ratios of the rational-series sequences converging
    to their growth bases."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for name in RECURRENCE_NAMES:
        form = asymptotic_form(name)
        xs = range(6, n_max + 1)
        ys = [recurrence_eval(name, n + 1) / recurrence_eval(name, n) for n in xs]
        (line,) = ax.plot(xs, ys, label=name, lw=1.2)
        ax.axhline(form.base, color=line.get_color(), ls=":", lw=0.6)
    ax.set_xlabel("n")
    ax.set_ylabel("a(n+1) / a(n)")
    ax.set_title("growth-ratio convergence")
    ax.legend(ncol=4, fontsize=8)
    return _save(fig, directory, "growth_ratios.png")


def prefactor_figure(directory: str, n_max: int = 120) -> str:
    """Empirical prefactors a(n)/base^n against the published decimals."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for name in RECURRENCE_NAMES:
        form = asymptotic_form(name)
        xs = list(range(10, n_max + 1, 2))
        ys = [
            math.exp(math.log(recurrence_eval(name, n)) - n * math.log(form.base))
            for n in xs
        ]
        (line,) = ax.plot(xs, ys, label=name, lw=1.2)
        if form.published_constant is not None:
            ax.axhline(form.published_constant, color=line.get_color(), ls=":", lw=0.6)
    ax.set_xlabel("n")
    ax.set_ylabel("a(n) / base^n")
    ax.set_title("prefactor convergence (dotted: published decimals)")
    ax.legend(ncol=4, fontsize=8)
    return _save(fig, directory, "prefactors.png")


def class_count_figure(directory: str, max_length: int = 12) -> str:
    """Brute-force class counts (dots) on top of the series coefficients (lines)."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    xs = list(range(2, max_length + 1))
    for pattern in PATTERNS:
        coeffs = gf(PATTERN_SERIES[pattern], max_length).integer_coeffs()
        (line,) = ax.plot(xs, [coeffs[n] for n in xs], lw=1.0, label=pattern)
        brute = [count_classes(n, pattern, max_length=max_length) for n in xs]
        ax.plot(xs, brute, "o", ms=3.5, color=line.get_color())
    ax.set_yscale("log")
    ax.set_xlabel("path length n")
    ax.set_ylabel("equivalence classes")
    ax.set_title("class counts: enumeration (dots) vs series (lines)")
    ax.legend(ncol=5, fontsize=8)
    return _save(fig, directory, "class_counts.png")


def dd_constant_figure(directory: str, n_max: int = 200) -> str:
    """Empirical double-descent prefactor estimates against the published
    constants, split by parity."""
    coeffs = gf("L_DD", n_max).integer_coeffs()
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for parity, color in (("even", "tab:blue"), ("odd", "tab:orange")):
        start = 10 if parity == "even" else 11
        xs = list(range(start, n_max + 1, 2))
        ys = []
        for n in xs:
            exponent = n + 1 if n % 2 == 0 else n
            log_fac = exponent * math.log(math.sqrt(3.0)) - 1.5 * math.log(n)
            ys.append(math.exp(math.log(coeffs[n]) - log_fac))
        ax.plot(xs, ys, color=color, lw=1.2, label=f"{parity} n empirical")
        ax.axhline(
            series.DD_PUBLISHED_CONSTANTS[parity], color=color, ls=":", lw=0.8,
            label=f"{parity} published",
        )
    ax.set_xlabel("n")
    ax.set_ylabel("a(n) * n^(3/2) / 3^(n/2 [+1/2])")
    ax.set_title("double-descent prefactor estimates vs published constants")
    ax.legend(fontsize=8)
    return _save(fig, directory, "dd_prefactor.png")


def render_all(directory: str, max_length: int = 12) -> list[str]:
    os.makedirs(directory, exist_ok=True)
    return [
        growth_ratio_figure(directory),
        prefactor_figure(directory),
        class_count_figure(directory, max_length=max_length),
        dd_constant_figure(directory),
    ]
