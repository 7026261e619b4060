"""Built-in consistency suites wired to the CLI selftest command.

Each suite exercises an identity that couples independent routes through the
engine, so a corrupted constant or a broken statistic surfaces as a FAIL.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import fock, grdim, reptype
from .cartan import CartanDatum
from .young import content, codeg, deg, d_total, partitions_of, standard_tableaux


@dataclass(frozen=True)
class SuiteResult:
    name: str
    ok: bool
    detail: str


def run_selftest(ell: int, n: int) -> list[SuiteResult]:
    results = []
    for name, fn in (
        ("factorial", _suite_factorial),
        ("deg-codeg-defect", _suite_deg_codeg),
        ("oracle-equivalence", _suite_oracle),
        ("weyl-orbit-counts", _suite_weyl_counts),
        ("crystal-bookkeeping", _suite_crystal),
    ):
        try:
            detail = fn(ell, n)
            results.append(SuiteResult(name, True, detail))
        except Exception as exc:  # noqa: BLE001 - report, do not crash the runner
            results.append(SuiteResult(name, False, f"{type(exc).__name__}: {exc}"))
    return results


def _suite_factorial(ell: int, n: int) -> str:
    for m in range(n + 1):
        value = grdim.graded_dim_n(m, ell).eval_at_one()
        if value != math.factorial(m):
            raise AssertionError(f"dim at degree {m} is {value}, expected {m}!")
    return f"degrees 0..{n}"

def _suite_deg_codeg(ell: int, n: int) -> str:
    cd = CartanDatum(ell)
    checked = 0
    for m in range(n + 1):
        for p in partitions_of(m):
            expected = cd.defect(content(p, ell))
            for t in standard_tableaux(p):
                if deg(t, ell) + codeg(t, ell) != expected:
                    raise AssertionError(f"deg+codeg != defect at {t!r}")
                checked += 1
    return f"{checked} tableaux"


def _suite_oracle(ell: int, n: int) -> str:
    cap = min(n, 4)
    checked = 0
    seen = set()
    for m in range(cap + 1):
        for p in partitions_of(m):
            beta = content(p, ell)
            if beta in seen:
                continue
            seen.add(beta)
            words = []
            for word in grdim.words_in_i_beta(beta):
                words.append(word)
                if len(words) >= 12:
                    break
            for nu in words:
                for nu2 in words:
                    lhs = grdim.graded_dim(beta, nu, nu2, ell)
                    rhs = grdim.oracle_graded_dim(beta, nu, nu2, ell)
                    if lhs != rhs:
                        raise AssertionError(
                            f"formula {lhs} != oracle {rhs} at beta={beta}, "
                            f"nu={nu}, nu2={nu2}")
                    checked += 1
    return f"{checked} word pairs"


def _suite_weyl_counts(ell: int, n: int) -> str:
    cap = min(n, 6)
    checked = 0
    seen = set()
    for m in range(cap + 1):
        for p in partitions_of(m):
            beta = content(p, ell)
            if beta in seen:
                continue
            seen.add(beta)
            for i in range(ell + 1):
                try:
                    reflected = reptype.weyl_orbit_probe(beta, i, ell)
                except ValueError:
                    continue
                if grdim.simple_count(beta, ell) != grdim.simple_count(reflected, ell):
                    raise AssertionError(f"simple counts differ across r_{i} at {beta}")
                if reptype.classify(beta, ell).tag != reptype.classify(reflected, ell).tag:
                    raise AssertionError(f"types differ across r_{i} at {beta}")
                checked += 1
    return f"{checked} reflections"


def _suite_crystal(ell: int, n: int) -> str:
    cd = CartanDatum(ell)
    graph = fock.generate_highest_weight_crystal(ell, min(n, 8))
    for vertex in graph.vertices_sorted():
        p = vertex.partition
        if vertex.weight != cd.lambda0 - cd.root_weight(content(p, ell)):
            raise AssertionError(f"wrong weight at vertex {p}")
        for i in range(ell + 1):
            if vertex.phi[i] - vertex.eps[i] != d_total(p, i, ell):
                raise AssertionError(f"phi - eps != d_total at {p}, i={i}")
    return f"{len(graph.vertices)} vertices"
