"""Cross-method verification sweep used by the `check` subcommand and tests."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import closedform
from .altroutes import weyl_via_cg
from .closedform import h_coeff, symmetry_report, zeta_gamma, zeta_poly, zeta_range, zeta_sum
from .enumeration import eta_decomposition_check, weyl_bruteforce, weyl_forced
from .poly import NormalPoly
from .scalar import Scalar


@dataclass
class CheckResult:
    name: str
    cases: int
    passed: bool
    witness: str = ""


@dataclass
class CheckReport:
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)


def _closed_with(h_fn, j: int, k: int) -> NormalPoly:
    terms: dict = {}
    for u in range((j + k) // 2 + 1):
        for v in range(j + k - 2 * u + 1):
            key = (j + k - 2 * u - v, v)
            terms[key] = terms.get(key, Scalar()) + h_fn(j, k, u, v)
    return NormalPoly(terms)


def _degree_pairs(max_degree: int):
    for degree in range(max_degree + 1):
        for j in range(degree + 1):
            yield j, degree - j


def run_checks(max_degree: int = 6, forced_cap: int = 8, eta_cap: int = 6,
               parallel: bool = False, h_fn=None) -> CheckReport:
    """Run every route equality and symmetry check up to the degree caps.

    h_fn overrides the closed-form coefficient function; it exists so the
    harness can inject a corrupted table and watch the sweep fail.
    """
    h_fn = h_fn or h_coeff
    report = CheckReport()

    def route_case(pair):
        j, k = pair
        closed = _closed_with(h_fn, j, k)
        brute = weyl_bruteforce(j, k)
        cg = weyl_via_cg(j, k)
        if closed != brute:
            return f"closed != brute at (j={j}, k={k}): {closed!r} vs {brute!r}"
        if closed != cg:
            return f"closed != cg at (j={j}, k={k}): {closed!r} vs {cg!r}"
        return None

    pairs = list(_degree_pairs(max_degree))
    if parallel:
        with ThreadPoolExecutor() as pool:
            outcomes = list(pool.map(route_case, pairs))
    else:
        outcomes = [route_case(pair) for pair in pairs]
    witness = next((w for w in outcomes if w), "")
    report.results.append(CheckResult("route-equality(closed,brute,cg)",
                                      len(pairs), not witness, witness))

    forced_pairs = [p for p in pairs if p[0] + p[1] <= forced_cap]
    witness = ""
    for j, k in forced_pairs:
        if weyl_forced(j, k, cap=forced_cap) != weyl_bruteforce(j, k):
            witness = f"forced != brute at (j={j}, k={k})"
            break
    report.results.append(CheckResult("forced-vs-brute", len(forced_pairs),
                                      not witness, witness))

    eta_pairs = [p for p in pairs if p[0] + p[1] <= eta_cap]
    cases = 0
    witness = ""
    for j, k in eta_pairs:
        for u in range((j + k) // 2 + 1):
            for v in range(j + k - 2 * u + 1):
                cases += 1
                check = eta_decomposition_check(j, k, u, v, cap=eta_cap)
                if not check.matches and not witness:
                    witness = (f"eta decomposition fails at (j={j}, k={k}, u={u}, v={v}): "
                               f"{check.symbolic_sum} vs "
                               f"{check.lambda_value * check.xi_value * check.zeta_value}")
    report.results.append(CheckResult("eta-decomposition", cases, not witness, witness))

    cases = 0
    witness = ""
    for j, k in pairs:
        for t in range(j + k + 3):
            cases += 1
            values = {zeta_sum(j, k, t), zeta_poly(j, k, t),
                      zeta_gamma(j, k, t), zeta_range(j, k, t)}
            if len(values) != 1 and not witness:
                witness = f"zeta variants disagree at (j={j}, k={k}, t={t}): {values}"
    report.results.append(CheckResult("zeta-agreement", cases, not witness, witness))

    witness = ""
    for j, k in pairs:
        sym = symmetry_report(j, k)
        if not sym.ok and not witness:
            kind, u, v, lhs, rhs = sym.failures[0]
            witness = f"{kind} symmetry fails at (j={j}, k={k}, u={u}, v={v}): {lhs!r} vs {rhs!r}"
    report.results.append(CheckResult("coefficient-symmetries", len(pairs),
                                      not witness, witness))

    witness = ""
    for j, k in pairs:
        closed = _closed_with(h_fn, j, k)
        if closed.adjoint() != closed:
            witness = f"not self-adjoint at (j={j}, k={k})"
            break
    report.results.append(CheckResult("hermiticity", len(pairs), not witness, witness))

    return report
