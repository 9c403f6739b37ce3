"""Closed-form thresholds for colorings that must contain a monochromatic star.

All values depend on the star sizes only through ``sum(m_i) - t`` and the
parity count ``k`` (how many sizes are even), plus the parity of the host
order for the two host-dependent thresholds.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import BelowRamseyNumber, ConsistencyError
from .types import StarParams


class Branch(str, Enum):
    EVEN_K2 = "EvenK2"
    OTHERWISE = "Otherwise"
    ODD_N_EVEN_K2 = "OddN_EvenK2"
    K0_OR_EVEN_N = "K0_or_EvenN"


@dataclass(frozen=True)
class ThresholdReport:
    """One evaluated threshold; ``quantity`` is one of ``r``, ``r_star``, ``rr``, ``g``, ``f``."""

    params: StarParams
    n: int | None
    value: int
    branch: Branch
    quantity: str = "r"

    def expected_branch(self) -> Branch:
        k = self.params.k
        even_k2 = k >= 2 and k % 2 == 0
        if self.quantity == "g":
            return Branch.ODD_N_EVEN_K2 if self.n % 2 == 1 and even_k2 else Branch.OTHERWISE
        if self.quantity == "f":
            return Branch.K0_OR_EVEN_N if k == 0 or self.n % 2 == 0 else Branch.OTHERWISE
        return Branch.EVEN_K2 if even_k2 else Branch.OTHERWISE

    def consistent(self) -> bool:
        """Recompute the branch from the parities and compare."""
        return self.branch is self.expected_branch()

    def to_dict(self) -> dict:
        return {"value": self.value, "branch": self.branch.value, "n": self.n}


def _even_k2(p: StarParams) -> bool:
    return p.k >= 2 and p.k % 2 == 0


def _excess(p: StarParams) -> int:
    return p.total - p.t


def ramsey_stars(p: StarParams) -> int:
    """Least N such that every t-coloring of K_N has a star K_{1,m_i} in color i."""
    return _excess(p) + 1 if _even_k2(p) else _excess(p) + 2


def star_critical_stars(p: StarParams) -> int:
    """Least number of edges at one vertex of K_N that must survive for arrowing."""
    if _even_k2(p):
        return _excess(p) + 1 - p.k // 2
    return 1


def regular_ramsey_stars(p: StarParams) -> int:
    """Least degree r such that r-regular graphs on N = r(...) vertices arrow."""
    return _excess(p) if _even_k2(p) else _excess(p) + 1


def ramsey_report(p: StarParams) -> ThresholdReport:
    return ThresholdReport(p, None, ramsey_stars(p), Branch.EVEN_K2 if _even_k2(p) else Branch.OTHERWISE, "r")


def star_critical_report(p: StarParams) -> ThresholdReport:
    branch = Branch.EVEN_K2 if _even_k2(p) else Branch.OTHERWISE
    return ThresholdReport(p, None, star_critical_stars(p), branch, "r_star")


def regular_ramsey_report(p: StarParams) -> ThresholdReport:
    branch = Branch.EVEN_K2 if _even_k2(p) else Branch.OTHERWISE
    return ThresholdReport(p, ramsey_stars(p), regular_ramsey_stars(p), branch, "rr")


def _check_host_order(p: StarParams, n: int) -> None:
    r = ramsey_stars(p)
    if n < r:
        raise BelowRamseyNumber(f"n={n} is below r{p.sizes}={r}")


def regular_threshold_g(p: StarParams, n: int) -> ThresholdReport:
    """Regular-graph threshold on ``n >= r(...)`` vertices."""
    _check_host_order(p, n)
    if n % 2 == 1 and _even_k2(p):
        return ThresholdReport(p, n, _excess(p), Branch.ODD_N_EVEN_K2, "g")
    return ThresholdReport(p, n, _excess(p) + 1, Branch.OTHERWISE, "g")


def min_degree_threshold_f(p: StarParams, n: int) -> ThresholdReport:
    """Minimum-degree threshold on ``n >= r(...)`` vertices."""
    _check_host_order(p, n)
    if p.k == 0 or n % 2 == 0:
        return ThresholdReport(p, n, _excess(p) + 1, Branch.K0_OR_EVEN_N, "f")
    return ThresholdReport(p, n, _excess(p), Branch.OTHERWISE, "f")


def threshold_chain(p: StarParams) -> tuple[int, int, int]:
    """Return ``(r_star, rr, r)`` after checking ``1 <= r_star <= rr <= r - 1``."""
    r_star, rr, r = star_critical_stars(p), regular_ramsey_stars(p), ramsey_stars(p)
    if not 1 <= r_star <= rr <= r - 1:
        raise ConsistencyError(f"chain violated for {p.sizes}: r*={r_star}, rr={rr}, r={r}")
    return r_star, rr, r


def all_reports(p: StarParams, n: int | None = None) -> dict[str, ThresholdReport]:
    """The five thresholds keyed ``r``, ``r_star``, ``rr``, ``g``, ``f``; ``n`` defaults to r(...)."""
    threshold_chain(p)
    if n is None:
        n = ramsey_stars(p)
    return {
        "r": ramsey_report(p),
        "r_star": star_critical_report(p),
        "rr": regular_ramsey_report(p),
        "g": regular_threshold_g(p, n),
        "f": min_degree_threshold_f(p, n),
    }
