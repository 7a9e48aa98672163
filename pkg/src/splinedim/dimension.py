"""Dimension of the space of C^r splines of degree at most d over a triangulation.

Two independent routes are implemented for meshes with a single totally
interior edge: a lattice count added to the classical lower bound, and a
piecewise closed form.  The dispatcher runs both and refuses to answer if
they ever disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import triangulation as tg
from .exact import binom
from .power_ideal import TiePair, homology_dim, homology_regularity


class DimensionError(Exception):
    """Base class for dimension computation failures."""


class TrivialCase(DimensionError):
    """The configuration has no correction term; the lower bound is the answer."""


class OutOfBranch(DimensionError):
    """Closed-form piece evaluated outside the degrees where it holds."""


class UnsupportedTopology(DimensionError):
    """Mesh is neither quasi-cross-cut nor single-totally-interior-edge."""


@dataclass(frozen=True)
class VertexStarData:
    """Division data at an interior vertex with a given slope count.

    With n distinct slopes, write n*(r+1) = alpha*(n-1) + nu with
    0 <= nu < n - 1 and set mu = n - 1 - nu; the pair (mu, nu) weights two
    binomial terms in the lower bound.
    """

    slope_count: int
    alpha: int
    nu: int
    mu: int

    @classmethod
    def from_counts(cls, slope_count: int, r: int) -> "VertexStarData":
        if slope_count < 2:
            raise ValueError("an interior vertex carries at least 2 slopes")
        if r < 0:
            raise ValueError("smoothness order must be nonnegative")
        alpha, nu = divmod(slope_count * (r + 1), slope_count - 1)
        return cls(slope_count, alpha, nu, slope_count - 1 - nu)

    def term(self, d: int) -> int:
        return self.mu * binom(d + 2 - self.alpha, 2) + self.nu * binom(d + 1 - self.alpha, 2)


def _check_dr(d: int, r: int) -> None:
    if not isinstance(d, int) or not isinstance(r, int):
        raise ValueError("d and r must be integers")
    if d < 0 or r < 0:
        raise ValueError("d and r must be nonnegative")


def schumaker_lower_bound(tri: tg.Triangulation, d: int, r: int) -> int:
    """Classical lower bound for dim C^r_d over any triangulation.

    Counts the base polynomials, one binomial per interior edge, and a
    division-data correction at each interior vertex.
    """
    _check_dr(d, r)
    stars = [VertexStarData.from_counts(tg.slope_count(tri, v), r) for v in tri.interior_vertices]
    n_interior = len(tri.interior_edges())
    coeff = n_interior - sum(st.slope_count for st in stars)
    return binom(d + 2, 2) + coeff * binom(d + 1 - r, 2) + sum(st.term(d) for st in stars)


def schumaker_lower_bound_params(p: int, q: int, s: int, t: int, d: int, r: int) -> int:
    """Lower bound for the one-totally-interior-edge configuration.

    The mesh has p + q + 1 interior edges and two interior vertices whose
    stars carry s + 1 and t + 1 slopes (the shared edge included).
    """
    _check_dr(d, r)
    star1 = VertexStarData.from_counts(s + 1, r)
    star2 = VertexStarData.from_counts(t + 1, r)
    coeff = (p + q + 1) - (s + 1) - (t + 1)
    return binom(d + 2, 2) + coeff * binom(d + 1 - r, 2) + star1.term(d) + star2.term(d)


def schumaker_lower_bound_prime(p: int, q: int, s: int, t: int, d: int, r: int) -> int:
    """Lower bound for the companion mesh with the totally interior edge removed."""
    _check_dr(d, r)
    star1 = VertexStarData.from_counts(s, r)
    star2 = VertexStarData.from_counts(t, r)
    coeff = (p + q) - s - t
    return binom(d + 2, 2) + coeff * binom(d + 1 - r, 2) + star1.term(d) + star2.term(d)


@dataclass(frozen=True)
class DimReport:
    r: int
    d: int
    lower_bound: int
    correction: int
    total: int
    method: str

    def __post_init__(self) -> None:
        if self.total != self.lower_bound + self.correction:
            raise ValueError("total must equal lower_bound + correction")


def _require_nontrivial(params: tg.OneTieParams, r: int) -> TiePair:
    if params.trivial_slope_collision:
        raise TrivialCase("shared-edge slope reappears at an endpoint; dim equals the lower bound")
    if params.trivial_many_slopes(r):
        raise TrivialCase(f"endpoint carries {params.t + 1} >= r + 3 slopes; dim equals the lower bound")
    return TiePair(params.s, params.t, r)


def dim_lattice(params: tg.OneTieParams, d: int, r: int) -> DimReport:
    """Lower bound plus the lattice-count correction."""
    _check_dr(d, r)
    tp = _require_nontrivial(params, r)
    lower = schumaker_lower_bound_params(params.p, params.q, params.s, params.t, d, r)
    corr = homology_dim(tp, d)
    return DimReport(r, d, lower, corr, lower + corr, "lattice")


def f_explicit(s: int, t: int, d: int, r: int) -> int:
    """Middle-branch excess over the lower bound, as a single finite sum.

    Only valid strictly between the two degree thresholds; raises OutOfBranch
    elsewhere.  Each summand is clamped at zero.
    """
    if not 2 <= s <= t:
        raise ValueError("need 2 <= s <= t")
    _check_dr(d, r)
    low = Fraction(t * r, s * (t - 1)) + r
    high = Fraction(r + 1, s) + Fraction(r + 1, t) + r - 1
    if not low < d <= high:
        raise OutOfBranch(f"d={d} outside ({low}, {high}]")
    # the branch is empty unless t >= 3, so the denominator below is positive
    den = (s - 1) * (t - 1) - 1
    num = 2 * s * t * (d - r) - (s + t) * d
    start = -((-num) // den)
    total = 0
    for i in range(start, d - r):
        upper = ((i - d) * (s - 1) + r * s) // s
        lower = -((-(i + d * (t - 1) - r * t)) // t)
        if upper >= lower:
            total += upper - lower + 1
    return total


def dim_explicit(params: tg.OneTieParams, d: int, r: int) -> DimReport:
    """Piecewise closed form: companion bound, middle sum, or plain bound."""
    _check_dr(d, r)
    _require_nontrivial(params, r)
    p, q, s, t = params.p, params.q, params.s, params.t
    lower = schumaker_lower_bound_params(p, q, s, t, d, r)
    low = Fraction(t * r, s * (t - 1)) + r
    high = Fraction(r + 1, s) + Fraction(r + 1, t) + r - 1
    if d <= low:
        total = schumaker_lower_bound_prime(p, q, s, t, d, r)
    elif d <= high:
        total = lower + f_explicit(s, t, d, r)
    else:
        total = lower
    return DimReport(r, d, lower, total - lower, total, "explicit")


def stabilization_degree(params: tg.OneTieParams, r: int) -> int:
    """First degree from which the dimension equals the lower bound forever."""
    tp = _require_nontrivial(params, r)
    return homology_regularity(tp) + 1


def dim(tri: tg.Triangulation, d: int, r: int, method: str = "auto",
        allow_large: bool = False) -> DimReport:
    """Dimension of C^r_d over the mesh.

    method "auto" classifies the mesh (quasi-cross-cut, trivial, or one
    totally interior edge) and runs both the lattice and closed-form routes,
    insisting they agree.  "lattice" and "explicit" force a single route;
    "oracle" sets up the smoothness linear system and counts its kernel.
    """
    _check_dr(d, r)
    if method == "oracle":
        from . import oracle
        total = oracle.dim_spline_oracle(tri, d, r, allow_large=allow_large)
        lower = schumaker_lower_bound(tri, d, r)
        return DimReport(r, d, lower, total - lower, total, "oracle")

    if method in ("lattice", "explicit"):
        params = tg.extract_one_tie_params(tri)
        rep = dim_lattice(params, d, r) if method == "lattice" else dim_explicit(params, d, r)
        # rebase on the mesh-level bound: extra interior edges off the shared
        # edge shift both bounds by the same amount, the correction is local
        lower = schumaker_lower_bound(tri, d, r)
        return DimReport(r, d, lower, rep.correction, lower + rep.correction, rep.method)

    if method != "auto":
        raise ValueError(f"unknown method {method!r}")

    lower = schumaker_lower_bound(tri, d, r)
    if tg.is_quasi_cross_cut(tri):
        return DimReport(r, d, lower, 0, lower, "quasi-cross-cut")
    ties = tri.totally_interior_edges()
    if len(ties) != 1:
        raise UnsupportedTopology(
            f"{len(ties)} totally interior edges and not quasi-cross-cut")
    params = tg.extract_one_tie_params(tri)
    if params.trivial_slope_collision or params.trivial_many_slopes(r):
        return DimReport(r, d, lower, 0, lower, "trivial-case")
    latt = dim_lattice(params, d, r)
    expl = dim_explicit(params, d, r)
    if latt.total != expl.total:
        raise DimensionError(
            f"internal disagreement at d={d}, r={r}: lattice {latt.total} vs explicit {expl.total}")
    return DimReport(r, d, lower, latt.correction, lower + latt.correction, "lattice")
