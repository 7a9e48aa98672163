"""Hilbert functions of ideals generated by powers of distinct linear forms.

Everything here is closed-form combinatorics in the multiplicity data.  The
matching rank computations live in the oracle module and are kept strictly
independent so the two routes can be played against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


def _multiplicities(a: Iterable[int]) -> tuple[int, ...]:
    seq = tuple(int(x) for x in a)
    if not seq:
        raise ValueError("empty multiplicity sequence")
    if any(x < 0 for x in seq):
        raise ValueError("multiplicities must be nonnegative")
    # ascending order is what the prefix criterion below assumes
    return tuple(sorted(seq))


def hilbert_power_ideal(a: Iterable[int], d: int) -> int:
    """Dimension of the degree d piece of an ideal of powers of distinct forms.

    For s distinct linear forms in two variables with prescribed multiplicities
    a_1 <= ... <= a_s, the ideal generated by the (a_i + 1)-th powers has
    degree d slice of dimension min(d + 1, sum_i max(d - a_i, 0)).
    """
    mults = _multiplicities(a)
    if d < 0:
        return 0
    return min(d + 1, sum(d - ai for ai in mults if ai < d))


def in_membership(a: Iterable[int], expo_x: int, expo_y: int) -> bool:
    """Whether x^A y^B lies in the initial ideal (lex with x > y).

    Membership holds exactly when some prefix of the multiplicity sequence is
    beaten: sum_{i<=j} a_i < j*A + (j-1)*B for some j.
    """
    mults = _multiplicities(a)
    if expo_x < 0 or expo_y < 0:
        raise ValueError("negative exponent")
    prefix = 0
    for j, ai in enumerate(mults, start=1):
        prefix += ai
        if prefix < j * expo_x + (j - 1) * expo_y:
            return True
    return False


def hilbert_colon(a: Iterable[int], e: int, d: int) -> int:
    """Dimension of the degree d piece of the colon by the e-th power of a new form."""
    mults = _multiplicities(a)
    if e < 0:
        raise ValueError("negative colon exponent")
    if d < 0:
        return 0
    full = min(d + e + 1, sum(max(d + e - ai, 0) for ai in mults))
    return max(full - e, 0)


def colon_membership(a: Iterable[int], e: int, expo_x: int, expo_y: int) -> bool:
    """Initial-ideal membership for the colon: shift the y exponent by e."""
    if e < 0:
        raise ValueError("negative colon exponent")
    return in_membership(a, expo_x, expo_y + e)


@dataclass(frozen=True)
class TiePair:
    """Slope counts (s, t) at the two endpoints of a totally interior edge,
    together with the smoothness order r.  Only the range 2 <= s <= t <= r + 1
    carries a nonzero correction; anything outside it is a trivial regime."""

    s: int
    t: int
    r: int

    def __post_init__(self) -> None:
        if not 2 <= self.s <= self.t <= self.r + 1:
            raise ValueError(f"need 2 <= s <= t <= r+1, got s={self.s} t={self.t} r={self.r}")


def homology_dim(tp: TiePair, d: int) -> int:
    """Lattice count behind the gap between the spline dimension and its lower bound.

    Counts triples (A, B, C) of nonnegative integers with A + B + C = d - (r+1),
    s*A + (s-1)*C <= r + 1 - s and t*B + (t-1)*C <= r + 1 - t.
    """
    s, t, r = tp.s, tp.t, tp.r
    level = d - (r + 1)
    if level < 0:
        return 0
    cap1 = r + 1 - s
    cap2 = r + 1 - t
    count = 0
    for cc in range(level + 1):
        rem1 = cap1 - (s - 1) * cc
        rem2 = cap2 - (t - 1) * cc
        if rem1 < 0 or rem2 < 0:
            break
        for aa in range(min(rem1 // s, level - cc) + 1):
            bb = level - cc - aa
            if t * bb <= rem2:
                count += 1
    return count


def homology_dim_planar(tp: TiePair, d: int) -> int:
    """Equivalent planar count: eliminate C = d - (r+1) - A - B from the slice.

    Kept as an independent route for property testing against homology_dim.
    """
    s, t, r = tp.s, tp.t, tp.r
    level = d - (r + 1)
    if level < 0:
        return 0
    count = 0
    for aa in range(level + 1):
        for bb in range(level - aa + 1):
            if aa - bb * (s - 1) <= s * r - d * (s - 1) and bb - aa * (t - 1) <= t * r - d * (t - 1):
                count += 1
    return count


def homology_regularity(tp: TiePair) -> int:
    """Largest degree with a nonzero lattice count, in closed form."""
    s, t, r = tp.s, tp.t, tp.r
    base = (r + 1) // s + (r + 1) // t + r
    if (r + 1) % s == s - 1 and (r + 1) % t == t - 1:
        return base
    return base - 1


def supersmoothness_threshold(tp: TiePair) -> Fraction:
    """Degree bound t*r / (s*(t-1)) + r under which extra smoothness is forced.

    For d up to this value the spline space matches the one on the companion
    mesh with the shared edge removed, so smoothness across the edge upgrades
    for free.
    """
    return Fraction(tp.t * tp.r, tp.s * (tp.t - 1)) + tp.r


def intersection_initdeg(tp: TiePair) -> int:
    """Least total degree of a monomial violating both prefix bounds at once.

    This is the initial degree of the intersection of the two colon ideals;
    it controls where the supersmoothness identity can stop holding.
    """
    s, t, r = tp.s, tp.t, tp.r
    best: int | None = None
    for cc in range(r + 3):
        gap1 = r + 1 - s - (s - 1) * cc
        gap2 = r + 1 - t - (t - 1) * cc
        aa = 0 if gap1 < 0 else gap1 // s + 1
        bb = 0 if gap2 < 0 else gap2 // t + 1
        total = aa + bb + cc
        if best is None or total < best:
            best = total
    assert best is not None
    return best
