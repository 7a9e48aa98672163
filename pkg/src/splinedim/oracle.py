"""Brute-force cross-checks via exact linear algebra.

Nothing here reuses the combinatorial formulas: spline dimensions come from
the kernel of the smoothness system across interior edges, and Hilbert
function values come from ranks of multiplication matrices.  Agreement with
the closed forms is therefore a real test, not a tautology.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd, lcm
from typing import Sequence

from . import triangulation as tg
from .exact import kernel_dim_sparse, parse_rational, rank_sparse


class OracleError(Exception):
    pass


class TooLarge(OracleError):
    """System exceeds the size guardrail; pass allow_large to run anyway."""


class DegenerateSlopes(OracleError):
    """Slope lists must be nonzero and pairwise distinct to describe a mesh star."""


MAX_COLUMNS = 5000


def _monomials_upto(d: int) -> list[tuple[int, int]]:
    """Bivariate exponent pairs of total degree at most d, graded lex."""
    out = []
    for tot in range(d + 1):
        for i in range(tot, -1, -1):
            out.append((i, tot - i))
    return out


def _monomials_exact(nvars: int, d: int) -> list[tuple[int, ...]]:
    """Exponent tuples of total degree exactly d, in a fixed order."""
    out = []
    for bars in combinations_with_replacement(range(nvars), d):
        expo = [0] * nvars
        for v in bars:
            expo[v] += 1
        out.append(tuple(expo))
    out.sort(reverse=True)
    return out


def _poly_mul(f: dict, g: dict) -> dict:
    out: dict = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            key = tuple(a + b for a, b in zip(m1, m2))
            val = out.get(key, 0) + c1 * c2
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return out


def _poly_pow(f: dict, n: int) -> dict:
    if n == 0:
        zero = (0,) * len(next(iter(f)))
        return {zero: 1}
    out = dict(f)
    for _ in range(n - 1):
        out = _poly_mul(out, f)
    return out


def _int_linear_form(coeffs: Sequence) -> dict:
    """Linear form from a coefficient vector, scaled to primitive integers."""
    vals = [parse_rational(c) for c in coeffs]
    if all(v == 0 for v in vals):
        raise ValueError("zero linear form")
    scale = lcm(*(v.denominator for v in vals))
    ints = [v.numerator * (scale // v.denominator) for v in vals]
    g = 0
    for w in ints:
        g = gcd(g, w)
    ints = [w // g for w in ints]
    n = len(ints)
    form = {}
    for i, w in enumerate(ints):
        if w:
            expo = tuple(1 if j == i else 0 for j in range(n))
            form[expo] = w
    return form


def _edge_form(tri: tg.Triangulation, edge: tg.Edge) -> dict:
    """Primitive integer affine form vanishing on the edge's line.

    Keys are (i, j) exponent pairs for x^i y^j with i + j <= 1.
    """
    p = tri.vertices[edge.u]
    q = tri.vertices[edge.v]
    a = q.y - p.y
    b = p.x - q.x
    c = -(a * p.x + b * p.y)
    scale = lcm(a.denominator, b.denominator, c.denominator)
    ia, ib, ic = (v.numerator * (scale // v.denominator) for v in (a, b, c))
    g = gcd(gcd(ia, ib), ic)
    ia, ib, ic = ia // g, ib // g, ic // g
    form = {}
    if ia:
        form[(1, 0)] = ia
    if ib:
        form[(0, 1)] = ib
    if ic:
        form[(0, 0)] = ic
    return form


def dim_spline_oracle(tri: tg.Triangulation, d: int, r: int, allow_large: bool = False) -> int:
    """Spline space dimension as the kernel dimension of the smoothness system.

    Unknowns: one polynomial of degree <= d per triangle plus one multiplier
    of degree <= d - r - 1 per interior edge.  For each interior edge the
    difference of the two adjacent polynomials must equal the edge form to
    the power r + 1 times the multiplier.  Multipliers are determined by the
    spline, so the kernel dimension equals the spline space dimension.
    """
    if d < 0 or r < 0:
        raise ValueError("d and r must be nonnegative")
    interior = tri.interior_edges()
    n_tri = len(tri.triangles)
    mono = _monomials_upto(d)
    n_poly = len(mono)
    midx = {m: k for k, m in enumerate(mono)}
    hdeg = d - r - 1
    mono_h = _monomials_upto(hdeg) if hdeg >= 0 else []
    n_mult = len(mono_h)
    ncols = n_tri * n_poly + len(interior) * n_mult
    if ncols > MAX_COLUMNS and not allow_large:
        raise TooLarge(f"{ncols} unknowns exceeds the {MAX_COLUMNS} column guardrail")

    rows: list[dict[int, int]] = []
    for k_e, edge in enumerate(interior):
        t1, t2 = edge.triangles
        power = _poly_pow(_edge_form(tri, edge), r + 1)
        base1 = t1 * n_poly
        base2 = t2 * n_poly
        baseh = n_tri * n_poly + k_e * n_mult
        eqs: list[dict[int, int]] = [{} for _ in range(n_poly)]
        for k in range(n_poly):
            eqs[k][base1 + k] = 1
            eqs[k][base2 + k] = -1
        for hk, hm in enumerate(mono_h):
            for pm, pc in power.items():
                key = (hm[0] + pm[0], hm[1] + pm[1])
                eqs[midx[key]][baseh + hk] = -pc
        rows.extend(eqs)
    return kernel_dim_sparse(rows, ncols)


def _multiple_rows(generators: Sequence[tuple[Sequence, int]], d: int,
                   midx: dict, nvars: int) -> list[dict[int, int]]:
    """Rows spanning the degree-d piece of the ideal the generators cut out."""
    rows = []
    for coeffs, power in generators:
        if len(tuple(coeffs)) != nvars:
            raise ValueError("generator arity mismatch")
        if power < 0:
            raise ValueError("negative generator exponent")
        if power > d:
            continue
        gen = _poly_pow(_int_linear_form(coeffs), power)
        for mono in _monomials_exact(nvars, d - power):
            row = {}
            for pm, pc in gen.items():
                key = tuple(a + b for a, b in zip(mono, pm))
                row[midx[key]] = pc
            rows.append(row)
    return rows


def hilbert_ideal_oracle(generators: Sequence[tuple[Sequence, int]], d: int) -> int:
    """Dimension of the degree-d piece of an ideal of powers of linear forms.

    Generators are (coefficient vector, exponent) pairs, all in the same
    number of variables; the value is the rank of all monomial multiples.
    """
    if d < 0:
        return 0
    if not generators:
        return 0
    nvars = len(tuple(generators[0][0]))
    mono = _monomials_exact(nvars, d)
    midx = {m: k for k, m in enumerate(mono)}
    return rank_sparse(_multiple_rows(generators, d, midx, nvars))


def hilbert_colon_oracle(generators: Sequence[tuple[Sequence, int]], form: Sequence,
                         e: int, d: int) -> int:
    """Dimension of the degree-d piece of the colon of the ideal by form^e.

    Computed as the kernel dimension of multiplication by form^e into the
    quotient by the ideal, using ranks only.
    """
    if e < 0:
        raise ValueError("negative colon exponent")
    if d < 0:
        return 0
    nvars = len(tuple(form))
    mono_big = _monomials_exact(nvars, d + e)
    midx = {m: k for k, m in enumerate(mono_big)}
    ideal_rows = _multiple_rows(generators, d + e, midx, nvars)
    zpow = _poly_pow(_int_linear_form(form), e)
    zrows = []
    for mono in _monomials_exact(nvars, d):
        row = {}
        for pm, pc in zpow.items():
            key = tuple(a + b for a, b in zip(mono, pm))
            row[midx[key]] = pc
        zrows.append(row)
    r_ideal = rank_sparse(ideal_rows)
    r_both = rank_sparse(ideal_rows + zrows)
    n_d = len(_monomials_exact(nvars, d))
    return n_d - (r_both - r_ideal)


def colon_pair_dims(gens1: Sequence[tuple[Sequence, int]], gens2: Sequence[tuple[Sequence, int]],
                    form: Sequence, e: int, d: int) -> tuple[int, int, int]:
    """Degree-d dimensions of two colon ideals and of their intersection.

    The intersection comes from the rank of the map sending f to the pair of
    classes of f*form^e in the two quotients, stacked side by side.
    """
    if e < 0:
        raise ValueError("negative colon exponent")
    if d < 0:
        return (0, 0, 0)
    nvars = len(tuple(form))
    mono_big = _monomials_exact(nvars, d + e)
    midx = {m: k for k, m in enumerate(mono_big)}
    n_big = len(mono_big)
    a1 = _multiple_rows(gens1, d + e, midx, nvars)
    a2 = _multiple_rows(gens2, d + e, midx, nvars)
    zpow = _poly_pow(_int_linear_form(form), e)
    zrows = []
    for mono in _monomials_exact(nvars, d):
        row = {}
        for pm, pc in zpow.items():
            key = tuple(a + b for a, b in zip(mono, pm))
            row[midx[key]] = pc
        zrows.append(row)
    n_d = len(zrows)
    r1 = rank_sparse(a1)
    r2 = rank_sparse(a2)
    dim1 = n_d - (rank_sparse(a1 + zrows) - r1)
    dim2 = n_d - (rank_sparse(a2 + zrows) - r2)
    paired = [dict(row) | {n_big + k: v for k, v in row.items()} for row in zrows]
    paired += [dict(row) for row in a1]
    paired += [{n_big + k: v for k, v in row.items()} for row in a2]
    dim_both = n_d - (rank_sparse(paired) - r1 - r2)
    return (dim1, dim2, dim_both)


def _validated_slopes(values: Sequence, what: str) -> list[Fraction]:
    out = [parse_rational(v) for v in values]
    if any(v == 0 for v in out) or len(set(out)) != len(out):
        raise DegenerateSlopes(f"{what} slopes must be nonzero and distinct: {list(values)!r}")
    return out


def homology_dim_oracle(s: int, t: int, r: int, b: Sequence, c: Sequence, d: int) -> int:
    """Gap between the spline dimension and its lower bound, by ranks alone.

    b and c list the s and t slopes at the two endpoints of the totally
    interior edge.  The gap in degree d is the codimension of the sum of the
    two colon ideals' pieces in degree d - r - 1.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    bs = _validated_slopes(b, "first endpoint")
    cs = _validated_slopes(c, "second endpoint")
    if len(bs) != s or len(cs) != t:
        raise ValueError(f"expected {s} and {t} slopes, got {len(bs)} and {len(cs)}")
    ell = d - (r + 1)
    if ell < 0:
        return 0
    gens1 = [((1, 0, bi), r + 1) for bi in bs]
    gens2 = [((0, 1, ci), r + 1) for ci in cs]
    dim1, dim2, dim_both = colon_pair_dims(gens1, gens2, (0, 0, 1), r + 1, ell)
    n_ell = len(_monomials_exact(3, ell))
    return n_ell - (dim1 + dim2 - dim_both)
