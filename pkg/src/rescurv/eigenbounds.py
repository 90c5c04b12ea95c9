"""Certified rational enclosures for extreme Laplacian eigenvalues.

Laplacian spectra are algebraic, not rational, so "exact" here means an
interval with exact rational endpoints that provably brackets the
eigenvalue: the characteristic polynomial is computed exactly
(Faddeev-LeVerrier over Fractions), integer roots are split off by trial
evaluation below the Gershgorin bound, and the remaining roots are
isolated by Sturm-chain bisection to any requested width.  When the
eigenvalue happens to be an integer the enclosure degenerates to a point
and downstream comparisons become exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DisconnectedGraphError
from .graph import WeightedGraph
from .spectral import laplacian

Poly = list[Fraction]  # coefficients ascending: p[k] multiplies t**k

DEFAULT_WIDTH = Fraction(1, 2**64)
_FLOOR_WIDTH = Fraction(1, 2**256)


@dataclass(frozen=True)
class Enclosure:
    """Rational interval [lo, hi] containing one real number."""

    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        return float(self.midpoint())


# ---------------------------------------------------------------------------
# polynomial helpers


def poly_eval(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(p: Poly) -> Poly:
    return [c * k for k, c in enumerate(p)][1:] or [Fraction(0)]


def _poly_trim(p: Poly) -> Poly:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_rem(a: Poly, b: Poly) -> Poly:
    """Remainder of a / b over the rationals."""
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    db = len(b) - 1
    if db == 0:
        return [Fraction(0)]
    lb = b[-1]
    while len(a) - 1 >= db:
        da = len(a) - 1
        f = a[-1] / lb
        for i in range(db + 1):
            a[da - db + i] -= f * b[i]
        a = _poly_trim(a[:-1] or [Fraction(0)])
        if len(a) == 1 and a[0] == 0:
            break
    return a


def _poly_normalize_positive(p: Poly) -> Poly:
    """Scale by a positive constant so the leading coefficient has size 1.

    Positive scaling preserves signs everywhere, which is all the Sturm
    chain cares about, and keeps coefficient growth down.
    """
    lead = p[-1]
    if lead == 0:
        return p
    scale = abs(lead)
    return [c / scale for c in p]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while not (len(b) == 1 and b[0] == 0):
        a, b = b, _poly_normalize_positive(_poly_rem(a, b))
    if a[-1] != 0:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def poly_divide_exact(a: Poly, b: Poly) -> Poly:
    """Quotient a / b assuming b divides a exactly."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    out = [Fraction(0)] * (len(a) - db)
    for k in range(len(out) - 1, -1, -1):
        f = a[k + db] / lb
        out[k] = f
        for i in range(db + 1):
            a[k + i] -= f * b[i]
    return _poly_trim(out)


def charpoly(rows: Sequence[Sequence[Fraction]]) -> Poly:
    """Monic characteristic polynomial det(tI - M), exact over Fractions."""
    n = len(rows)
    M = [[Fraction(x) for x in row] for row in rows]
    B = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    for k in range(1, n + 1):
        MB = [
            [sum(M[i][l] * B[l][j] for l in range(n)) for j in range(n)]
            for i in range(n)
        ]
        ck = -sum(MB[i][i] for i in range(n)) / k
        coeffs[n - k] = ck
        B = [[MB[i][j] + (ck if i == j else 0) for j in range(n)] for i in range(n)]
    return coeffs


# ---------------------------------------------------------------------------
# Sturm machinery


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [_poly_trim(list(p)), _poly_trim(poly_derivative(p))]
    while not (len(chain[-1]) == 1 and chain[-1][0] == 0):
        rem = _poly_rem(chain[-2], chain[-1])
        if len(rem) == 1 and rem[0] == 0:
            break
        chain.append(_poly_normalize_positive([-c for c in rem]))
    return chain


def _sign_changes(chain: list[Poly], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = poly_eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_in(chain: list[Poly], a: Fraction, b: Fraction) -> int:
    """Distinct real roots in the half-open interval (a, b]."""
    return _sign_changes(chain, a) - _sign_changes(chain, b)


def _bisect_smallest(chain, lo: Fraction, hi: Fraction, width: Fraction) -> Enclosure:
    # invariant: no root at or below lo, at least one root in (lo, hi]
    while hi - lo > width:
        mid = (lo + hi) / 2
        if count_roots_in(chain, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return Enclosure(lo, hi)


def _bisect_largest(chain, lo: Fraction, hi: Fraction, width: Fraction) -> Enclosure:
    # invariant: at least one root in (lo, hi], none above hi
    while hi - lo > width:
        mid = (lo + hi) / 2
        if count_roots_in(chain, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    return Enclosure(lo, hi)


# ---------------------------------------------------------------------------
# Laplacian-specific extraction


@dataclass(frozen=True)
class SpectralEnclosures:
    """Certified brackets for lambda_2 and lambda_max of a Laplacian."""

    lambda2: Enclosure
    lambda_max: Enclosure


def _positive_integer_roots(q: Poly, bound: Fraction) -> list[int]:
    """Positive integer roots of q; only integers can be rational roots of a
    monic integer polynomial, so this is exhaustive when q has integer
    coefficients (and empty otherwise)."""
    if any(c.denominator != 1 for c in q):
        return []
    out = []
    m = 1
    while m <= bound:
        if poly_eval(q, Fraction(m)) == 0:
            out.append(m)
        m += 1
    return out


def _deflate_root(q: Poly, root: int) -> Poly:
    divisor = [Fraction(-root), Fraction(1)]
    while len(q) > 1 and poly_eval(q, Fraction(root)) == 0:
        q = poly_divide_exact(q, divisor)
    return q


def gershgorin_upper(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    best = Fraction(0)
    for i, row in enumerate(rows):
        s = row[i] + sum(abs(x) for j, x in enumerate(row) if j != i)
        best = max(best, s)
    return best


def _separate_from_integers(enclosure, ints, chain, bisect, width: Fraction):
    """Refine a bracket until it contains no integer root, so comparisons
    between the bracketed irrational root and the integer roots are decided."""
    w = width
    while any(enclosure.lo < m <= enclosure.hi for m in ints):
        if w <= _FLOOR_WIDTH:
            raise RuntimeError(
                "cannot separate an eigenvalue from an integer root; "
                "input is outside the supported range"
            )
        w = max(w * w, _FLOOR_WIDTH)
        enclosure = bisect(chain, enclosure.lo, enclosure.hi, w)
    return enclosure


def laplacian_spectral_enclosures(
    g: WeightedGraph, width: Fraction = DEFAULT_WIDTH
) -> SpectralEnclosures:
    """Bracket lambda_2 (algebraic connectivity) and lambda_max of ``g``.

    Integer eigenvalues come out as point enclosures; the rest are bisected
    to the requested width.  Raises for disconnected input, where lambda_2
    would be 0 and the bound formulas downstream do not apply.
    """
    if g.n == 1:
        zero = Enclosure(Fraction(0), Fraction(0))
        return SpectralEnclosures(lambda2=zero, lambda_max=zero)
    rows = laplacian(g, "exact").entries
    p = charpoly(rows)
    if p[0] != 0:
        raise DisconnectedGraphError("characteristic polynomial has no zero root")
    q = _poly_trim(p[1:])  # p / t; its roots are the nonzero eigenvalues
    if poly_eval(q, Fraction(0)) == 0:
        raise DisconnectedGraphError("zero eigenvalue is not simple")
    bound = gershgorin_upper(rows) + 1
    ints = _positive_integer_roots(q, bound)
    rem = q
    for r in ints:
        rem = _deflate_root(rem, r)
    lam2: Optional[Enclosure] = None
    lammax: Optional[Enclosure] = None
    if len(rem) > 1:
        squarefree = poly_divide_exact(rem, poly_gcd(rem, poly_derivative(rem)))
        chain = sturm_chain(squarefree)
        zero = Fraction(0)
        if count_roots_in(chain, zero, bound) >= 1:
            lam2 = _bisect_smallest(chain, zero, bound, width)
            lammax = _bisect_largest(chain, zero, bound, width)
            lam2 = _separate_from_integers(lam2, ints, chain, _bisect_smallest, width)
            lammax = _separate_from_integers(
                lammax, ints, chain, _bisect_largest, width
            )
    if ints:
        lo_int = Enclosure(Fraction(min(ints)), Fraction(min(ints)))
        hi_int = Enclosure(Fraction(max(ints)), Fraction(max(ints)))
        # brackets are disjoint from every integer root, so <= decides
        lam2 = lo_int if lam2 is None or lo_int.hi <= lam2.lo else lam2
        lammax = hi_int if lammax is None or hi_int.lo >= lammax.hi else lammax
    if lam2 is None or lammax is None:
        raise DisconnectedGraphError("no positive eigenvalues found")
    return SpectralEnclosures(lambda2=lam2, lambda_max=lammax)
