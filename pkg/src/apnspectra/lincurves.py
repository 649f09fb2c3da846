"""Linearized bivariate pairs attached to quadratic components.

For a quadratic component f(X, Y) = trace(lam*XY + mu*G(X, Y)) the linear
part of every directional derivative collapses to trace(A x^(2^d1) +
B y^(2^d2)) for two bivariate linearized polynomials A, B; the component's
linear space is their common zero set, and for the families here A and B
take the single-step shape

    C_0 X + D_0 Y + C_1 X^(2^k) + D_1 Y^(2^k) + ... + C_d X^(2^(dk)) + ...

with gcd(k, m) = 1.  In that shape a pair without a common component has
at most 2^(d1+d2) common rational zeros (the linear-disjointness descent
from the degree bound on projective intersections), so the component is
s-plateaued with s <= d1 + d2.  Distinct points at infinity witness the
no-common-component hypothesis, which is how every use here certifies it.

``derive_pair`` returns the published coefficient records for the four
concrete families; ``derive_pair_generic`` recomputes the same data from
scratch by formally differentiating the trace form, and exists purely as a
test oracle for the hardcoded tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError
from .families import (
    Butterfly,
    Carlet11,
    CarletGeneral,
    FamilyParams,
    Taniguchi,
    ZhouPott,
    validate,
)
from .gf2m import Field, field as canonical_field
from .linalg import gf2_kernel_basis, gf2_span


@dataclass(frozen=True)
class LinearizedBivariate:
    """sum_e C_e X^(2^(ek)) + D_e Y^(2^(ek)) with coefficient pairs (C_e, D_e).

    Trailing all-zero pairs are trimmed on construction; the top index d
    defines the formal degree 2^(dk).  The all-zero polynomial is kept as a
    single (0, 0) pair.
    """

    field: Field
    k: int
    coeffs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        coeffs = list(self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == (0, 0):
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def d(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(c == (0, 0) for c in self.coeffs)

    def evaluate(self, x: int, y: int) -> int:
        f = self.field
        mul = f.scalar_mul
        acc = 0
        for e, (c, dcoef) in enumerate(self.coeffs):
            if c or dcoef:
                frob = f.frobenius_table(e * self.k)
                if c:
                    acc ^= mul(c, int(frob[x]))
                if dcoef:
                    acc ^= mul(dcoef, int(frob[y]))
        return acc

    def zero_set(self) -> list[int]:
        """All (x, y) zeros, packed x | y << m."""
        f = self.field
        cols = [self.evaluate(*_unpack_basis(f, t)) for t in range(2 * f.m)]
        return sorted(gf2_span(gf2_kernel_basis(cols)))


def _unpack_basis(f: Field, t: int) -> tuple[int, int]:
    return (1 << t, 0) if t < f.m else (0, 1 << (t - f.m))


@dataclass(frozen=True)
class InfinityPoint:
    """Projective point (px : py : 0), first nonzero coordinate scaled to 1."""

    px: int
    py: int


@dataclass(frozen=True)
class DerivedPair:
    """Component (A, B) system plus the derivation branch it fell into.

    The published records are written after a bijective change of the two
    variables, which differs between families: ``swap_xy`` says whether the
    coordinates were exchanged, ``twist`` is the Frobenius exponent e such
    that a zero (x, y) of (A, B) corresponds to the derivative direction
    (x^(2^e), y^(2^e)).  Neither affects the common-zero dimension.
    """

    A: LinearizedBivariate
    B: LinearizedBivariate
    case: str  # "generic" | "mu_zero" | "lambda_zero" | "shared_infinity"
    swap_xy: bool
    twist: int = 0

    def direction_zero_set(self) -> list[int]:
        """Common zeros of (A, B) as packed derivative directions."""
        f = self.A.field
        q = f.order
        out = []
        for z in kernel_zero_set(self.A, self.B):
            x, y = z & (q - 1), z >> f.m
            if self.twist:
                x = f.frobenius(x, self.twist)
                y = f.frobenius(y, self.twist)
            if self.swap_xy:
                x, y = y, x
            out.append(x | (y << f.m))
        return sorted(out)


# ----------------------------------------------------------------------
# hardcoded per-family pairs
# ----------------------------------------------------------------------

def derive_pair(params: FamilyParams, lam: int, mu: int,
                f: Field | None = None) -> DerivedPair:
    """The (A, B) system of the component (lam, mu) of the given family."""
    f = f or canonical_field(params.m)
    validate(params, f)
    f.check(lam)
    f.check(mu)
    if lam == 0 and mu == 0:
        raise ParameterError("component selector must be nonzero")
    if isinstance(params, Taniguchi):
        return _pair_taniguchi(params, lam, mu, f)
    if isinstance(params, Carlet11):
        return _pair_carlet11(params, lam, mu, f)
    if isinstance(params, ZhouPott):
        return _pair_zhoupott(params, lam, mu, f)
    if isinstance(params, Butterfly):
        return _pair_butterfly(params, lam, mu, f)
    raise ParameterError(f"no published pair for {type(params).__name__}; "
                         "use derive_pair_generic")


def _pair_taniguchi(p: Taniguchi, lam: int, mu: int, f: Field) -> DerivedPair:
    k = p.k
    lk = f.frobenius(lam, k)
    a = LinearizedBivariate(f, k, (
        (f.mul(f.frobenius(mu, -k), f.frobenius(p.alpha, -k)),
         f.frobenius(mu, -2 * k)),
        (lk, 0),
        (0, f.frobenius(mu, -k)),
    ))
    b = LinearizedBivariate(f, k, (
        (f.mul(mu, p.beta), 0),
        (0, lk),
        (f.mul(f.frobenius(mu, k), f.frobenius(p.beta, k)), f.mul(mu, p.alpha)),
    ))
    case = "mu_zero" if mu == 0 else "generic"
    return DerivedPair(a, b, case, swap_xy=True)


def _pair_carlet11(p: Carlet11, lam: int, mu: int, f: Field) -> DerivedPair:
    k = (p.j - p.i) % p.m
    st, tt = f.mul(mu, p.s), f.mul(mu, p.t)
    ut, vt = f.mul(mu, p.u), f.mul(mu, p.v)
    lj = f.frobenius(lam, p.j)
    a = LinearizedBivariate(f, k, (
        (st, vt),
        (0, lj),
        (f.frobenius(st, k), f.frobenius(ut, k)),
    ))
    b = LinearizedBivariate(f, k, (
        (ut, tt),
        (lj, 0),
        (f.frobenius(vt, k), f.frobenius(tt, k)),
    ))
    if mu == 0:
        case = "mu_zero"
    elif f.mul(ut, vt) != 0 and f.mul(ut, vt) == f.mul(st, tt):
        case = "shared_infinity"
    else:
        case = "generic"
    return DerivedPair(a, b, case, swap_xy=False, twist=-p.i % p.m)


def _pair_zhoupott(p: ZhouPott, lam: int, mu: int, f: Field) -> DerivedPair:
    k = p.k
    lk = f.frobenius(lam, k)
    ma = f.mul(mu, p.alpha)
    a = LinearizedBivariate(f, k, (
        (0, mu),
        (lk, 0),
        (0, f.frobenius(mu, k)),
    ))
    b = LinearizedBivariate(f, k, (
        (f.frobenius(ma, -p.j), 0),
        (0, lk),
        (f.frobenius(ma, k - p.j), 0),
    ))
    if mu == 0:
        case = "mu_zero"
    elif lam == 0:
        case = "lambda_zero"
    else:
        case = "generic"
    return DerivedPair(a, b, case, swap_xy=True)


def _pair_butterfly(p: Butterfly, lam: int, mu: int, f: Field) -> DerivedPair:
    al = p.alpha
    d = f.pow(al, 3) ^ p.beta
    c1 = lam ^ f.mul(mu, d)
    c2 = f.mul(lam, al) ^ f.mul(mu, f.sqr(al))
    c3 = f.mul(lam, f.sqr(al)) ^ f.mul(mu, al)
    c4 = f.mul(lam, d) ^ mu
    a = LinearizedBivariate(f, 2, ((c1, c2), (f.sqr(c1), f.sqr(c3))))
    b = LinearizedBivariate(f, 2, ((c3, c4), (f.sqr(c2), f.sqr(c4))))
    case = "mu_zero" if mu == 0 else "generic"
    return DerivedPair(a, b, case, swap_xy=False)


# ----------------------------------------------------------------------
# kernels, infinity points, degree bound
# ----------------------------------------------------------------------

def _require_compatible(a: LinearizedBivariate, b: LinearizedBivariate) -> None:
    if a.field != b.field or a.k != b.k:
        raise ParameterError("pair must share field and Frobenius step")


def kernel_dimension(a: LinearizedBivariate, b: LinearizedBivariate) -> int:
    """GF(2) dimension of the common zero set of (a, b) on GF(2^m)^2."""
    _require_compatible(a, b)
    f = a.field
    cols = []
    for t in range(2 * f.m):
        x, y = _unpack_basis(f, t)
        cols.append(a.evaluate(x, y) | (b.evaluate(x, y) << f.m))
    return len(gf2_kernel_basis(cols))


def kernel_zero_set(a: LinearizedBivariate, b: LinearizedBivariate) -> list[int]:
    """The common zeros themselves, packed x | y << m, sorted."""
    _require_compatible(a, b)
    f = a.field
    cols = []
    for t in range(2 * f.m):
        x, y = _unpack_basis(f, t)
        cols.append(a.evaluate(x, y) | (b.evaluate(x, y) << f.m))
    return sorted(gf2_span(gf2_kernel_basis(cols)))


def infinity_point(poly: LinearizedBivariate) -> InfinityPoint:
    """The unique projective zero of the top form at infinity.

    The top form C_d X^(2^(dk)) + D_d Y^(2^(dk)) is the 2^(dk)-th power of
    a line, whose point at infinity is (D_d^(2^(-dk)) : C_d^(2^(-dk)) : 0).
    """
    f = poly.field
    c, dcoef = poly.coeffs[-1]
    if c == 0 and dcoef == 0:
        raise ParameterError("zero polynomial has no point at infinity")
    e = -poly.d * poly.k
    px = f.frobenius(dcoef, e)
    py = f.frobenius(c, e)
    if px:
        return InfinityPoint(1, f.div(py, px))
    return InfinityPoint(0, 1)


@dataclass(frozen=True)
class BezoutReport:
    """Kernel size versus the degree-sum bound, with its witness."""

    kernel_dim: int
    degree_sum: int
    distinct_infinity: bool
    bound_satisfied: bool | None  # None when no no-common-factor witness


def bezout_bound_check(a: LinearizedBivariate,
                       b: LinearizedBivariate) -> BezoutReport:
    """kernel_dim <= d1 + d2, asserted only under distinct infinity points.

    Distinct points at infinity certify that the two curves share no
    component, which is the hypothesis of the degree bound.
    """
    _require_compatible(a, b)
    if math.gcd(a.k % a.field.m, a.field.m) != 1:
        raise ParameterError("degree bound requires gcd(k, m) = 1")
    dim = kernel_dimension(a, b)
    degree_sum = a.d + b.d
    if a.is_zero() or b.is_zero():
        distinct = False
    else:
        distinct = infinity_point(a) != infinity_point(b)
    return BezoutReport(dim, degree_sum, distinct,
                        dim <= degree_sum if distinct else None)


def recombine(a: LinearizedBivariate, c: int,
              b: LinearizedBivariate) -> LinearizedBivariate:
    """a + c*b; an invertible recombination, so kernels are unchanged."""
    _require_compatible(a, b)
    f = a.field
    f.check(c)
    length = max(len(a.coeffs), len(b.coeffs))
    out = []
    for e in range(length):
        ca, da = a.coeffs[e] if e < len(a.coeffs) else (0, 0)
        cb, db = b.coeffs[e] if e < len(b.coeffs) else (0, 0)
        out.append((ca ^ f.mul(c, cb), da ^ f.mul(c, db)))
    return LinearizedBivariate(f, a.k, tuple(out))


# ----------------------------------------------------------------------
# generic symbolic-derivative oracle
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FrobeniusFunctional:
    """sum of c * var^(2^e) terms, var in {first, second} direction slot."""

    field: Field
    terms: tuple[tuple[int, int, int], ...]  # (coeff, var 0|1, exp)

    def evaluate(self, u: int, v: int) -> int:
        f = self.field
        acc = 0
        for c, var, e in self.terms:
            acc ^= f.mul(c, f.frobenius(v if var else u, e))
        return acc


def _quadratic_terms(params: FamilyParams, lam: int, mu: int, f: Field):
    """f = trace(sum of c * L1^(2^a) * L2^(2^b)) with linear forms L1, L2.

    Each entry is (c, (cx1, cy1, a), (cx2, cy2, b)) for the form
    c * (cx1 X + cy1 Y)^(2^a) * (cx2 X + cy2 Y)^(2^b).
    """
    m = f.m
    terms = []
    if not isinstance(params, Butterfly):
        terms.append((lam, (1, 0, 0), (0, 1, 0)))  # lam * X * Y
    if isinstance(params, Taniguchi):
        terms += [
            (mu, (1, 0, 3 * params.k % m), (1, 0, 2 * params.k % m)),
            (f.mul(mu, params.alpha), (1, 0, 2 * params.k % m),
             (0, 1, params.k % m)),
            (f.mul(mu, params.beta), (0, 1, params.k % m), (0, 1, 0)),
        ]
    elif isinstance(params, Carlet11):
        i, j = params.i % m, params.j % m
        terms += [
            (f.mul(mu, params.s), (1, 0, i), (1, 0, j)),
            (f.mul(mu, params.u), (1, 0, i), (0, 1, j)),
            (f.mul(mu, params.v), (1, 0, j), (0, 1, i)),
            (f.mul(mu, params.t), (0, 1, i), (0, 1, j)),
        ]
    elif isinstance(params, ZhouPott):
        terms += [
            (mu, (1, 0, params.k % m), (1, 0, 0)),
            (f.mul(mu, params.alpha), (0, 1, (params.k + params.j) % m),
             (0, 1, params.j % m)),
        ]
    elif isinstance(params, Butterfly):
        al = params.alpha
        terms += [
            (lam, (1, al, 1), (1, al, 0)),
            (f.mul(lam, params.beta), (0, 1, 1), (0, 1, 0)),
            (mu, (al, 1, 1), (al, 1, 0)),
            (f.mul(mu, params.beta), (1, 0, 1), (1, 0, 0)),
        ]
    elif isinstance(params, CarletGeneral):
        k = params.k % m
        for e, (pe, qe, re, se) in enumerate(zip(params.p.coeffs,
                                                 params.q.coeffs,
                                                 params.r.coeffs,
                                                 params.s.coeffs)):
            ke = (k + e) % m
            if pe:
                terms.append((f.mul(mu, pe), (1, 0, ke), (1, 0, e)))
            if qe:
                terms.append((f.mul(mu, qe), (1, 0, ke), (0, 1, e)))
            if re:
                terms.append((f.mul(mu, re), (1, 0, e), (0, 1, ke)))
            if se:
                terms.append((f.mul(mu, se), (0, 1, ke), (0, 1, e)))
    else:
        raise ParameterError(f"unknown family {type(params).__name__}")
    return [t for t in terms if t[0]]


def derive_pair_generic(params: FamilyParams, lam: int, mu: int,
                        f: Field | None = None):
    """Formally differentiate the trace form of the component (lam, mu).

    Returns two FrobeniusFunctional objects (one per coordinate slot) in
    plain direction variables; their common zeros are exactly the
    component's linear structures.  Test oracle for derive_pair.
    """
    f = f or canonical_field(params.m)
    validate(params, f)
    f.check(lam)
    f.check(mu)
    if lam == 0 and mu == 0:
        raise ParameterError("component selector must be nonzero")
    m = f.m
    slot_terms: tuple[dict, dict] = ({}, {})
    for c, (cx1, cy1, a), (cx2, cy2, b) in _quadratic_terms(params, lam, mu, f):
        for (sa, s_cx, s_cy), (sb, o_cx, o_cy) in (
                ((a, cx1, cy1), (b, cx2, cy2)),
                ((b, cx2, cy2), (a, cx1, cy1))):
            # trace(c * P^(2^sa) * q^(2^sb)) contributions, normalized to
            # exponent 0 on the table variable
            base = f.frobenius(c, -sa)
            shift = (sb - sa) % m
            for slot, s_coef in ((0, s_cx), (1, s_cy)):
                if not s_coef:
                    continue
                lead = f.mul(base, f.check(s_coef))
                for var, o_coef in ((0, o_cx), (1, o_cy)):
                    if not o_coef:
                        continue
                    coef = f.mul(lead, f.frobenius(f.check(o_coef), shift))
                    key = (var, shift)
                    acc = slot_terms[slot]
                    acc[key] = acc.get(key, 0) ^ coef
    functionals = []
    for acc in slot_terms:
        terms = tuple((c, var, e) for (var, e), c in sorted(acc.items()) if c)
        functionals.append(FrobeniusFunctional(f, terms))
    return functionals[0], functionals[1]


def kernel_dimension_generic(f: Field, fa: FrobeniusFunctional,
                             fb: FrobeniusFunctional) -> int:
    """Common-zero dimension for functionals in direction variables."""
    cols = []
    for t in range(2 * f.m):
        u, v = _unpack_basis(f, t)
        cols.append(fa.evaluate(u, v) | (fb.evaluate(u, v) << f.m))
    return len(gf2_kernel_basis(cols))


def kernel_zero_set_generic(f: Field, fa: FrobeniusFunctional,
                            fb: FrobeniusFunctional) -> list[int]:
    cols = []
    for t in range(2 * f.m):
        u, v = _unpack_basis(f, t)
        cols.append(fa.evaluate(u, v) | (fb.evaluate(u, v) << f.m))
    return sorted(gf2_span(gf2_kernel_basis(cols)))
