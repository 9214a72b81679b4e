"""Minimal vanishing polynomials of point sets and the structure they induce.

The minimal polynomial of a finite set is the monic skew polynomial of least
degree that evaluates to zero on every point.  It is built one point at a
time: a point the current polynomial already kills is skipped, otherwise the
polynomial is extended by the linear factor whose root is the point
conjugated by the current value.  Degree growth therefore counts exactly the
"independent" points, which is what rank, closures and bases below rest on.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .conjugacy import class_of, conjugate, unwarp, warp
from .errors import MixedClasses, NotClosed
from .field import Fe, FieldCtx, ONE, ZERO, rref, span_vectors
from .skewpoly import SkewPoly, grcd, llcm

# Fast/exhaustive crossover: beyond this field size, closures of single-class
# sets go through the lifted-subspace enumeration instead of a full scan.
_FAST_CLOSURE_MIN_ORDER = 1 << 12


def canonical_points(points: Iterable[Fe]) -> tuple[Fe, ...]:
    """Deduplicated canonical order: zero first, then ascending log."""
    return tuple(sorted(set(points)))


def minimal_poly(ctx: FieldCtx, points: Iterable[Fe]) -> SkewPoly:
    """Monic least-degree skew polynomial vanishing on the set (1 for the
    empty set).  Insertion happens in canonical order; the result does not
    depend on that order."""
    f = SkewPoly.one(ctx)
    for b in canonical_points(points):
        v = f.evaluate(b)
        if v == ZERO:
            continue
        f = SkewPoly(ctx, (ctx.neg(conjugate(ctx, b, v)), ONE)) * f
    return f


def rank_of(ctx: FieldCtx, points: Iterable[Fe]) -> int:
    return minimal_poly(ctx, points).degree


def is_p_independent(ctx: FieldCtx, points: Iterable[Fe]) -> bool:
    """True when the minimal polynomial's degree equals the set size."""
    pts = canonical_points(points)
    return minimal_poly(ctx, pts).degree == len(pts)


def p_basis(ctx: FieldCtx, points: Iterable[Fe]) -> tuple[Fe, ...]:
    """Greedy independent subset (canonical order) with the same closure."""
    f = SkewPoly.one(ctx)
    out = []
    for b in canonical_points(points):
        v = f.evaluate(b)
        if v == ZERO:
            continue
        f = SkewPoly(ctx, (ctx.neg(conjugate(ctx, b, v)), ONE)) * f
        out.append(b)
    return tuple(out)


def _single_class(ctx: FieldCtx, pts: Sequence[Fe]) -> int:
    """The common nonzero class index, or raise MixedClasses."""
    cls = {class_of(ctx, b) for b in pts}
    if len(cls) != 1 or None in cls:
        raise MixedClasses(f"points span classes {sorted(cls, key=repr)}")
    return cls.pop()


def lift(ctx: FieldCtx, points: Iterable[Fe]) -> list[list[Fe]]:
    """Coordinates of canonical warp preimages of a single-class set; the
    set is P-independent exactly when these vectors are F_q-independent."""
    pts = canonical_points(points)
    if not pts:
        return []
    ell = _single_class(ctx, pts)
    return [ctx.coords(unwarp(ctx, b, ell)) for b in pts]


def closure_fast(ctx: FieldCtx, points: Iterable[Fe]) -> tuple[Fe, ...]:
    """Closure of a single-class set via its lifted subspace: warp every
    nonzero vector of the span back into the class."""
    pts = canonical_points(points)
    if not pts:
        return ()
    ell = _single_class(ctx, pts)
    R, rk, _ = rref(ctx, lift(ctx, pts))
    out = set()
    for v in span_vectors(ctx, R[:rk]):
        a = ctx.uncoords(v)
        if a != ZERO:
            out.add(ctx.mul(ell, warp(ctx, a)))
    return canonical_points(out)


def closure(ctx: FieldCtx, points: Iterable[Fe]) -> tuple[Fe, ...]:
    """All zeros of the minimal polynomial.  Exhaustive scan by default;
    single-class sets on large fields take the subspace route."""
    pts = canonical_points(points)
    if not pts:
        return ()
    if ctx.order > _FAST_CLOSURE_MIN_ORDER:
        try:
            return closure_fast(ctx, pts)
        except MixedClasses:
            pass
    return minimal_poly(ctx, pts).zeros()


def decompose_check(ctx: FieldCtx, points1: Iterable[Fe], points2: Iterable[Fe]):
    """For closed sets: check that llcm/grcd of the minimal polynomials are
    the minimal polynomials of union/intersection and that the degrees add
    up; returns (llcm, grcd)."""
    p1, p2 = canonical_points(points1), canonical_points(points2)
    if closure(ctx, p1) != p1:
        raise NotClosed("first set is not closed")
    if closure(ctx, p2) != p2:
        raise NotClosed("second set is not closed")
    f1, f2 = minimal_poly(ctx, p1), minimal_poly(ctx, p2)
    lc = llcm(f1, f2)
    gc = grcd(f1, f2)
    if lc != minimal_poly(ctx, set(p1) | set(p2)):
        raise AssertionError("llcm does not match the union's minimal polynomial")
    if gc != minimal_poly(ctx, set(p1) & set(p2)):
        raise AssertionError("grcd does not match the intersection's minimal polynomial")
    if lc.degree != f1.degree + f2.degree - gc.degree:
        raise AssertionError("degree identity violated")
    return lc, gc
