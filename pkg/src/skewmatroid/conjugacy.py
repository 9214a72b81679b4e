"""Conjugacy classes of the twist and the warp map that indexes them.

warp(a) = sigma(a)/a = a^(q^s - 1) is multiplicative, kills F_q*, and its
image is the class of 1; conjugating a by c multiplies a by warp(c).  The
nonzero elements split into q-1 classes C(g^l), l = 0..q-2, each of size
(q^m - 1)/(q - 1), and the class does not depend on which power of the
Frobenius is used as the twist.  class_of recovers l by one exponentiation
plus a small table lookup; the unwarp functions invert warp inside a class,
either through the kernel of a linearized map or by a single exponentiation
when the class size is coprime to q^s - 1.
"""

from __future__ import annotations

import functools
import math

from .errors import InapplicableField, WrongClass, ZeroArgument, ZeroConjugator
from .field import Fe, FieldCtx, ONE, ZERO, kernel

# A class id is None for the class of zero, else l in 0..q-2 (the class of g^l).
ClassId = int | None


def warp(ctx: FieldCtx, a: Fe) -> Fe:
    """sigma(a)/a = a^(q^s - 1); undefined at zero."""
    if a == ZERO:
        raise ZeroArgument("warp is undefined at zero")
    return ctx.pow(a, ctx.q**ctx.s - 1)


def conjugate(ctx: FieldCtx, a: Fe, c: Fe) -> Fe:
    """a conjugated by c: a * warp(c).  Zero is fixed by conjugation."""
    if c == ZERO:
        raise ZeroConjugator("conjugation by zero is undefined")
    if a == ZERO:
        return ZERO
    return ctx.mul(a, warp(ctx, c))


@functools.lru_cache(maxsize=None)
def _class_lookup(ctx: FieldCtx) -> dict[Fe, int]:
    # l-th class representative g^l raised to the class size, for each l
    N = ctx.order - 1
    return {(ell * ctx.class_size) % N: ell for ell in range(ctx.q - 1)}


def class_of(ctx: FieldCtx, a: Fe) -> ClassId:
    """The class index of a: None for zero, else l with a in C(g^l).

    Raising a to the class size collapses the warp factor (it becomes a
    (q^m - 1)-th power), leaving a value in F_q* that pins down l.
    """
    if a == ZERO:
        return None
    v = ctx.pow(a, ctx.class_size)
    return _class_lookup(ctx)[v]


def class_elements(ctx: FieldCtx, ell: int) -> tuple[Fe, ...]:
    """C(g^l) in canonical order: logs l, l+(q-1), l+2(q-1), ..."""
    ell = ell % (ctx.q - 1)
    return tuple(ell + j * (ctx.q - 1) for j in range(ctx.class_size))


def class_invariance_holds(ctx: FieldCtx, a: Fe) -> bool:
    """Check by enumeration that conjugating by every nonzero c yields the
    same set whether the twist uses the context's s or s = 1."""
    if a == ZERO:
        return True
    with_s = {ctx.mul(a, ctx.pow(c, ctx.q**ctx.s - 1)) for c in ctx.nonzero_elements()}
    with_1 = {ctx.mul(a, ctx.pow(c, ctx.q - 1)) for c in ctx.nonzero_elements()}
    return with_s == with_1


def unwarp_method1(ctx: FieldCtx, alpha: Fe, ell: int) -> Fe:
    """Solve g^l * warp(a) = alpha for a via the kernel of the F_q-linear map
    v -> v^(q^s) - beta*v, beta = alpha/g^l.  The kernel is one-dimensional;
    the representative with the smallest discrete log is returned."""
    ell = ell % (ctx.q - 1)
    if class_of(ctx, alpha) != ell:
        raise WrongClass(f"element is not in class {ell}")
    beta = ctx.div(alpha, ell)  # g^l has log l
    cols = []
    for b in ctx.basis:
        w = ctx.sub(ctx.frobenius(b, 1), ctx.mul(beta, b))
        cols.append(ctx.coords(w))
    mat = [[cols[j][r] for j in range(ctx.m)] for r in range(ctx.m)]
    basis = kernel(ctx, mat)
    if len(basis) != 1:  # pragma: no cover - guaranteed by the class check
        raise WrongClass(f"kernel dimension {len(basis)}, expected 1")
    a0 = ctx.uncoords(basis[0])
    return min(ctx.mul(c, a0) for c in ctx.subfield_elements[1:])


def unwarp_method2(ctx: FieldCtx, alpha: Fe, ell: int) -> Fe:
    """Solve g^l * warp(a) = alpha by one exponentiation: a = beta^t with
    (q^s - 1) t = 1 mod class size.  Needs those to be coprime."""
    e = ctx.q**ctx.s - 1
    if math.gcd(e, ctx.class_size) != 1:
        raise InapplicableField(
            f"gcd({ctx.class_size}, {e}) != 1; exponentiation cannot invert warp"
        )
    ell = ell % (ctx.q - 1)
    if class_of(ctx, alpha) != ell:
        raise WrongClass(f"element is not in class {ell}")
    t = pow(e, -1, ctx.class_size)
    return ctx.pow(ctx.div(alpha, ell), t)


@functools.lru_cache(maxsize=None)
def unwarp(ctx: FieldCtx, alpha: Fe, ell: int) -> Fe:
    """Canonical (deterministic) warp inverse within a class."""
    return unwarp_method1(ctx, alpha, ell)


def class_label(ctx: FieldCtx, cid: ClassId) -> str:
    """Class name for display: C(0), C(1), C(g1), ..."""
    if cid is None:
        return "C(0)"
    return f"C({ctx.format_element(cid % (ctx.q - 1))})"
