import itertools
import random

import pytest

from skewmatroid import (
    BadDegreeDivisibility,
    DivisionByZero,
    FieldTooLarge,
    GcdViolation,
    NonPrimeP,
    NonPrimitiveModpoly,
    ONE,
    ParseError,
    ZERO,
    field_from_spec,
    get_field,
)
from skewmatroid.field import kernel, mat_rank, mat_vec, rref, span_vectors


# ---------------------------------------------------------------- oracle
#
# Independent route to the default modulus: plain digit arithmetic, no
# discrete-log tables.  A candidate encodes a monic polynomial in base p;
# it is the default iff it is the smallest one under which x has
# multiplicative order exactly p^n - 1.

def _digits_of(value: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(value % p)
        value //= p
    return out


def _naive_default_modpoly(p: int, n: int) -> int:
    base = p**n
    for cand in range(base + 1, 2 * base):
        if cand % p == 0:
            continue
        mod = _digits_of(cand, p, n + 1)
        cur = [0] * n
        cur[1 % n] = 1
        if n == 1:
            cur = [(-mod[0]) % p]
        seen = 1
        ok = True
        while cur != [1] + [0] * (n - 1):
            # multiply by x, reduce by the monic modulus
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                for j in range(n):
                    cur[j] = (cur[j] - lead * mod[j]) % p
            seen += 1
            if all(c == 0 for c in cur) or seen > base:
                ok = False
                break
        if ok and seen == base - 1:
            return cand
    raise AssertionError("no primitive polynomial found")


@pytest.mark.parametrize(
    "p,n", [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2)]
)
def test_default_modpoly_matches_ascending_scan(p, n):
    ctx = get_field(p, n, 1, 1)
    assert ctx.modpoly == _naive_default_modpoly(p, n)


def test_pinned_default_moduli():
    # frozen from the ascending-scan oracle above
    assert get_field(2, 2, 1, 1).modpoly == 7
    assert get_field(2, 3, 1, 1).modpoly == 11
    assert get_field(2, 4, 2, 1).modpoly == 19
    assert get_field(2, 5, 1, 1).modpoly == 37
    assert get_field(2, 6, 1, 1).modpoly == 67
    assert get_field(3, 2, 1, 1).modpoly == 14


# ------------------------------------------------------------ construction


def test_construction_errors():
    with pytest.raises(NonPrimeP):
        get_field(4, 2, 1, 1)
    with pytest.raises(NonPrimeP):
        get_field(1, 2, 1, 1)
    with pytest.raises(BadDegreeDivisibility):
        get_field(2, 4, 3, 1)
    with pytest.raises(GcdViolation):
        get_field(2, 4, 1, 2)  # gcd(s, m) = 2
    with pytest.raises(FieldTooLarge):
        get_field(2, 21, 1, 1)
    with pytest.raises(NonPrimitiveModpoly):
        get_field(2, 4, 2, 1, 31)  # irreducible but of order 5
    with pytest.raises(NonPrimitiveModpoly):
        get_field(2, 4, 2, 1, 20)  # divisible by x
    with pytest.raises(NonPrimitiveModpoly):
        get_field(2, 4, 2, 1, 3)  # not monic of degree n


def test_context_attributes(f16):
    assert (f16.p, f16.n, f16.k, f16.s) == (2, 4, 2, 1)
    assert (f16.q, f16.m, f16.order) == (4, 2, 16)
    assert f16.class_size == 5
    assert f16.subfield_elements == (ZERO, 0, 5, 10)
    assert f16.basis == (0, 1)
    assert f16.spec_string() == "2,4,2,1,19"
    assert f16.modpoly_string() == "x^4 + x + 1"


def test_cache_normalizes_default_modpoly():
    assert get_field(2, 4, 2, 1) is get_field(2, 4, 2, 1, 19)
    assert get_field(2, 2, 1, 1) is get_field(2, 2, 1, 1, 7)
    other = get_field(2, 4, 2, 1, 25)
    assert other is not get_field(2, 4, 2, 1) and other.modpoly == 25


# ------------------------------------------------- arithmetic vs digit oracle
#
# Rebuild the log <-> digit-vector correspondence by naive multiplication,
# then check every operation against componentwise digit arithmetic.

def _digit_tables(ctx):
    mod = _digits_of(ctx.modpoly, ctx.p, ctx.n + 1)
    value = [0] * ctx.n
    value[0] = 1
    table = []
    for _ in range(ctx.order - 1):
        table.append(tuple(value))
        lead = value[-1]
        value = [0] + value[:-1]
        if lead:
            for j in range(ctx.n):
                value[j] = (value[j] - lead * mod[j]) % ctx.p
    return table


@pytest.mark.parametrize("spec", ["2,4,2,1", "3,2,1,1"])
def test_arithmetic_against_digit_oracle(spec):
    ctx = field_from_spec(spec)
    table = _digit_tables(ctx)
    zero_vec = tuple([0] * ctx.n)

    def vec_of(a):
        return zero_vec if a == ZERO else table[a]

    def log_of(vec):
        return ZERO if vec == zero_vec else table.index(vec)

    els = list(ctx.elements())
    for a in els:
        for b in els:
            want = tuple((x + y) % ctx.p for x, y in zip(vec_of(a), vec_of(b)))
            assert ctx.add(a, b) == log_of(want)
            if a == ZERO or b == ZERO:
                assert ctx.mul(a, b) == ZERO
            else:
                assert ctx.mul(a, b) == (a + b) % (ctx.order - 1)
        want = tuple((-x) % ctx.p for x in vec_of(a))
        assert ctx.neg(a) == log_of(want)
        if a != ZERO:
            assert ctx.mul(a, ctx.inv(a)) == ONE
            assert ctx.pow(a, ctx.order - 1) == ONE


def test_division_and_pow_edge_cases(f16):
    with pytest.raises(DivisionByZero):
        f16.inv(ZERO)
    with pytest.raises(DivisionByZero):
        f16.div(ONE, ZERO)
    with pytest.raises(DivisionByZero):
        f16.pow(ZERO, -1)
    assert f16.pow(ZERO, 0) == ONE
    assert f16.pow(ZERO, 5) == ZERO
    assert f16.pow(7, 0) == ONE
    assert f16.pow(7, -1) == f16.inv(7)


# ------------------------------------------------------------- field axioms


@pytest.mark.parametrize("spec", ["2,2,1,1", "2,3,1,1", "3,2,1,1", "2,4,2,1"])
def test_field_axioms_exhaustive_small(spec):
    ctx = field_from_spec(spec)
    els = list(ctx.elements())
    for a, b, c in itertools.product(els, repeat=3):
        assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
    for a in els:
        assert ctx.add(a, ZERO) == a
        assert ctx.mul(a, ONE) == a
        assert ctx.add(a, ctx.neg(a)) == ZERO
        for b in els:
            assert ctx.add(a, b) == ctx.add(b, a)
            assert ctx.mul(a, b) == ctx.mul(b, a)


@pytest.mark.parametrize("spec", ["2,6,1,1", "2,8,2,1", "3,4,2,1", "5,2,1,1", "2,8,4,1"])
def test_field_axioms_larger(spec):
    ctx = field_from_spec(spec)
    els = list(ctx.elements())
    rng = random.Random(spec)
    for a in els:
        assert ctx.add(a, ZERO) == a and ctx.mul(a, ONE) == a
        assert ctx.add(a, ctx.neg(a)) == ZERO
        if a != ZERO:
            assert ctx.mul(a, ctx.inv(a)) == ONE
    for _ in range(4000):
        a, b, c = (rng.choice(els) for _ in range(3))
        assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
        assert ctx.add(a, b) == ctx.add(b, a)


# --------------------------------------------------------- frobenius, brackets


@pytest.mark.parametrize("spec", ["2,4,2,1", "3,2,1,1", "2,5,1,2"])
def test_frobenius_is_subfield_linear(spec):
    ctx = field_from_spec(spec)
    els = list(ctx.elements())
    for j in range(2 * ctx.m):
        for a in els:
            for b in els:
                assert ctx.frobenius(ctx.add(a, b), j) == ctx.add(
                    ctx.frobenius(a, j), ctx.frobenius(b, j)
                )
        for c in ctx.subfield_elements:
            for a in els:
                assert ctx.frobenius(ctx.mul(c, a), j) == ctx.mul(c, ctx.frobenius(a, j))
    for a in els:
        assert ctx.frobenius(a, ctx.m) == a  # full twist is the identity


@pytest.mark.parametrize("spec", ["2,4,2,1", "3,2,1,1", "2,5,1,2"])
def test_bracket_identities(spec):
    ctx = field_from_spec(spec)
    for i in range(2 * ctx.m + 1):
        for j in range(2 * ctx.m + 1):
            assert ctx.bracket(i) * ctx.bracket(j) == ctx.bracket(i + j)
            assert ctx.dbracket(i) + ctx.bracket(i) * ctx.dbracket(j) == ctx.dbracket(i + j)
        assert ctx.dbracket(i) + ctx.bracket(i) == ctx.dbracket(i + 1)
    assert ctx.bracket(0) == 1 and ctx.dbracket(0) == 0
    for a in ctx.elements():
        assert ctx.pow(a, ctx.bracket(0)) == a
        for i in range(2 * ctx.m + 1):
            assert ctx.pow(a, ctx.bracket(i)) == ctx.pow(a, ctx.bracket(i % ctx.m))
            assert ctx.pow(a, ctx.bracket(i)) == ctx.frobenius(a, i)


def test_bracket_exactness_large():
    # values too big for floats must still be exact integers
    ctx = get_field(2, 20, 1, 1)
    assert ctx.bracket(60) == 2**60
    assert ctx.dbracket(60) == 2**60 - 1


# ----------------------------------------------------------- coords, parsing


@pytest.mark.parametrize("spec", ["2,4,2,1", "3,2,1,1", "2,6,1,1", "2,5,1,2", "3,3,1,2"])
def test_coords_roundtrip(spec):
    ctx = field_from_spec(spec)
    for a in ctx.elements():
        v = ctx.coords(a)
        assert len(v) == ctx.m
        assert all(x in ctx.subfield_elements for x in v)
        assert ctx.uncoords(v) == a
    # uncoords is the basis expansion
    for a in ctx.elements():
        v = ctx.coords(a)
        acc = ZERO
        for j, c in enumerate(v):
            acc = ctx.add(acc, ctx.mul(c, ctx.basis[j]))
        assert acc == a


def test_coords_subfield_linear(f16):
    els = list(f16.elements())
    for c in f16.subfield_elements:
        for a in els:
            want = [f16.mul(c, x) for x in f16.coords(a)]
            assert f16.coords(f16.mul(c, a)) == want


def test_in_subfield(f16):
    members = {a for a in f16.elements() if f16.in_subfield(a)}
    assert members == set(f16.subfield_elements)


def test_parse_format_roundtrip(f16):
    for a in f16.elements():
        assert f16.parse_element(f16.format_element(a)) == a
    assert f16.parse_element("g20") == 20 % 15
    assert f16.parse_element(" g3 ") == 3  # surrounding whitespace tolerated
    for bad in ("", "g", "gg3", "2", "x", "g-1"):
        with pytest.raises(ParseError):
            f16.parse_element(bad)


def test_field_from_spec_errors():
    for bad in ("2,4", "2,4,2", "a,b,c,d", "2,4,2,1,19,3", "", "2;4;2;1"):
        with pytest.raises(ParseError):
            field_from_spec(bad)
    assert field_from_spec(" 2, 4, 2, 1 ") is get_field(2, 4, 2, 1)


def test_canonical_element_order(f16):
    els = list(f16.elements())
    assert els[0] == ZERO and els[1] == ONE
    assert els == sorted(els)


# ------------------------------------------------------------ linear algebra


@pytest.mark.parametrize("spec", ["2,4,2,1", "3,2,1,1"])
def test_rref_kernel_properties(spec):
    ctx = field_from_spec(spec)
    rng = random.Random(spec)
    els = list(ctx.subfield_elements)
    for trial in range(60):
        nr, nc = rng.randint(1, 4), rng.randint(1, 5)
        mat = [[rng.choice(els) for _ in range(nc)] for _ in range(nr)]
        red, rank, pivots = rref(ctx, mat)
        again, rank2, pivots2 = rref(ctx, red)
        assert again == red and rank2 == rank and pivots2 == pivots
        assert rank == mat_rank(ctx, mat) and len(pivots) == rank
        ker = kernel(ctx, mat)
        assert len(ker) == nc - rank
        for vec in ker:
            assert mat_vec(ctx, mat, vec) == [ZERO] * nr


def test_span_vectors(f16):
    rows = [f16.coords(ONE), f16.coords(3)]
    vectors = list(span_vectors(f16, rows))
    assert len(vectors) == f16.q ** 2
    assert len({tuple(v) for v in vectors}) == f16.q ** 2
    assert [ZERO] * f16.m in vectors
