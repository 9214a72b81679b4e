"""Finite field contexts with table-driven arithmetic over a distinguished subfield.

A :class:`FieldCtx` describes F = F_{p^n} together with the subfield F_q,
q = p^k (so F = F_{q^m}, m = n/k), and the automorphism sigma(a) = a^{q^s}.
Nonzero elements are stored as the discrete log of a fixed generator g (a
root of the modulus polynomial), so multiplication, inversion and powering
are integer arithmetic mod p^n - 1; addition is one lookup in a precomputed
table of logs of g^i + 1.

The module also provides Gaussian elimination over the subfield, operating
on plain lists of elements, which is all the linear algebra the rest of the
package needs.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator

from .errors import (
    BadDegreeDivisibility,
    DivisionByZero,
    FieldTooLarge,
    GcdViolation,
    NonPrimeP,
    NonPrimitiveModpoly,
    ParseError,
)

# A field element is an int: ZERO, or the discrete log (0 .. order-2) of the
# generator.  Sorting ints therefore gives the canonical element order used
# throughout: zero first, then ascending log.
Fe = int
ZERO: Fe = -1
ONE: Fe = 0

MAX_ORDER = 1 << 20


def _is_prime(v: int) -> bool:
    if v < 2:
        return False
    d = 2
    while d * d <= v:
        if v % d == 0:
            return False
        d += 1
    return True


def _digits(value: int, p: int, width: int) -> list[int]:
    # base-p digits, least significant (x^0 coefficient) first
    out = []
    for _ in range(width):
        value, r = divmod(value, p)
        out.append(r)
    return out


def _padd(a: int, b: int, p: int, width: int) -> int:
    if p == 2:
        return a ^ b
    da, db = _digits(a, p, width), _digits(b, p, width)
    out = 0
    for j in range(width - 1, -1, -1):
        out = out * p + (da[j] + db[j]) % p
    return out


def _mul_by_x(value: int, p: int, n: int, modpoly: int) -> int:
    # multiply a residue of degree < n by x and reduce mod the monic modulus
    shifted = value * p
    lead = shifted // p**n
    if lead == 0:
        return shifted
    if p == 2:
        return shifted ^ modpoly
    ds = _digits(shifted, p, n + 1)
    dm = _digits(modpoly, p, n + 1)
    out = 0
    for j in range(n - 1, -1, -1):
        out = out * p + (ds[j] - lead * dm[j]) % p
    return out


def _build_tables(p: int, n: int, modpoly: int) -> tuple[list[int], list[int]] | None:
    """Log/antilog tables for F_p[x]/(modpoly), or None if x does not have
    multiplicative order p^n - 1 there (i.e. modpoly is not primitive)."""
    order = p**n
    if modpoly % p == 0:  # constant term zero: x is a zero divisor
        return None
    antilog = [0] * (order - 1)
    log = [-1] * order
    x = 1
    for i in range(order - 1):
        if x == 0 or log[x] != -1:
            return None
        antilog[i] = x
        log[x] = i
        x = _mul_by_x(x, p, n, modpoly)
    if x != 1:
        return None
    return antilog, log


class FieldCtx:
    """Immutable context for F_{q^m} over F_q with twist sigma(a) = a^{q^s}."""

    def __init__(self, p: int, n: int, k: int, s: int, modpoly: int | None = None):
        if not _is_prime(p):
            raise NonPrimeP(f"p must be prime, got {p}")
        if n < 1 or k < 1 or n % k != 0:
            raise BadDegreeDivisibility(f"need 1 <= k | n, got n={n}, k={k}")
        if p**n > MAX_ORDER:
            raise FieldTooLarge(f"p^n = {p**n} exceeds the cap of {MAX_ORDER}")
        m = n // k
        if math.gcd(s, m) != 1:
            raise GcdViolation(f"gcd(s, m) must be 1, got s={s}, m={m}")

        self.p = p
        self.n = n
        self.k = k
        self.s = s
        self.q = p**k
        self.m = m
        self.order = p**n

        if modpoly is None:
            modpoly, tables = self._search_modpoly()
        else:
            if not p**n <= modpoly < 2 * p**n:
                raise NonPrimitiveModpoly(
                    f"modpoly {modpoly} is not monic of degree {n} over F_{p}"
                )
            tables = _build_tables(p, n, modpoly)
            if tables is None:
                raise NonPrimitiveModpoly(f"modpoly {modpoly} is not primitive")
        self.modpoly = modpoly
        self._antilog, self._log = tables

        N = self.order - 1
        one_packed = 1
        self._zech = [0] * N
        for i in range(N):
            t = _padd(self._antilog[i], one_packed, p, n)
            self._zech[i] = self._log[t] if t else ZERO

        # number of F_q*-cosets in F*, also the size of every nonzero
        # conjugacy class and the log stride of the subfield
        self.class_size = N // (self.q - 1) if self.q > 1 else N
        self.subfield_elements: tuple[Fe, ...] = (ZERO,) + tuple(
            j * self.class_size for j in range(self.q - 1)
        )
        self.basis: tuple[Fe, ...] = tuple(range(m)) if N > 0 else (ONE,)
        # sigma^j multiplies logs by q^(js mod m)
        self._frob = tuple(self.q ** ((j * s) % m) % N if N > 1 else 0 for j in range(m))
        self._init_coords()

    # -- construction helpers -------------------------------------------------

    def _search_modpoly(self) -> tuple[int, tuple[list[int], list[int]]]:
        # smallest integer encoding = lexicographically smallest coefficient
        # vector (degree n downwards), restricted to monic candidates
        base = self.p**self.n
        for c in range(base + 1, 2 * base):
            if c % self.p == 0:
                continue
            tables = _build_tables(self.p, self.n, c)
            if tables is not None:
                return c, tables
        raise NonPrimitiveModpoly("no primitive polynomial found")  # pragma: no cover

    def _init_coords(self) -> None:
        # product basis gamma^j * w^t (w generates F_q*) expressed in the
        # F_p power basis of the modulus; its inverse turns packed digit
        # vectors into F_q coordinates w.r.t. self.basis
        p, n, k, m = self.p, self.n, self.k, self.m
        self._sub_gen_pows = tuple((t * self.class_size) % (self.order - 1) for t in range(k))
        cols = []
        for j in range(m):
            for t in range(k):
                fe = self.mul(self.basis[j], self._sub_gen_pows[t])
                cols.append(_digits(self._antilog[fe], p, n))
        P = [[self._fe_of_digit(cols[c][r]) for c in range(n)] for r in range(n)]
        aug = [P[r] + [ONE if r == c else ZERO for c in range(n)] for r in range(n)]
        R, rk, _ = rref(self, aug)
        if rk != n:  # pragma: no cover - product basis is always a basis
            raise NonPrimitiveModpoly("basis change is singular")
        self._coords_inv = [row[n:] for row in R]

    def _fe_of_digit(self, d: int) -> Fe:
        # a base-p digit names the constant polynomial d, whose packed value is d
        return self._log[d] if d else ZERO

    # -- element arithmetic ----------------------------------------------------

    def add(self, a: Fe, b: Fe) -> Fe:
        if a == ZERO:
            return b
        if b == ZERO:
            return a
        N = self.order - 1
        z = self._zech[(b - a) % N]
        return ZERO if z == ZERO else (a + z) % N

    def neg(self, a: Fe) -> Fe:
        if a == ZERO or self.p == 2:
            return a
        return (a + (self.order - 1) // 2) % (self.order - 1)

    def sub(self, a: Fe, b: Fe) -> Fe:
        return self.add(a, self.neg(b))

    def mul(self, a: Fe, b: Fe) -> Fe:
        if a == ZERO or b == ZERO:
            return ZERO
        return (a + b) % (self.order - 1)

    def inv(self, a: Fe) -> Fe:
        if a == ZERO:
            raise DivisionByZero("inverse of zero")
        return (-a) % (self.order - 1)

    def div(self, a: Fe, b: Fe) -> Fe:
        return self.mul(a, self.inv(b))

    def pow(self, a: Fe, e: int) -> Fe:
        """a**e with the convention 0**0 = 1; e may be any integer (and is
        taken mod p^n - 1 for nonzero a)."""
        if a == ZERO:
            if e == 0:
                return ONE
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return ZERO
        return (a * e) % (self.order - 1)

    def frobenius(self, a: Fe, j: int = 1) -> Fe:
        """sigma^j(a) = a^(q^(js))."""
        if a == ZERO:
            return ZERO
        return (a * self._frob[j % self.m]) % (self.order - 1)

    def bracket(self, i: int) -> int:
        """q^(i*s): the exponent through which sigma^i acts, exact."""
        if i < 0:
            raise ValueError("bracket index must be >= 0")
        return self.q ** (i * self.s)

    def dbracket(self, i: int) -> int:
        """(q^(i*s) - 1) / (q^s - 1): geometric-series exponent, exact."""
        if i < 0:
            raise ValueError("dbracket index must be >= 0")
        return (self.q ** (i * self.s) - 1) // (self.q**self.s - 1)

    # -- subfield and coordinates ----------------------------------------------

    def in_subfield(self, a: Fe) -> bool:
        return a == ZERO or a % self.class_size == 0

    def coords(self, a: Fe) -> list[Fe]:
        """F_q-coordinates of a with respect to self.basis."""
        d = _digits(0 if a == ZERO else self._antilog[a], self.p, self.n)
        dvec = [self._fe_of_digit(x) for x in d]
        y = mat_vec(self, self._coords_inv, dvec)
        out = []
        for j in range(self.m):
            c = ZERO
            for t in range(self.k):
                c = self.add(c, self.mul(y[j * self.k + t], self._sub_gen_pows[t]))
            out.append(c)
        return out

    def uncoords(self, v: Iterable[Fe]) -> Fe:
        acc = ZERO
        for j, c in enumerate(v):
            acc = self.add(acc, self.mul(c, self.basis[j]))
        return acc

    # -- iteration, parsing, printing -------------------------------------------

    def elements(self) -> Iterator[Fe]:
        yield ZERO
        yield from range(self.order - 1)

    def nonzero_elements(self) -> Iterator[Fe]:
        yield from range(self.order - 1)

    def parse_element(self, text: str) -> Fe:
        t = text.strip()
        if t == "0":
            return ZERO
        if t == "1":
            return ONE
        if t.startswith("g") and t[1:].isdigit():
            return int(t[1:]) % (self.order - 1)
        raise ParseError(f"bad element token {text!r}")

    def format_element(self, a: Fe) -> str:
        if a == ZERO:
            return "0"
        if a == ONE:
            return "1"
        return f"g{a}"

    def spec_string(self) -> str:
        return f"{self.p},{self.n},{self.k},{self.s},{self.modpoly}"

    def modpoly_string(self) -> str:
        """The modulus as a polynomial in x over F_p."""
        terms = []
        for j in range(self.n, -1, -1):
            c = (self.modpoly // self.p**j) % self.p
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                xp = "x" if j == 1 else f"x^{j}"
                terms.append(xp if c == 1 else f"{c}*{xp}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"FieldCtx({self.p},{self.n},{self.k},{self.s},modpoly={self.modpoly})"


_FIELD_CACHE: dict[tuple[int, int, int, int, int | None], FieldCtx] = {}


def get_field(p: int, n: int, k: int, s: int, modpoly: int | None = None) -> FieldCtx:
    """Cached context lookup.  Omitting the modulus and naming the default one
    explicitly yield the same object, so values from either interoperate."""
    key = (p, n, k, s, modpoly)
    ctx = _FIELD_CACHE.get(key)
    if ctx is None:
        ctx = FieldCtx(p, n, k, s, modpoly)
        ctx = _FIELD_CACHE.setdefault((p, n, k, s, ctx.modpoly), ctx)
        _FIELD_CACHE[key] = ctx
    return ctx


def field_from_spec(text: str) -> FieldCtx:
    """Parse "p,n,k,s[,modpoly]" into a (cached) field context."""
    parts = [t.strip() for t in text.split(",")]
    if len(parts) not in (4, 5) or not all(t.lstrip("-").isdigit() for t in parts):
        raise ParseError(f"bad field spec {text!r}; expected p,n,k,s[,modpoly]")
    nums = [int(t) for t in parts]
    return get_field(*nums)


# -- linear algebra over the subfield -----------------------------------------
#
# Matrices are lists of rows; entries are Fe values assumed to lie in F_q.

def rref(ctx: FieldCtx, rows: list[list[Fe]]) -> tuple[list[list[Fe]], int, list[int]]:
    """Reduced row echelon form; returns (matrix, rank, pivot columns)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c] != ZERO), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = ctx.inv(m[r][c])
        m[r] = [ctx.mul(inv, x) for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != ZERO:
                f = m[i][c]
                m[i] = [ctx.sub(m[i][j], ctx.mul(f, m[r][j])) for j in range(ncols)]
        pivots.append(c)
        r += 1
    return m, len(pivots), pivots


def mat_rank(ctx: FieldCtx, rows: list[list[Fe]]) -> int:
    return rref(ctx, rows)[1]


def kernel(ctx: FieldCtx, rows: list[list[Fe]]) -> list[list[Fe]]:
    """Basis vectors v with M v = 0 (one per free column of the rref)."""
    ncols = len(rows[0]) if rows else 0
    R, _, pivots = rref(ctx, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = ctx.neg(R[i][fc])
        basis.append(v)
    return basis


def mat_vec(ctx: FieldCtx, rows: list[list[Fe]], v: list[Fe]) -> list[Fe]:
    out = []
    for row in rows:
        acc = ZERO
        for a, b in zip(row, v):
            acc = ctx.add(acc, ctx.mul(a, b))
        out.append(acc)
    return out


def span_vectors(ctx: FieldCtx, rows: list[list[Fe]]) -> Iterator[list[Fe]]:
    """Every F_q-combination of the given vectors (including zero)."""
    if not rows:
        yield []
        return
    width = len(rows[0])
    combos = [[ZERO] * width]
    for row in rows:
        nxt = []
        for c in ctx.subfield_elements:
            scaled = [ctx.mul(c, x) for x in row]
            for v in combos:
                nxt.append([ctx.add(a, b) for a, b in zip(v, scaled)])
        combos = nxt
    yield from combos
