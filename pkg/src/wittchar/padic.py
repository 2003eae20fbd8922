"""Exact arithmetic in Z_q = W(F_{p^a}) modulo p^N.

A context fixes an odd prime p, an extension degree a, a working precision
N and a monic degree-a modulus whose reduction mod p is irreducible; the
ring is Z/p^N[x]/(modulus) on the power basis 1, x, ..., x^(a-1).

Elements carry an absolute precision `prec <= N`: the coordinates are the
known residues mod p^prec.  Ring operations propagate precision with the
usual ultrametric rules; only explicit divisions by p consume digits.
Operations that are mathematically exact (Teichmueller lifts, traces,
logarithms of 1-units, (1+p)-powers) are computed with internally boosted
precision so their public results are exact mod p^prec of the input.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from . import ffield
from .ffield import FqElement, fq_context


class PrecisionError(ArithmeticError):
    """A division by p was requested on digits that are not there."""


class NotOneUnit(ValueError):
    """An operand had to be congruent to 1 mod p but was not."""


def int_valuation(n: int, p: int, cap: int) -> int:
    """v_p(n) truncated at cap; cap means 'at least cap'."""
    if n == 0:
        return cap
    v = 0
    while v < cap and n % p == 0:
        n //= p
        v += 1
    return v


@functools.lru_cache(maxsize=None)
def _context(p, a, N, modulus):
    return PadicContext(p, a, N, modulus, _internal=True)


def padic_context(p: int, a: int, N: int, modulus=None) -> "PadicContext":
    """Shared constructor; equal parameters yield the identical context.

    The default modulus is the lexicographically smallest monic irreducible
    of degree a over F_p, with coefficients lifted as the integers 0..p-1,
    so the same context is reproducible at every precision.
    """
    if modulus is None:
        modulus = ffield.smallest_irreducible(p, a)
    modulus = tuple(int(c) for c in modulus)
    return _context(p, a, N, modulus)


class PadicContext:

    def __init__(self, p, a, N, modulus, _internal=False):
        if not _internal:
            raise TypeError("use padic_context()")
        if p == 2 or not ffield.is_prime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        if a < 1 or N < 1:
            raise ValueError("need a >= 1 and N >= 1")
        if len(modulus) != a + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree a")
        if not ffield.fp_monic_irreducible([c % p for c in modulus], p):
            raise ffield.ReducibleError("modulus is reducible mod p")
        self.p = p
        self.a = a
        self.N = N
        self.pN = p ** N
        self.modulus = tuple(c % self.pN for c in modulus)
        self._cache = {}

    def __repr__(self):
        return f"PadicContext(p={self.p}, a={self.a}, N={self.N})"

    @property
    def q(self):
        return self.p ** self.a

    def at_precision(self, M: int) -> "PadicContext":
        """The same ring seen mod p^M, reusing the canonical modulus lift."""
        if M == self.N:
            return self
        return padic_context(self.p, self.a, M, self.modulus)

    def residue_field(self):
        return fq_context(self.p, self.a, [c % self.p for c in self.modulus])

    def prime_context(self):
        return padic_context(self.p, 1, self.N)

    # -- element constructors ------------------------------------------------

    def element(self, coords, prec=None) -> "PadicElement":
        prec = self.N if prec is None else prec
        if not 0 <= prec <= self.N:
            raise ValueError(f"prec {prec} outside [0, {self.N}]")
        pm = self.p ** prec
        coords = tuple(int(c) % pm for c in coords)
        if len(coords) != self.a:
            raise ValueError("coordinate length mismatch")
        return PadicElement(self, coords, prec)

    def zero(self):
        return self.element((0,) * self.a)

    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        return self.element((n,) + (0,) * (self.a - 1))

    def gen(self):
        """The class of x (for a = 1 this is the root of the linear modulus)."""
        if self.a == 1:
            return self.from_int(-self.modulus[0])
        return self.element((0, 1) + (0,) * (self.a - 2))

    # -- raw coordinate arithmetic -------------------------------------------

    def _mul_coords(self, u, v, pm):
        a, mod = self.a, self.modulus
        if a == 1:
            return ((u[0] * v[0]) % pm,)
        conv = [0] * (2 * a - 1)
        for i, x in enumerate(u):
            if x:
                for j, y in enumerate(v):
                    conv[i + j] += x * y
        for e in range(2 * a - 2, a - 1, -1):
            c = conv[e] % pm
            if c:
                for t in range(a):
                    conv[e - a + t] -= c * mod[t]
            conv[e] = 0
        return tuple(c % pm for c in conv[:a])

    # -- Frobenius and trace ---------------------------------------------------

    def _frob_images(self):
        """Coordinates of sigma(x^i) for i < a, where sigma fixes Z_p and
        reduces to the p-power map; computed once by Newton-lifting the
        root of the modulus that is congruent to x^p mod p."""
        if "frob" in self._cache:
            return self._cache["frob"]
        if self.a == 1:
            images = [(1 % self.pN,)]
            self._cache["frob"] = images
            return images
        y = self.gen() ** self.p
        steps = max(1, self.N.bit_length() + 1)
        for _ in range(steps):
            my = _eval_int_poly(self.modulus, y)
            dy = _eval_int_poly(_derivative(self.modulus), y)
            y = y - my * dy.inverse()
        assert _eval_int_poly(self.modulus, y).is_zero()
        images = [self.one().coords]
        cur = self.one()
        for _ in range(1, self.a):
            cur = cur * y
            images.append(cur.coords)
        self._cache["frob"] = images
        return images

    def _apply_frob(self, coords, pm):
        images = self._frob_images()
        out = [0] * self.a
        for i, c in enumerate(coords):
            if c:
                img = images[i]
                for t in range(self.a):
                    out[t] += c * img[t]
        return tuple(v % pm for v in out)

    def trace_row(self):
        """Integers Tr(x^i) mod p^N for i < a."""
        if "trace_row" not in self._cache:
            row = []
            for i in range(self.a):
                acc = self.gen() ** i
                cur = acc
                for _ in range(1, self.a):
                    cur = cur.frobenius()
                    acc = acc + cur
                assert all(c == 0 for c in acc.coords[1:])
                row.append(acc.coords[0])
            self._cache["trace_row"] = tuple(row)
        return self._cache["trace_row"]

    def teichmuller_generator(self):
        """Teichmueller lift of the fixed primitive root of the residue field."""
        if "teich_gen" not in self._cache:
            self._cache["teich_gen"] = teichmuller(
                self, self.residue_field().primitive_root())
        return self._cache["teich_gen"]


def _derivative(int_coeffs):
    return tuple(i * c for i, c in enumerate(int_coeffs) if i >= 1)


def _eval_int_poly(int_coeffs, x: "PadicElement"):
    acc = x.ctx.zero()
    for c in reversed(int_coeffs):
        acc = acc * x + x.ctx.from_int(c)
    return acc


class PadicElement:
    """An element of Z_q known modulo p^prec, on the power basis."""

    __slots__ = ("ctx", "coords", "prec")

    def __init__(self, ctx, coords, prec):
        self.ctx = ctx
        self.coords = coords
        self.prec = prec

    def __repr__(self):
        return f"Padic({list(self.coords)} mod {self.ctx.p}^{self.prec})"

    def __eq__(self, other):
        return (isinstance(other, PadicElement) and self.ctx is other.ctx
                and self.prec == other.prec and self.coords == other.coords)

    def __hash__(self):
        return hash((id(self.ctx), self.coords, self.prec))

    def congruent(self, other, prec=None) -> bool:
        """Equality of the digits both sides actually know (or mod p^prec)."""
        if prec is None:
            prec = min(self.prec, other.prec)
        pm = self.ctx.p ** prec
        return all((x - y) % pm == 0 for x, y in zip(self.coords, other.coords))

    def valuation(self) -> int:
        """min v_p over coordinates; equals prec when the element is 0 mod
        p^prec (read: valuation at least prec)."""
        return min(int_valuation(c, self.ctx.p, self.prec) for c in self.coords)

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_unit(self):
        return self.valuation() == 0

    def reduce_prec(self, prec):
        if prec > self.prec:
            raise PrecisionError(f"cannot raise precision {self.prec} -> {prec}")
        return self.ctx.element(self.coords, prec)

    def to_context(self, ctx2, prec=None):
        """Reinterpret in a context with the same (p, a, modulus lift)."""
        prec = min(self.prec, ctx2.N) if prec is None else prec
        return ctx2.element(self.coords, prec)

    # -- ring operations ----------------------------------------------------

    def _binary_prec(self, other):
        return min(self.prec, other.prec)

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ctx.from_int(other)
        prec = self._binary_prec(other)
        pm = self.ctx.p ** prec
        return PadicElement(self.ctx, tuple((x + y) % pm for x, y in
                                            zip(self.coords, other.coords)), prec)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ctx.from_int(other)
        prec = self._binary_prec(other)
        pm = self.ctx.p ** prec
        return PadicElement(self.ctx, tuple((x - y) % pm for x, y in
                                            zip(self.coords, other.coords)), prec)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        pm = self.ctx.p ** self.prec
        return PadicElement(self.ctx, tuple(-c % pm for c in self.coords),
                            self.prec)

    def __mul__(self, other):
        if isinstance(other, int):
            prec = min(self.prec + int_valuation(other, self.ctx.p, self.ctx.N),
                       self.ctx.N)
            pm = self.ctx.p ** prec
            return PadicElement(self.ctx,
                                tuple(c * other % pm for c in self.coords), prec)
        prec = min(self.prec + other.valuation(),
                   other.prec + self.valuation(), self.ctx.N)
        pm = self.ctx.p ** prec
        coords = self.ctx._mul_coords(self.coords, other.coords, pm)
        return PadicElement(self.ctx, coords, prec)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.ctx.one().reduce_prec(self.prec)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self):
        """Inverse of a unit, by Hensel lifting the residue-field inverse."""
        if not self.is_unit():
            raise ZeroDivisionError("inverse of a non-unit")
        ctx = self.ctx
        r = self.residue().inverse()
        x = ctx.element(r.coords, prec=self.prec)
        known = 1
        while known < self.prec:
            x = x * (2 - self * x)
            known *= 2
        return x.reduce_prec(self.prec)

    def divide_exact(self, e: int):
        """Divide by p^e, consuming e digits of absolute precision."""
        if e == 0:
            return self
        if e > self.prec:
            raise PrecisionError(f"division by p^{e} with only {self.prec} digits")
        pe = self.ctx.p ** e
        if any(c % pe for c in self.coords):
            raise PrecisionError("element not divisible by p^%d" % e)
        return PadicElement(self.ctx, tuple(c // pe for c in self.coords),
                            self.prec - e)

    # -- Galois structure ------------------------------------------------------

    def frobenius(self, j: int = 1):
        """sigma^j; sigma generates Gal(Q_q/Q_p) and reduces to y -> y^p."""
        j %= self.ctx.a
        coords = self.coords
        pm = self.ctx.p ** self.prec
        for _ in range(j):
            coords = self.ctx._apply_frob(coords, pm)
        return PadicElement(self.ctx, coords, self.prec)

    def trace(self):
        """Absolute trace to Z_p, as an element of the prime context."""
        row = self.ctx.trace_row()
        val = sum(c * t for c, t in zip(self.coords, row))
        prime = self.ctx.prime_context()
        return prime.element((val,), prec=self.prec)

    def trace_scalar(self) -> int:
        row = self.ctx.trace_row()
        return sum(c * t for c, t in zip(self.coords, row)) % (self.ctx.p ** self.prec)

    def residue(self) -> FqElement:
        return self.ctx.residue_field().element(self.coords)

    # -- serialization ---------------------------------------------------------

    def to_json(self):
        pm = self.ctx.p ** self.prec
        return {"p": self.ctx.p, "a": self.ctx.a, "N": self.prec,
                "modulus": [c % pm for c in self.ctx.modulus],
                "coeffs": list(self.coords)}

    @staticmethod
    def from_json(data):
        ctx = padic_context(data["p"], data["a"], data["N"],
                            modulus=data["modulus"])
        return ctx.element(data["coeffs"])


# ---------------------------------------------------------------------------
# Teichmueller lifts

def teichmuller(ctx: PadicContext, xbar) -> PadicElement:
    """The root-of-unity lift of a residue-field element; 0 lifts to 0.

    Iterates y -> y^q from any lift: each q-power step gains a digit per
    p-power, so ceil((N-1)/a) steps reach full precision.
    """
    if isinstance(xbar, FqElement):
        if xbar.ctx is not ctx.residue_field():
            raise ValueError("residue element from a different field")
        coords = xbar.coords
    else:
        coords = tuple(int(c) % ctx.p for c in xbar)
    y = ctx.element(coords + (0,) * (ctx.a - len(coords)))
    if y.is_zero():
        return ctx.zero()
    q = ctx.q
    steps = -(-(ctx.N - 1) // ctx.a) if ctx.N > 1 else 0
    for _ in range(steps):
        y = y ** q
    return y


# ---------------------------------------------------------------------------
# logarithm / exponential on 1-units, and (1+p)-powers

def _log_terms_needed(N, p):
    k = N
    while k - int_valuation(k, p, k) < N or k < 2:
        k += 1
    return k


@functools.lru_cache(maxsize=None)
def _log_one_plus_p_int(p: int, M: int) -> int:
    """Log(1+p) mod p^M, summed exactly over the rationals."""
    K = _log_terms_needed(M, p)
    total = Fraction(0)
    for k in range(1, K + 1):
        total += Fraction((-1) ** (k + 1) * p ** k, k)
    den = total.denominator
    assert den % p != 0
    return total.numerator * pow(den, -1, p ** M) % p ** M


def log_one_plus_p(ctx: PadicContext) -> PadicElement:
    """Log(1+p) in the prime context; a uniformizer times a unit."""
    prime = ctx.prime_context()
    return prime.element((_log_one_plus_p_int(ctx.p, ctx.N),))


def padic_log(u: PadicElement) -> PadicElement:
    """Log on 1-units, exact at the input's precision.

    The series sum_k -(-z)^k / k is evaluated in a boosted context so the
    1/k denominators do not cost public digits.
    """
    ctx = u.ctx
    one = ctx.one().reduce_prec(u.prec)
    if not (u - one).is_zero() and (u - one).valuation() < 1:
        raise NotOneUnit("padic_log needs u = 1 mod p")
    K = _log_terms_needed(ctx.N, ctx.p)
    boost = int_valuation_bound_log(K, ctx.p) + 1
    big = ctx.at_precision(ctx.N + boost)
    z = big.element(u.coords) - big.one()
    if z.valuation() < 1 and not z.is_zero():
        raise NotOneUnit("padic_log needs u = 1 mod p")
    acc = big.zero()
    zk = big.one()
    for k in range(1, K + 1):
        zk = zk * z
        e = int_valuation(k, ctx.p, boost)
        term = zk.divide_exact(e) * pow(k // ctx.p ** e, -1, big.pN)
        if k % 2 == 0:
            term = -term
        acc = acc + term
    return acc.to_context(ctx, prec=u.prec)


def int_valuation_bound_log(K, p):
    b = 0
    while p ** (b + 1) <= K:
        b += 1
    return b


def padic_exp(x: PadicElement) -> PadicElement:
    """Exp on p*Z_q (p odd), exact at the input's precision."""
    ctx = x.ctx
    if x.valuation() < 1:
        raise NotOneUnit("padic_exp needs v_p(x) >= 1")
    p = ctx.p
    K = 1
    while (K + 1) - (K) // (p - 1) - 1 < ctx.N:
        K += 1
    boost = (K // (p - 1)) + 1
    big = ctx.at_precision(ctx.N + boost)
    xl = big.element(x.coords)
    acc = big.one()
    term = big.one()
    for k in range(1, K + 1):
        e = int_valuation(k, p, boost)
        term = (term * xl).divide_exact(e) * pow(k // p ** e, -1, big.pN)
        acc = acc + term
    return acc.to_context(ctx, prec=x.prec)


def one_unit_power(r, ctx: PadicContext) -> PadicElement:
    """(1+p)^r in ctx.

    Integer and Z_p exponents use direct modular exponentiation, which is
    exact because (1+p)^(p^(N-1)) = 1 mod p^N.  Exponents in Z_q (a > 1)
    go through Exp(r * Log(1+p)); the two routes agree on scalars.
    """
    p, N = ctx.p, ctx.N
    if isinstance(r, PadicElement) and r.ctx.a > 1:
        if r.ctx.p != p:
            raise ValueError("context mismatch")
        big = ctx.at_precision(min(r.prec + 1, N))
        L = _log_one_plus_p_int(p, big.N)
        arg = big.element(r.coords, prec=big.N) * L
        return padic_exp(arg).to_context(ctx)
    if isinstance(r, PadicElement):
        prec = min(r.prec + 1, N)
        e = r.coords[0]
    else:
        prec = N
        e = int(r)
    pm = p ** prec
    val = pow(1 + p, e % (pm // p), pm)
    return ctx.from_int(val).reduce_prec(prec)


def one_unit_exponent(u: PadicElement) -> PadicElement:
    """The r in Z_p with (1+p)^r = u, for a 1-unit u in Z_p.

    Determined one digit short of the input: (1+p)^(p^(N-1)) is 1 mod p^N.
    If u = 1 mod p^n the result is divisible by p^(n-1).
    """
    if u.ctx.a != 1:
        raise ValueError("one_unit_exponent expects a Z_p element")
    w = padic_log(u)
    return divide_by_log_one_plus_p(w)


def divide_by_log_one_plus_p(x: PadicElement) -> PadicElement:
    """x / Log(1+p); costs one digit since Log(1+p) = p * unit."""
    ctx = x.ctx
    unit = _log_one_plus_p_int(ctx.p, ctx.N) // ctx.p
    y = x.divide_exact(1)
    return y * pow(unit, -1, ctx.p ** max(y.prec, 1))


# ---------------------------------------------------------------------------
# trace duality

def _solve_linear(rows, rhs, p, pm):
    """Solve A c = rhs mod pm for A with unit-pivot column reduction.

    A may have more rows than columns; the system must be consistent and
    have full column rank mod p.
    """
    n, m = len(rows), len(rows[0])
    A = [list(r) + [b] for r, b in zip(rows, rhs)]
    perm = []
    for col in range(m):
        piv = next((r for r in range(col, n)
                    if A[r][col] % p != 0 and r not in perm), None)
        if piv is None:
            piv = next((r for r in range(n)
                        if A[r][col] % p != 0 and r not in perm), None)
        if piv is None:
            raise ZeroDivisionError("matrix singular mod p")
        perm.append(piv)
        inv = pow(A[piv][col], -1, pm)
        A[piv] = [v * inv % pm for v in A[piv]]
        for r in range(n):
            if r != piv and A[r][col]:
                f = A[r][col]
                A[r] = [(v - f * w) % pm for v, w in zip(A[r], A[piv])]
    for r in range(n):
        if r not in perm and any(A[r]):
            if any(v % pm for v in A[r]):
                raise ArithmeticError("inconsistent linear system")
    sol = [0] * m
    for col, piv in enumerate(perm):
        sol[col] = A[piv][m]
    return sol


def trace_dual(values, ctx: PadicContext) -> PadicElement:
    """The unique c in Z_q with Tr(c * x^j) = values[j] for j < a.

    Solves the Gram system in the power basis; the Gram matrix of a
    separable extension is invertible mod p, which is also asserted here.
    """
    a, pm = ctx.a, ctx.pN
    if len(values) != a:
        raise ValueError(f"need {a} prescribed values")
    vals = [v.coords[0] if isinstance(v, PadicElement) else int(v) % pm
            for v in values]
    basis = [ctx.gen() ** i for i in range(a)]
    gram = [[(basis[i] * basis[j]).trace_scalar() for i in range(a)]
            for j in range(a)]
    sol = _solve_linear(gram, vals, ctx.p, pm)
    coords = [0] * a
    for ci, bi in zip(sol, basis):
        for t in range(a):
            coords[t] += ci * bi.coords[t]
    return ctx.element(coords)


def gram_determinant_valuation(ctx: PadicContext) -> int:
    """v_p of det Tr(x^i x^j); zero exactly when the basis is separable."""
    a = ctx.a
    basis = [ctx.gen() ** i for i in range(a)]
    gram = [[(basis[i] * basis[j]).trace_scalar() for j in range(a)]
            for i in range(a)]
    return int_valuation(_det_int(gram) % ctx.pN, ctx.p, ctx.N)


def _det_int(mat):
    """Exact integer determinant (Bareiss, fraction-free)."""
    mat = [row[:] for row in mat]
    n = len(mat)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if mat[r][k] != 0), None)
            if piv is None:
                return 0
            mat[k], mat[piv] = mat[piv], mat[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = mat[k][k]
    return sign * mat[n - 1][n - 1]


# ---------------------------------------------------------------------------
# unramified extensions Z_{q^d} / Z_q

@functools.lru_cache(maxsize=None)
def unramified_extension(base: PadicContext, d: int) -> "UnramifiedExtension":
    return UnramifiedExtension(base, d)


class UnramifiedExtension:
    """Z_{q^d} over Z_q, both presented over Z_p.

    The big ring is a fresh context of degree a*d; the base embeds through
    a Hensel-lifted root of the base modulus.  Relative Frobenius and trace
    are sigma^a and its partial orbit sums; `retract` inverts the embedding
    on elements known to lie in the base image.
    """

    def __init__(self, base: PadicContext, d: int):
        self.base = base
        self.d = d
        self.big = padic_context(base.p, base.a * d, base.N)
        self._u_pows = None

    def _embedding_root(self) -> PadicElement:
        base, big = self.base, self.big
        if base.a == 1:
            return big.from_int(-base.modulus[0])
        res_ext = ffield.get_extension(base.residue_field(), self.d)
        y = big.element(res_ext.ubar.coords)
        steps = max(1, big.N.bit_length() + 1)
        for _ in range(steps):
            my = _eval_int_poly(base.modulus, y)
            dy = _eval_int_poly(_derivative(base.modulus), y)
            y = y - my * dy.inverse()
        assert _eval_int_poly(base.modulus, y).is_zero()
        return y

    def _embed_pows(self):
        if self._u_pows is None:
            u = self._embedding_root()
            pows = [self.big.one()]
            for _ in range(1, self.base.a):
                pows.append(pows[-1] * u)
            self._u_pows = pows
        return self._u_pows

    def embed(self, x: PadicElement) -> PadicElement:
        if x.ctx is not self.base:
            raise ValueError("element not in the base context")
        acc = self.big.zero()
        for c, upow in zip(x.coords, self._embed_pows()):
            acc = acc + upow * c
        return acc.reduce_prec(x.prec)

    def retract(self, y: PadicElement) -> PadicElement:
        """Inverse of embed on the base image; raises if y is not there."""
        pows = self._embed_pows()
        pm = self.base.p ** y.prec
        rows = [[pows[j].coords[t] for j in range(self.base.a)]
                for t in range(self.big.a)]
        sol = _solve_linear(rows, list(y.coords), self.base.p, pm)
        return self.base.element(sol, prec=y.prec)

    def relative_frobenius(self, y: PadicElement) -> PadicElement:
        return y.frobenius(self.base.a)

    def relative_trace(self, y: PadicElement) -> PadicElement:
        """Trace from Z_{q^d} to Z_q, returned as a base element."""
        acc = y
        cur = y
        for _ in range(1, self.d):
            cur = self.relative_frobenius(cur)
            acc = acc + cur
        return self.retract(acc)

    def teichmuller(self, lambda_bar: FqElement) -> PadicElement:
        """Teichmueller lift into the big ring of a residue element there."""
        return teichmuller(self.big, lambda_bar)


def trace_over(y: PadicElement, base: PadicContext) -> PadicElement:
    """Relative trace of y down to the given base context.

    The ambient context of y must have been built as an unramified
    extension of `base` (same p, degree a multiple of base degree).
    """
    if y.ctx.p != base.p or y.ctx.a % base.a != 0:
        raise ValueError("ambient context is not an extension of the base")
    d = y.ctx.a // base.a
    ext = unramified_extension(base, d)
    if ext.big is not y.ctx:
        raise ValueError("element does not live in the canonical extension")
    return ext.relative_trace(y)
