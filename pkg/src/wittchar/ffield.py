"""Finite fields F_{p^n}, one-unit polynomials over them, and enumeration.

Fields are represented concretely as F_p[x]/(m(x)) with dense coordinate
tuples over F_p.  Everything here is desk scale: enumeration and
factorization favour determinism (fixed orderings, reproducible choices)
over asymptotic speed.

A "one-unit polynomial" is an element of 1 + t*F_q[t]: constant term 1,
written by its ascending coefficient list.
"""

from __future__ import annotations

import functools
import itertools
from fractions import Fraction

DEFAULT_BUDGET = 10 ** 6


class BudgetExceeded(RuntimeError):
    """An enumeration would touch more elements than the configured budget."""


class ReducibleError(ValueError):
    """A polynomial that had to be irreducible was not."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division.  Fine for n up to ~10^12."""
    facs: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            facs[d] = facs.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        facs[n] = facs.get(n, 0) + 1
    return facs


# ---------------------------------------------------------------------------
# polynomial arithmetic over F_p with integer coefficient lists
# (used for modulus selection and validation; ascending coefficients)

def _fp_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _fp_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _fp_trim([c % p for c in out])


def _fp_mod(f, m, p):
    # m monic
    f = [c % p for c in f]
    dm = len(m) - 1
    for i in range(len(f) - 1, dm - 1, -1):
        c = f[i]
        if c:
            f[i] = 0
            for j in range(dm):
                f[i - dm + j] = (f[i - dm + j] - c * m[j]) % p
    return _fp_trim(f)


def _fp_gcd(f, g, p):
    f, g = list(f), list(g)
    while g:
        lead_inv = pow(g[-1], -1, p)
        gm = [c * lead_inv % p for c in g]
        f, g = g, _fp_mod(f, gm, p)
    return f


def _fp_pow_p(f, m, p):
    """f(x)^p mod m(x), by square and multiply on the exponent p."""
    result = [1]
    base = list(f)
    e = p
    while e:
        if e & 1:
            result = _fp_mod(_fp_mul(result, base, p), m, p)
        e >>= 1
        if e:
            base = _fp_mod(_fp_mul(base, base, p), m, p)
    return result


def fp_monic_irreducible(coeffs, p) -> bool:
    """Irreducibility of a monic polynomial over F_p (Rabin's test).

    Walks the Frobenius orbit x, x^p, x^(p^2), ... once, checking the
    subfield gcd conditions at n/l for each prime l dividing n.
    """
    n = len(coeffs) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    if coeffs[0] % p == 0:
        return False
    checkpoints = {n // ell for ell in factorize(n)}
    x = [0, 1]
    y = list(x)
    for j in range(1, n + 1):
        y = _fp_pow_p(y, coeffs, p)
        if j in checkpoints:
            diff = _fp_trim([(a - b) % p for a, b in
                             itertools.zip_longest(y, x, fillvalue=0)])
            if len(_fp_gcd(coeffs, diff, p)) != 1:
                return False
    diff = [(a - b) % p for a, b in itertools.zip_longest(y, x, fillvalue=0)]
    return not _fp_trim(diff)


@functools.lru_cache(maxsize=None)
def smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree n over F_p.

    Coefficient tuples (c_0, ..., c_{n-1}) are compared left to right;
    the returned tuple includes the leading 1.
    """
    if n == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=n):
        coeffs = list(tail) + [1]
        if coeffs[0] == 0:
            continue
        if fp_monic_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible found")  # unreachable


# ---------------------------------------------------------------------------
# field contexts and elements

@functools.lru_cache(maxsize=None)
def _fq_context(p, deg, modulus):
    return FqContext(p, deg, modulus, _internal=True)


def fq_context(p: int, deg: int, modulus=None) -> "FqContext":
    """Shared constructor so equal parameters give the identical context."""
    if modulus is None:
        modulus = smallest_irreducible(p, deg)
    else:
        modulus = tuple(int(c) % p for c in modulus)
    return _fq_context(p, deg, modulus)


class FqContext:
    """The field F_{p^deg} presented as F_p[x]/(modulus)."""

    def __init__(self, p, deg, modulus, _internal=False):
        if not _internal:
            raise TypeError("use fq_context()")
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if len(modulus) != deg + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of the stated degree")
        if not fp_monic_irreducible(list(modulus), p):
            raise ReducibleError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.deg = deg
        self.modulus = modulus
        self.order = p ** deg
        self._primitive = None

    def __repr__(self):
        return f"FqContext(p={self.p}, deg={self.deg})"

    def element(self, coords) -> "FqElement":
        coords = tuple(int(c) % self.p for c in coords)
        if len(coords) != self.deg:
            raise ValueError("coordinate length mismatch")
        return FqElement(self, coords)

    def zero(self):
        return FqElement(self, (0,) * self.deg)

    def one(self):
        return FqElement(self, (1,) + (0,) * (self.deg - 1))

    def gen(self):
        """The class of x.  For deg 1 this is the root of the modulus."""
        if self.deg == 1:
            return FqElement(self, ((-self.modulus[0]) % self.p,))
        return FqElement(self, (0, 1) + (0,) * (self.deg - 2))

    def from_int(self, n):
        return FqElement(self, (n % self.p,) + (0,) * (self.deg - 1))

    def elements(self):
        """All field elements, lexicographic on coordinate tuples."""
        for coords in itertools.product(range(self.p), repeat=self.deg):
            yield FqElement(self, coords)

    def _mul_coords(self, u, v):
        p, d, m = self.p, self.deg, self.modulus
        if d == 1:
            return ((u[0] * v[0]) % p,)
        conv = [0] * (2 * d - 1)
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    conv[i + j] += a * b
        for e in range(2 * d - 2, d - 1, -1):
            c = conv[e] % p
            if c:
                for t in range(d):
                    conv[e - d + t] -= c * m[t]
            conv[e] = 0
        return tuple(c % p for c in conv[:d])

    def primitive_root(self) -> "FqElement":
        """A fixed multiplicative generator (first in coordinate order)."""
        if self._primitive is None:
            n = self.order - 1
            exps = [n // ell for ell in factorize(n)]
            for cand in self.elements():
                if cand.is_zero() or cand == self.one():
                    continue
                if all(cand ** e != self.one() for e in exps):
                    self._primitive = cand
                    break
        return self._primitive


class FqElement:
    """An element of an FqContext, as a coordinate tuple over F_p."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx, coords):
        self.ctx = ctx
        self.coords = coords

    def __repr__(self):
        return f"Fq{list(self.coords)}"

    def __eq__(self, other):
        return (isinstance(other, FqElement) and self.ctx is other.ctx
                and self.coords == other.coords)

    def __hash__(self):
        return hash((id(self.ctx), self.coords))

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __add__(self, other):
        p = self.ctx.p
        return FqElement(self.ctx, tuple((a + b) % p for a, b in
                                         zip(self.coords, other.coords)))

    def __sub__(self, other):
        p = self.ctx.p
        return FqElement(self.ctx, tuple((a - b) % p for a, b in
                                         zip(self.coords, other.coords)))

    def __neg__(self):
        p = self.ctx.p
        return FqElement(self.ctx, tuple(-a % p for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, int):
            p = self.ctx.p
            return FqElement(self.ctx, tuple(a * other % p for a in self.coords))
        return FqElement(self.ctx, self.ctx._mul_coords(self.coords, other.coords))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        return self ** (self.ctx.order - 2)

    def pth_root(self):
        """The unique p-th root, i.e. the inverse of Frobenius."""
        return self ** (self.ctx.p ** (self.ctx.deg - 1))

    def sort_key(self):
        return self.coords


# ---------------------------------------------------------------------------
# polynomials with coefficients in F_q (ascending lists of FqElement)

def _poly_trim(f):
    while f and f[-1].is_zero():
        f.pop()
    return f


def _poly_mul(f, g, ctx):
    if not f or not g:
        return []
    out = [ctx.zero() for _ in range(len(f) + len(g) - 1)]
    for i, a in enumerate(f):
        if not a.is_zero():
            for j, b in enumerate(g):
                out[i + j] = out[i + j] + a * b
    return _poly_trim(out)


def _poly_divmod(f, g, ctx):
    f = list(f)
    dg = len(g) - 1
    if dg < 0:
        raise ZeroDivisionError
    inv_lead = g[-1].inverse()
    quot = [ctx.zero()] * max(0, len(f) - dg)
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i] * inv_lead
        if not c.is_zero():
            quot[i - dg] = c
            for j in range(dg + 1):
                f[i - dg + j] = f[i - dg + j] - c * g[j]
    return _poly_trim(quot), _poly_trim(f[:dg])


def _poly_gcd(f, g, ctx):
    f, g = list(f), list(g)
    while g:
        f, g = g, _poly_divmod(f, g, ctx)[1]
    if f:
        inv = f[-1].inverse()
        f = [c * inv for c in f]
    return f


def _poly_mod(f, m, ctx):
    return _poly_divmod(f, m, ctx)[1]


def _poly_pow_p(f, m, ctx):
    result = [ctx.one()]
    base = list(f)
    e = ctx.p
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, ctx), m, ctx)
        e >>= 1
        if e:
            base = _poly_mod(_poly_mul(base, base, ctx), m, ctx)
    return result


def _monic_irreducible(f, ctx) -> bool:
    """Rabin's test over F_q, walking the q-power Frobenius orbit once."""
    d = len(f) - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    if f[0].is_zero():
        return False
    checkpoints = {d // ell for ell in factorize(d)}
    x = [ctx.zero(), ctx.one()]
    y = _poly_mod(list(x), f, ctx)
    for j in range(1, d + 1):
        for _ in range(ctx.deg):
            y = _poly_pow_p(y, f, ctx)
        if j in checkpoints or j == d:
            diff = [a - b for a, b in
                    itertools.zip_longest(y, x, fillvalue=ctx.zero())]
            diff = _poly_trim(diff)
            if j == d:
                if diff:
                    return False
            elif len(_poly_gcd(f, diff, ctx)) != 1:
                return False
    return True


# ---------------------------------------------------------------------------
# one-unit polynomials

class OneUnitPoly:
    """A polynomial in 1 + t*F_q[t], stored by ascending coefficients."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        coeffs = list(coeffs)
        if not coeffs or coeffs[0] != ctx.one():
            raise ValueError("constant term must be 1")
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs.pop()
        self.ctx = ctx
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __repr__(self):
        return f"OneUnitPoly(deg={self.degree}, {[c.coords for c in self.coeffs]})"

    def __eq__(self, other):
        return (isinstance(other, OneUnitPoly) and self.ctx is other.ctx
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.ctx), self.coeffs))

    def __mul__(self, other):
        prod = _poly_mul(list(self.coeffs), list(other.coeffs), self.ctx)
        return OneUnitPoly(self.ctx, prod)

    def sort_key(self):
        return (self.degree, tuple(c.coords for c in self.coeffs))

    def is_irreducible(self):
        if self.degree == 0:
            return False
        return _monic_irreducible(self.monic_reversal(), self.ctx)

    def monic_reversal(self):
        """x^d * f(1/x): monic, with the reciprocal roots of f as roots."""
        return [c for c in reversed(self.coeffs)]

    def to_json(self):
        return {"coeffs": [list(c.coords) for c in self.coeffs]}

    @staticmethod
    def from_json(ctx, data):
        return OneUnitPoly(ctx, [ctx.element(c) for c in data["coeffs"]])


def necklace_count(q: int, d: int) -> int:
    """Number of degree-d irreducibles in 1 + t*F_q[t] (d=1 excludes t)."""
    if d == 1:
        return q - 1
    total = 0
    for e, mult in _divisor_mobius(d):
        total += mult * q ** (d // e)
    return total // d


def _divisor_mobius(d):
    for e in range(1, d + 1):
        if d % e == 0:
            facs = factorize(e)
            if all(v == 1 for v in facs.values()):
                yield e, (-1) ** len(facs)


def enumerate_irreducibles(ctx: FqContext, max_degree: int,
                           budget: int = DEFAULT_BUDGET):
    """All irreducible one-unit polynomials of degree <= max_degree.

    Deterministic order: by degree, then lexicographic on the coefficient
    tuple (c_1, ..., c_d) with elements ordered by their coordinates.
    """
    if ctx.order ** max_degree > budget:
        raise BudgetExceeded(
            f"q^D = {ctx.order ** max_degree} exceeds budget {budget}")
    out = []
    for d in range(1, max_degree + 1):
        out.extend(_irreducibles_of_degree(ctx, d))
    return out


@functools.lru_cache(maxsize=None)
def _irreducibles_of_degree(ctx, d):
    elems = sorted(ctx.elements(), key=FqElement.sort_key)
    nonzero = [e for e in elems if not e.is_zero()]
    found = []
    for mid in itertools.product(elems, repeat=d - 1):
        for lead in nonzero:
            f = OneUnitPoly(ctx, [ctx.one(), *mid, lead])
            if f.is_irreducible():
                found.append(f)
    found.sort(key=OneUnitPoly.sort_key)
    return tuple(found)


def factor_one_unit(g: OneUnitPoly) -> list[OneUnitPoly]:
    """Irreducible one-unit factors of g, with multiplicity.

    Trial division against the deterministic irreducible enumeration, so
    the returned list is sorted by (degree, coefficients).
    """
    ctx = g.ctx
    remaining = list(g.coeffs)
    out = []
    d = 1
    while len(remaining) - 1 > 0:
        if d > len(remaining) - 1:
            raise AssertionError("one-unit polynomial failed to factor")
        for f in _irreducibles_of_degree(ctx, d):
            if len(remaining) - 1 < d:
                break
            while True:
                quot, rem = _poly_divmod(remaining, list(f.coeffs), ctx)
                if rem:
                    break
                out.append(f)
                remaining = quot
                if len(remaining) - 1 < d:
                    break
        d += 1
    return out


# ---------------------------------------------------------------------------
# extensions F_{q^k} with an embedded copy of F_q

@functools.lru_cache(maxsize=None)
def get_extension(base: FqContext, k: int) -> "FqExtension":
    return FqExtension(base, k)


class FqExtension:
    """F_{q^k} presented over F_p, with a chosen embedding of the base field.

    The embedding sends the base generator to a root of the base modulus
    inside the big field; the root is located through the norm-style map
    g -> g^((Q-1)/(q-1)) which lands in the embedded multiplicative group
    of F_q, followed by a short scan.
    """

    def __init__(self, base: FqContext, k: int):
        self.base = base
        self.k = k
        self.big = fq_context(base.p, base.deg * k)
        self.gbar = self.big.primitive_root()
        self._ubar = None
        self._ubar_pows = None
        self._subfield_orders = None

    @property
    def ubar(self):
        if self._ubar is None:
            self._ubar = self._find_embedding_root()
        return self._ubar

    def _find_embedding_root(self):
        base, big = self.base, self.big
        if base.deg == 1:
            return big.from_int(-base.modulus[0])
        q1 = base.order - 1
        y = self.gbar ** ((big.order - 1) // q1)
        lifted = [big.from_int(c) for c in base.modulus]
        z = big.one()
        for _ in range(q1):
            val = big.zero()
            for c in reversed(lifted):
                val = val * z + c
            if val.is_zero():
                return z
            z = z * y
        raise AssertionError("embedding root not found")  # unreachable

    def embed(self, x: FqElement) -> FqElement:
        if self._ubar_pows is None:
            pows = [self.big.one()]
            for _ in range(self.base.deg - 1):
                pows.append(pows[-1] * self.ubar)
            self._ubar_pows = pows
        acc = self.big.zero()
        for c, u in zip(x.coords, self._ubar_pows):
            acc = acc + u * c
        return acc

    def embed_poly(self, coeffs):
        return [self.embed(c) for c in coeffs]

    def log_degree(self, m: int) -> int:
        """Degree over F_q of gbar^m, from the discrete log m alone."""
        if self._subfield_orders is None:
            q = self.base.order
            self._subfield_orders = [(d, q ** d - 1) for d in range(1, self.k + 1)
                                     if self.k % d == 0]
        big_order = self.big.order - 1
        for d, sub in self._subfield_orders:
            if (m * sub) % big_order == 0:
                return d
        raise AssertionError


def enumerate_field(ctx: FqContext, k: int, budget: int = DEFAULT_BUDGET):
    """Yield (element, degree-over-F_q) for every element of F_{q^k}.

    Zero comes first (with degree 1); the nonzero elements follow as
    successive powers of the fixed primitive root.
    """
    if ctx.order ** k > budget:
        raise BudgetExceeded(f"q^k = {ctx.order ** k} exceeds budget {budget}")
    ext = get_extension(ctx, k)
    yield ext.big.zero(), 1
    lam = ext.big.one()
    for m in range(ext.big.order - 1):
        yield lam, ext.log_degree(m)
        lam = lam * ext.gbar


def reciprocal_root(f: OneUnitPoly, budget: int = DEFAULT_BUDGET):
    """A reciprocal root of an irreducible f, in F_{q^d}.

    Returns (extension, root) where root is the lexicographically smallest
    of the d conjugate roots of the monic reversal of f, located by scanning
    the extension in coordinate order.
    """
    d = f.degree
    if not f.is_irreducible():
        raise ReducibleError("reciprocal_root requires an irreducible input")
    if f.ctx.order ** d > budget:
        raise BudgetExceeded(f"q^d = {f.ctx.order ** d} exceeds budget {budget}")
    ext = get_extension(f.ctx, d)
    rev = ext.embed_poly(f.monic_reversal())
    for z in ext.big.elements():
        acc = ext.big.zero()
        for c in reversed(rev):
            acc = acc * z + c
        if acc.is_zero():
            return ext, z
    raise AssertionError("irreducible polynomial with no root in F_{q^d}")
