"""Truncated big Witt vectors and the prime-to-p coordinate decomposition.

Three component rings are supported, tagged by the `ring` attribute:

* exact integers ("int"): the torsion-free home of the ghost map, where
  Witt addition and multiplication are computed by ghosting, operating
  componentwise, and inverting the ghost map with exact divisibility
  checks;
* a finite field (FqContext): only the additive structure, realized
  through the isomorphism E onto one-unit power series;
* a p-adic context (PadicContext): used when integral Witt data is lifted
  to Z_q, chiefly by the ghost-spine cross-check below.

The bridge to Z_q coordinates: a one-unit polynomial g corresponds to the
family Tr(lambda^i) over its reciprocal roots, indexed by i prime to p.
`polynomial_coordinates` computes that directly; `coordinates_via_ghost`
recomputes it through a torsion-free lift, the ghost map, and the
p-typical reassembly, and serves as an independent oracle.
"""

from __future__ import annotations

from . import ffield, padic
from .ffield import FqContext, OneUnitPoly, factor_one_unit
from .padic import PadicContext, PadicElement, teichmuller, unramified_extension

INT_RING = "int"


class NotAGhostVector(ValueError):
    """Divisibility failed while inverting the ghost map."""


class WittUnsupported(NotImplementedError):
    """The requested operation does not exist over this component ring."""


def _ring_zero(ring):
    return 0 if ring == INT_RING else ring.zero()


def _ring_one(ring):
    return 1 if ring == INT_RING else ring.one()


class BigWittVector:
    """Components (r_1, ..., r_n) over the tagged ring."""

    __slots__ = ("ring", "comps")

    def __init__(self, ring, comps):
        self.ring = ring
        self.comps = tuple(comps)

    def __len__(self):
        return len(self.comps)

    def __repr__(self):
        return f"BigWittVector({list(self.comps)})"

    def __eq__(self, other):
        return (isinstance(other, BigWittVector) and self.ring == other.ring
                and self.comps == other.comps)

    def __add__(self, other):
        return witt_add(self, other)

    def __mul__(self, other):
        return witt_mul(self, other)

    @classmethod
    def zero(cls, ring, n):
        return cls(ring, [_ring_zero(ring)] * n)

    @classmethod
    def teichmuller(cls, ring, r, n):
        return cls(ring, [r] + [_ring_zero(ring)] * (n - 1))

    def to_json(self):
        if self.ring == INT_RING:
            return {"ring": "int", "comps": list(self.comps)}
        return {"ring": repr(self.ring),
                "comps": [list(c.coords) for c in self.comps]}


def ghost(x: BigWittVector) -> list:
    """Ghost components w_i = sum_{d | i} d * r_d^(i/d)."""
    n = len(x)
    out = []
    for i in range(1, n + 1):
        w = _ring_zero(x.ring)
        for d in range(1, i + 1):
            if i % d == 0:
                w = w + d * x.comps[d - 1] ** (i // d)
        out.append(w)
    return out


def ghost_component(x: BigWittVector, i: int):
    """w_i alone; i may exceed the truncation only if the missing
    components are zero, which holds for Teichmuller-style vectors."""
    w = _ring_zero(x.ring)
    for d in range(1, min(i, len(x)) + 1):
        if i % d == 0:
            w = w + d * x.comps[d - 1] ** (i // d)
    return w


def ghost_inverse(w, ring=INT_RING) -> BigWittVector:
    """The unique preimage of a ghost vector over a torsion-free ring.

    Recursion: i * r_i = w_i - sum_{d | i, d < i} d r_d^(i/d).  Over the
    integers a failed division means w was not a ghost vector; over a
    p-adic ring the division by i costs v_p(i) digits of precision.
    """
    comps = []
    for i in range(1, len(w) + 1):
        acc = w[i - 1]
        for d in range(1, i):
            if i % d == 0:
                acc = acc - d * comps[d - 1] ** (i // d)
        if ring == INT_RING:
            if acc % i != 0:
                raise NotAGhostVector(f"not a ghost vector at index {i}")
            comps.append(acc // i)
        elif isinstance(ring, PadicContext):
            e = padic.int_valuation(i, ring.p, ring.N)
            unit = i // ring.p ** e
            comps.append(acc.divide_exact(e) * pow(unit, -1, ring.p ** max(acc.prec - e, 1)))
        else:
            raise WittUnsupported("ghost inversion needs a torsion-free ring")
    return BigWittVector(ring, comps)


def witt_add(x: BigWittVector, y: BigWittVector) -> BigWittVector:
    _check_pair(x, y)
    if x.ring == INT_RING:
        gx, gy = ghost(x), ghost(y)
        return ghost_inverse([a + b for a, b in zip(gx, gy)])
    if isinstance(x.ring, FqContext):
        n = len(x)
        prod = _poly_mul_trunc(E_map(x), E_map(y), x.ring, n)
        return E_inverse(prod, x.ring, n)
    raise WittUnsupported(f"witt_add over {x.ring!r}")


def witt_mul(x: BigWittVector, y: BigWittVector) -> BigWittVector:
    _check_pair(x, y)
    if x.ring == INT_RING:
        gx, gy = ghost(x), ghost(y)
        return ghost_inverse([a * b for a, b in zip(gx, gy)])
    raise WittUnsupported("Witt multiplication is only provided over the "
                          "integers; the character pipeline only needs the "
                          "additive structure in characteristic p")


def _check_pair(x, y):
    if x.ring != y.ring or len(x) != len(y):
        raise ValueError("mismatched rings or truncation lengths")


# ---------------------------------------------------------------------------
# E: Witt vectors <-> one-unit power series  (coefficient lists, index = degree)

def E_map(x: BigWittVector) -> list:
    """prod_i (1 - r_i t^i) truncated at t^n, as a coefficient list."""
    ring = x.ring
    n = len(x)
    out = [_ring_one(ring)] + [_ring_zero(ring)] * n
    for i, r in enumerate(x.comps, start=1):
        if r == _ring_zero(ring):
            continue
        for e in range(n, i - 1, -1):
            out[e] = out[e] - r * out[e - i]
    return out


def E_inverse(f: list, ring, n: int) -> BigWittVector:
    """Peel the factors (1 - r_i t^i) off a one-unit series, lowest first."""
    if f[0] != _ring_one(ring):
        raise ValueError("series must have constant term 1")
    residual = list(f) + [_ring_zero(ring)] * (n + 1 - len(f))
    residual = residual[:n + 1]
    comps = []
    for i in range(1, n + 1):
        r_i = -residual[i]
        comps.append(r_i)
        if r_i != _ring_zero(ring):
            # divide by (1 - r_i t^i): multiply by sum_m r_i^m t^(im)
            for e in range(i, n + 1):
                residual[e] = residual[e] + r_i * residual[e - i]
    return BigWittVector(ring, comps)


def _poly_mul_trunc(f, g, ring, n):
    out = [_ring_zero(ring)] * (n + 1)
    for i, a in enumerate(f):
        if i > n or a == _ring_zero(ring):
            continue
        for j, b in enumerate(g):
            if i + j > n:
                break
            out[i + j] = out[i + j] + a * b
    return out


def one_unit_poly_to_witt(g: OneUnitPoly, n: int) -> BigWittVector:
    coeffs = list(g.coeffs)
    return E_inverse(coeffs, g.ctx, n)


# ---------------------------------------------------------------------------
# prime-to-p coordinates of one-unit polynomials

def prime_to_p_indices(bound: int, p: int):
    return [i for i in range(1, bound + 1) if i % p != 0]


def irreducible_coordinates(f: OneUnitPoly, indices, base: PadicContext,
                            budget: int = ffield.DEFAULT_BUDGET) -> dict:
    """coordinate_i(f) = Tr_{Z_{q^d}/Z_q}(lambda^i) for the Teichmuller
    lift lambda of a reciprocal root of the irreducible f."""
    if f.ctx is not base.residue_field():
        raise ValueError("polynomial is not over the residue field of base")
    d = f.degree
    fext, root = ffield.reciprocal_root(f, budget=budget)
    ext = unramified_extension(base, d)
    lam = ext.teichmuller(root)
    out = {}
    pow_cache = {}
    for i in indices:
        if i % base.p == 0:
            raise ValueError(f"index {i} is divisible by p")
        lam_i = pow_cache.get(i)
        if lam_i is None:
            lam_i = lam ** i
            pow_cache[i] = lam_i
        out[i] = ext.relative_trace(lam_i)
    return out


def polynomial_coordinates(g: OneUnitPoly, indices, base: PadicContext,
                           budget: int = ffield.DEFAULT_BUDGET) -> dict:
    """Coordinates of an arbitrary one-unit polynomial: additive over the
    irreducible factorization."""
    out = {i: base.zero() for i in indices}
    for f in factor_one_unit(g):
        part = irreducible_coordinates(f, indices, base, budget)
        for i in indices:
            out[i] = out[i] + part[i]
    return out


# ---------------------------------------------------------------------------
# p-typical structure of Z_q, and the ghost-spine oracle

def to_p_typical(x: PadicElement) -> list:
    """The p-typical components (y_0, y_1, ...) in the residue field of an
    element of Z_q, via x = sum_j p^j [y_j^(p^-j)].

    Only prec components are determined; p^i divides x exactly when the
    first i components vanish.
    """
    ctx = x.ctx
    comps = []
    cur = x
    for j in range(x.prec):
        ybar = cur.residue()
        for _ in range(j):
            ybar = ybar ** ctx.p
        comps.append(ybar)
        cur = (cur - teichmuller(ctx, cur.residue()).reduce_prec(cur.prec)) \
            .divide_exact(1)
    return comps


def from_p_typical(comps, ctx: PadicContext) -> PadicElement:
    """Inverse of to_p_typical: sum_j p^j * [y_j^(p^-j)]."""
    acc = ctx.zero()
    for j, ybar in enumerate(comps):
        if j >= ctx.N:
            break
        root = ybar
        for _ in range(j):
            root = root.pth_root()
        acc = acc + teichmuller(ctx, root) * ctx.p ** j
    return acc


def multiply_by_p_components(comps, p):
    """p * (y_0, y_1, ...) = (0, y_0^p, y_1^p, ...) in p-typical vectors."""
    if not comps:
        return comps
    return [comps[0].ctx.zero()] + [y ** p for y in comps[:-1]]


def coordinates_via_ghost(g: OneUnitPoly, indices, base: PadicContext) -> dict:
    """Independent route to polynomial_coordinates through a lift.

    Lift E_inverse(g) to Z_q by Teichmuller on each component, take big
    ghost components along the spine (i, ip, ip^2, ...), invert the
    p-typical ghost map over Z_q (costing digits at each p-division), and
    reassemble the residue components into a Z_q element.  Exactness of
    the reassembly per digit makes the final answer exact mod p^N.
    """
    p, N = base.p, base.N
    levels = N
    n = max(indices) * p ** (levels - 1)
    wv = one_unit_poly_to_witt(g, n)
    lifted = [teichmuller(base, r) for r in wv.comps]
    lifted_wv = BigWittVector(base, lifted)
    out = {}
    for i in indices:
        spine = [ghost_component(lifted_wv, i * p ** j) for j in range(levels)]
        typical = _p_typical_ghost_inverse(spine, base)
        residues = []
        for j, comp in enumerate(typical):
            if comp.prec < 1:
                break
            residues.append(comp.residue())
        out[i] = from_p_typical(residues, base)
    return out


def _p_typical_ghost_inverse(spine, ctx: PadicContext):
    """(w_0, w_1, ...) -> (x_0, x_1, ...) with w_j = sum_e p^e x_e^(p^(j-e))."""
    comps = []
    for j, w in enumerate(spine):
        acc = w
        for e in range(j):
            acc = acc - comps[e] ** (ctx.p ** (j - e)) * ctx.p ** e
        if j == 0:
            comps.append(acc)
        else:
            comps.append(acc.divide_exact(j))
    return comps
