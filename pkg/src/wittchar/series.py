"""Truncated power series over a p-adic context.

Coefficients are context elements carrying their own precision, so a
series knows, coefficient by coefficient, how many digits are meaningful.
A series may also carry a certified tail rate: a Fraction r such that
every omitted coefficient (degree > K) has valuation >= r * degree.  The
rate survives ring operations and lets consumers bound evaluation error
at integral points.
"""

from __future__ import annotations

from fractions import Fraction

from .padic import (PadicContext, PadicElement, NotOneUnit, int_valuation,
                    padic_context)


class TruncatedSeries:

    __slots__ = ("ctx", "var", "K", "coeffs", "tail_rate")

    def __init__(self, ctx: PadicContext, coeffs, K: int, var: str = "t",
                 tail_rate: Fraction | None = None):
        coeffs = list(coeffs)
        if len(coeffs) > K + 1:
            raise ValueError("more coefficients than the cutoff allows")
        coeffs += [ctx.zero()] * (K + 1 - len(coeffs))
        for c in coeffs:
            if c.ctx is not ctx:
                raise ValueError("coefficient from a different context")
        self.ctx = ctx
        self.var = var
        self.K = K
        self.coeffs = coeffs
        self.tail_rate = tail_rate

    @classmethod
    def one(cls, ctx, K, var="t"):
        return cls(ctx, [ctx.one()], K, var)

    def __repr__(self):
        head = ", ".join(str(list(c.coords)) for c in self.coeffs[:5])
        return f"TruncatedSeries({self.var}; K={self.K}; [{head}, ...])"

    def __getitem__(self, i):
        return self.coeffs[i]

    def congruent(self, other, prec=None) -> bool:
        return all(x.congruent(y, prec) for x, y in
                   zip(self.coeffs, other.coeffs))

    def _merge_rate(self, other):
        if self.tail_rate is None or other.tail_rate is None:
            return None
        return min(self.tail_rate, other.tail_rate)

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries(self.ctx,
                               [x + y for x, y in zip(self.coeffs, other.coeffs)],
                               self.K, self.var, self._merge_rate(other))

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries(self.ctx,
                               [x - y for x, y in zip(self.coeffs, other.coeffs)],
                               self.K, self.var, self._merge_rate(other))

    def __mul__(self, other):
        if isinstance(other, (int, PadicElement)):
            return TruncatedSeries(self.ctx, [c * other for c in self.coeffs],
                                   self.K, self.var, None)
        self._check(other)
        out = [self.ctx.zero() for _ in range(self.K + 1)]
        for i, x in enumerate(self.coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(other.coeffs):
                if i + j > self.K:
                    break
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return TruncatedSeries(self.ctx, out, self.K, self.var,
                               self._merge_rate(other))

    __rmul__ = __mul__

    def _check(self, other):
        if self.ctx is not other.ctx or self.K != other.K:
            raise ValueError("series from incompatible contexts or cutoffs")

    def substitute_power(self, m: int) -> "TruncatedSeries":
        """f(t) -> f(t^m), same cutoff (higher terms fall off the end)."""
        out = [self.ctx.zero() for _ in range(self.K + 1)]
        for i, c in enumerate(self.coeffs):
            if i * m > self.K:
                break
            out[i * m] = c
        rate = None if self.tail_rate is None else self.tail_rate / m
        return TruncatedSeries(self.ctx, out, self.K, self.var, rate)

    def map_coefficients(self, fn) -> "TruncatedSeries":
        mapped = [fn(c) for c in self.coeffs]
        return TruncatedSeries(mapped[0].ctx, mapped, self.K, self.var,
                               self.tail_rate)

    def inverse(self) -> "TruncatedSeries":
        """Series inverse; the constant term must be 1."""
        if not self.coeffs[0].congruent(self.ctx.one()):
            raise ValueError("inverse needs constant term 1")
        out = [self.ctx.one().reduce_prec(self.coeffs[0].prec)]
        for m in range(1, self.K + 1):
            acc = self.ctx.zero()
            for j in range(1, m + 1):
                if not self.coeffs[j].is_zero():
                    acc = acc + self.coeffs[j] * out[m - j]
            out.append(-acc)
        return TruncatedSeries(self.ctx, out, self.K, self.var)

    def evaluate(self, x: PadicElement) -> PadicElement:
        """Horner evaluation at a point of the same context; ignores the
        tail, so mind the certificate.  Embed coefficients first to
        evaluate inside an extension."""
        if x.ctx is not self.ctx:
            raise ValueError("evaluation point lives in a different context")
        acc = x.ctx.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def embed(self, ext) -> "TruncatedSeries":
        """Coefficient-wise image in an unramified extension of the context."""
        return TruncatedSeries(ext.big, [ext.embed(c) for c in self.coeffs],
                               self.K, self.var, self.tail_rate)

    def log(self) -> "TruncatedSeries":
        """Log of a series with constant term 1 and p | nonconstant terms.

        Summed as sum_k -(-z)^k / k in a boosted context, so the only
        precision limit is the input data itself.
        """
        ctx = self.ctx
        if not self.coeffs[0].congruent(ctx.one()):
            raise NotOneUnit("series log needs constant term 1")
        for c in self.coeffs[1:]:
            if c.valuation() < 1:
                raise NotOneUnit("series log needs p | nonconstant coefficients")
        prec = min(c.prec for c in self.coeffs)
        boost = _ilog(self.K, ctx.p) + 1
        big = ctx.at_precision(ctx.N + boost)
        z = TruncatedSeries(big, [big.zero()] +
                            [big.element(c.coords) for c in self.coeffs[1:]],
                            self.K, self.var)
        acc = TruncatedSeries(big, [], self.K, self.var)
        zk = TruncatedSeries.one(big, self.K, self.var)
        for k in range(1, self.K + 1):
            zk = zk * z
            e = int_valuation(k, ctx.p, boost)
            inv = pow(k // ctx.p ** e, -1, big.pN)
            term = zk.map_coefficients(lambda c: c.divide_exact(e) * inv)
            if k % 2 == 0:
                term = term * (big.pN - 1)
            acc = acc + term
        out = acc.map_coefficients(lambda c: c.to_context(ctx, prec=prec))
        out.tail_rate = self.tail_rate
        return out

    def exp(self) -> "TruncatedSeries":
        """Exp of a series with zero constant term and p | coefficients."""
        ctx = self.ctx
        if not self.coeffs[0].is_zero():
            raise NotOneUnit("series exp needs zero constant term")
        for c in self.coeffs[1:]:
            if c.valuation() < 1:
                raise NotOneUnit("series exp needs p | coefficients")
        prec = min(c.prec for c in self.coeffs)
        boost = self.K // (ctx.p - 1) + 1
        big = ctx.at_precision(ctx.N + boost)
        x = TruncatedSeries(big, [big.element(c.coords) for c in self.coeffs],
                            self.K, self.var)
        acc = TruncatedSeries.one(big, self.K, self.var)
        term = TruncatedSeries.one(big, self.K, self.var)
        for k in range(1, self.K + 1):
            e = int_valuation(k, ctx.p, boost)
            inv = pow(k // ctx.p ** e, -1, big.pN)
            term = (term * x).map_coefficients(
                lambda c: c.divide_exact(e) * inv)
            acc = acc + term
        out = acc.map_coefficients(lambda c: c.to_context(ctx, prec=prec))
        out.tail_rate = self.tail_rate
        return out

    def valuations(self):
        """(valuation, resolved) per coefficient; unresolved means the
        coefficient vanishes at its precision, so only a lower bound."""
        out = []
        for c in self.coeffs:
            v = c.valuation()
            out.append((v, v < c.prec))
        return out

    def to_json(self):
        prec0 = max(c.prec for c in self.coeffs)
        pm = self.ctx.p ** prec0
        return {"p": self.ctx.p, "a": self.ctx.a, "N": self.ctx.N,
                "modulus": [c % self.ctx.pN for c in self.ctx.modulus],
                "var": self.var, "K": self.K,
                "coeffs": [list(c.coords) for c in self.coeffs],
                "precision_flags": [c.prec for c in self.coeffs]}

    @staticmethod
    def from_json(data):
        ctx = padic_context(data["p"], data["a"], data["N"],
                            modulus=data["modulus"])
        flags = data.get("precision_flags") or [data["N"]] * len(data["coeffs"])
        coeffs = [ctx.element(c, prec=f) for c, f in zip(data["coeffs"], flags)]
        return TruncatedSeries(ctx, coeffs, data["K"], data.get("var", "t"))


def _ilog(n, p):
    b = 0
    while p ** (b + 1) <= n:
        b += 1
    return b


def binomial_series(pi: PadicElement, m: int, K: int) -> TruncatedSeries:
    """The series (1 + pi)^X expanded in X and written in lambda^m.

    Expands sum_j C(X, j) pi^j by collecting powers of X through the
    falling factorials X(X-1)...(X-j+1), whose integer coefficients are
    exact; the a_k land on exponents k*m.  Each a_k has
    v_p(a_k) >= k (v_p(pi) - 1/(p-1)), which is also the certified tail
    rate (per lambda-degree, divided by m).
    """
    ctx = pi.ctx
    if m < 1:
        raise ValueError("m must be positive")
    if pi.is_zero():
        return TruncatedSeries.one(ctx, K, "lambda")
    vpi = pi.valuation()
    if vpi < 1:
        raise NotOneUnit("binomial series needs v_p(pi) >= 1")
    p, N = ctx.p, ctx.N
    jmax = 1
    while jmax * vpi - _fact_val(jmax, p) < N:
        jmax += 1
    boost = _fact_val(jmax, p) + 1
    big = ctx.at_precision(N + boost)
    pil = big.element(pi.coords)
    kcap = K // m
    acc = [big.zero() for _ in range(kcap + 1)]
    acc[0] = big.one()
    falling = [1]                       # X(X-1)...(X-j+1), ascending in X
    term = big.one()                    # pi^j / j!
    for j in range(1, jmax + 1):
        falling = [0] + falling
        falling = [falling[i] - (j - 1) * (falling[i + 1] if i + 1 < len(falling) else 0)
                   for i in range(len(falling))]
        e = int_valuation(j, p, boost)
        term = (term * pil).divide_exact(e) * pow(j // p ** e, -1, big.pN)
        for k in range(1, min(j, kcap) + 1):
            s = falling[k]
            if s:
                acc[k] = acc[k] + term * s
    prec = min(pi.prec, N)
    coeffs = [ctx.zero() for _ in range(K + 1)]
    for k in range(kcap + 1):
        if k * m <= K:
            coeffs[k * m] = acc[k].to_context(ctx, prec=prec)
    rate = Fraction(vpi) - Fraction(1, p - 1)
    return TruncatedSeries(ctx, coeffs, K, "lambda", tail_rate=rate / m)


def _fact_val(j, p):
    """v_p(j!)."""
    v = 0
    pk = p
    while pk <= j:
        v += j // pk
        pk *= p
    return v
