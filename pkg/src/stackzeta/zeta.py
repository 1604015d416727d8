"""The Kapranov zeta function as a pre-lambda structure on motivic classes.

zeta_a(T) = 1 + a T + sym^2(a) T^2 + ... is the unique pre-lambda structure
on the ring that extends the Kapranov zeta function of varieties: it is
additive-to-multiplicative (zeta_{a+b} = zeta_a zeta_b), and on a Laurent
polynomial class b = sum c_s L^s it is the product of geometric factors
prod_s (1 - L^s T)^{-c_s}.

For classes with denominators the engine peels one factor at a time: writing
a = b * q^m / (1 - q^n) with q = L^{-1}, the coefficient of T^k is

    q^{k m} * sum over partitions (k_1,...,k_s) of k of
        [block-distinct sum at (q^n, q^{2n}, ..., q^{sn}), block sizes k_j]
        * prod_j sym^j(b)^{k_j}

where blocks with k_j = 0 are dropped together with their argument.  This is
derived from the factorization zeta_a(T) = prod_{i>=0} zeta_b(q^{m+in} T):
collecting the T^k terms across factors groups the indices i by which
sym-power j they feed, and the sum over distinct index tuples per group is
exactly the block-distinct generating function evaluated at q^{jn}.

A negative twist 1/(1 - q^n) with n < 0 is rewritten through
1/(1 - q^n) = -q^{-n}/(1 - q^{-n}); the base-class negation is carried out
on the series side, since zeta_{-b} is the inverse series of zeta_b.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, ResourceLimitError
from .laurent import IntLaurent
from .motivic import DenomForm, MotivicClass
from .multipoly import MultiPoly
from .partitions import partitions_of
from .power import LambdaProvider, opposite_series
from .rfunctions import DEFAULT_PERMUTATION_CAP, block_distinct_sum
from .series import Ring, TruncatedSeries, motivic_ring

MOTIVIC = motivic_ring()

_zeta_cache: dict[tuple, TruncatedSeries] = {}


def _q_power(j: int) -> MotivicClass:
    return MotivicClass.l_power(-j)


def zeta_of_polynomial(b: IntLaurent, order: int) -> TruncatedSeries:
    """zeta of a Laurent-polynomial class: prod over terms c*L^s of (1-L^s T)^{-c}."""
    if order < 0:
        raise DomainError("series order must be nonnegative")
    out = TruncatedSeries.one(MOTIVIC, order)
    for deg, coeff in sorted(b.items(), reverse=True):
        if coeff > 0:
            geo = TruncatedSeries.build(MOTIVIC, order, lambda k, d=deg: MotivicClass.l_power(d * k))
            factor = geo ** coeff
        else:
            lin = [MotivicClass.one()]
            if order >= 1:
                lin.append(-MotivicClass.l_power(deg))
                lin.extend([MotivicClass.zero()] * (order - 1))
            factor = TruncatedSeries(MOTIVIC, lin) ** (-coeff)
        out = out * factor
    return out


def zeta_from_sigma(
    sigma_b: Sequence[MotivicClass], m: int, n: int, order: int, *, cap: int = DEFAULT_PERMUTATION_CAP
) -> TruncatedSeries:
    """zeta of b * q^m / (1 - q^n) given sym^1(b)..sym^order(b).

    Implements the partition formula from the module docstring; sigma_b[j-1]
    must be sym^{j}(b).
    """
    if n == 0:
        raise DomainError("the twist exponent n must be nonzero")
    if order < 0:
        raise DomainError("series order must be nonnegative")
    sigma_b = tuple(sigma_b)
    if len(sigma_b) < order:
        raise DomainError(f"need sym powers up to {order}, got {len(sigma_b)}")
    if n < 0:
        # 1/(1-q^n) = -q^{-n}/(1-q^{-n}); sym powers of -b come from the inverse series
        zb = TruncatedSeries(MOTIVIC, (MotivicClass.one(),) + sigma_b[:order])
        neg = zb.inverse().coefficients[1:]
        return zeta_from_sigma(neg, m - n, -n, order, cap=cap)
    coeffs = [MotivicClass.one()]
    for k in range(1, order + 1):
        acc = MotivicClass.zero()
        for part in partitions_of(k):
            blocks = part.nonzero_blocks()
            mults = tuple(kj for _, kj in blocks)
            args = tuple(_q_power(j * n) for j, _ in blocks)
            term = block_distinct_sum(mults, args, cap=cap)
            for j, kj in blocks:
                term = term * sigma_b[j - 1] ** kj
            acc = acc + term
        if m:
            acc = acc * _q_power(k * m)
        coeffs.append(acc)
    return TruncatedSeries(MOTIVIC, coeffs)


def zeta_series(
    a: MotivicClass | IntLaurent | int, order: int, *, cap: int = DEFAULT_PERMUTATION_CAP
) -> TruncatedSeries:
    """zeta_a(T) to the given order, exactly.

    Polynomial classes go through the geometric-product formula; each
    denominator factor L^n - 1 = (1 - q^n)/q^n is peeled off largest-first
    through zeta_from_sigma.  Memoized on the normalized representation.
    """
    if not isinstance(a, MotivicClass):
        a = MotivicClass(a)
    if order < 0:
        raise DomainError("series order must be nonnegative")
    norm = a.normalize()
    key = (norm.structural_key(), order, cap)
    hit = _zeta_cache.get(key)
    if hit is not None:
        return hit
    if not norm.den.factors:
        out = zeta_of_polynomial(norm.num.shift(-norm.den.l_exp), order)
    else:
        n = norm.den.factors[-1]
        rest = norm.den.factors[:-1]
        base = MotivicClass(norm.num, DenomForm(norm.den.l_exp + n, rest))
        inner = zeta_series(base, order, cap=cap)
        out = zeta_from_sigma(inner.coefficients[1:], 0, n, order, cap=cap)
    _zeta_cache[key] = out
    return out


def sym_power(a: MotivicClass | IntLaurent | int, k: int, *, cap: int = DEFAULT_PERMUTATION_CAP) -> MotivicClass:
    """sym^k(a): the coefficient of T^k in zeta_a."""
    if k < 0:
        raise DomainError("sym powers are indexed by k >= 0")
    return zeta_series(a, k, cap=cap).coefficient(k)


def opposite_zeta(
    a: MotivicClass | IntLaurent | int, order: int, *, cap: int = DEFAULT_PERMUTATION_CAP
) -> TruncatedSeries:
    """The opposite pre-lambda structure: (zeta_a(-T))^{-1}."""
    return opposite_series(zeta_series(a, order, cap=cap))


def motivic_provider(cap: int = DEFAULT_PERMUTATION_CAP) -> LambdaProvider:
    """The Kapranov zeta function as a lambda provider over motivic classes."""
    return LambdaProvider("kapranov-zeta", MOTIVIC, lambda a, order: zeta_series(a, order, cap=cap))


# -- formal sym-symbol variant --------------------------------------------------


class FormalSigma:
    """Polynomial in formal symbols s_1..s_J with motivic-class coefficients.

    Stands for an expression in the sym powers of an unspecified base class:
    substituting actual values for the symbols yields a motivic class.
    """

    __slots__ = ("_nsymbols", "_terms")

    def __init__(self, nsymbols: int, terms: Mapping[tuple[int, ...], MotivicClass] | Iterable = ()):
        if nsymbols < 0:
            raise DomainError("nsymbols must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, ...], MotivicClass] = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != nsymbols or any(e < 0 for e in exps):
                raise DomainError(f"bad symbol exponents {exps!r}")
            if exps in clean:
                coeff = clean[exps] + coeff
            if coeff.is_zero:
                clean.pop(exps, None)
            else:
                clean[exps] = coeff
        object.__setattr__(self, "_nsymbols", nsymbols)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FormalSigma is immutable")

    @classmethod
    def zero(cls, nsymbols: int) -> FormalSigma:
        return cls(nsymbols)

    @classmethod
    def one(cls, nsymbols: int) -> FormalSigma:
        return cls(nsymbols, {(0,) * nsymbols: MotivicClass.one()})

    @classmethod
    def symbol(cls, nsymbols: int, j: int) -> FormalSigma:
        if not 1 <= j <= nsymbols:
            raise DomainError(f"symbol index {j} out of range 1..{nsymbols}")
        exps = tuple(1 if i == j - 1 else 0 for i in range(nsymbols))
        return cls(nsymbols, {exps: MotivicClass.one()})

    @property
    def nsymbols(self) -> int:
        return self._nsymbols

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def items(self):
        return iter(sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True))

    def _check(self, other: FormalSigma):
        if self._nsymbols != other._nsymbols:
            raise DomainError("symbol-count mismatch")

    def __add__(self, other: FormalSigma) -> FormalSigma:
        if not isinstance(other, FormalSigma):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            s = out.get(exps)
            coeff = coeff if s is None else s + coeff
            if coeff.is_zero:
                out.pop(exps, None)
            else:
                out[exps] = coeff
        return FormalSigma(self._nsymbols, out)

    def __neg__(self) -> FormalSigma:
        return FormalSigma(self._nsymbols, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: FormalSigma) -> FormalSigma:
        if not isinstance(other, FormalSigma):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> FormalSigma:
        if isinstance(other, (MotivicClass, int)):
            other = FormalSigma(self._nsymbols, {(0,) * self._nsymbols: MotivicClass.one() * other})
        if not isinstance(other, FormalSigma):
            return NotImplemented
        self._check(other)
        out: dict[tuple[int, ...], MotivicClass] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                c = c if s is None else s + c
                if c.is_zero:
                    out.pop(e, None)
                else:
                    out[e] = c
        return FormalSigma(self._nsymbols, out)

    __rmul__ = __mul__

    def substitute(self, values: Sequence[MotivicClass]) -> MotivicClass:
        """Evaluate at s_j = values[j-1]."""
        if len(values) < self._nsymbols:
            raise DomainError(f"need {self._nsymbols} symbol values")
        total = MotivicClass.zero()
        for exps, coeff in self._terms.items():
            term = coeff
            for j, e in enumerate(exps):
                if e:
                    term = term * values[j] ** e
            total = total + term
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalSigma):
            return NotImplemented
        return self._nsymbols == other._nsymbols and self._terms == other._terms

    __hash__ = None

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exps, coeff in self.items():
            syms = "*".join(
                f"s{j + 1}" if e == 1 else f"s{j + 1}^{e}" for j, e in enumerate(exps) if e
            )
            if not syms:
                pieces.append(f"({coeff})")
            else:
                pieces.append(f"({coeff})*{syms}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"FormalSigma({self._nsymbols}, {self})"


def formal_ring(nsymbols: int) -> Ring:
    return Ring(f"formal-sigma-{nsymbols}", FormalSigma.zero(nsymbols), FormalSigma.one(nsymbols))


def zeta_formal(
    nsymbols: int, m: int, n: int, order: int, *, cap: int = DEFAULT_PERMUTATION_CAP
) -> TruncatedSeries:
    """zeta of b * q^m / (1 - q^n) with sym^j(b) left as the formal symbol s_j.

    Substituting concrete sym powers must reproduce zeta_from_sigma; that
    cross-check lives in the test suite.  Negative n is evaluated through
    the rationally-continued block sums at q^{jn} directly.
    """
    if n == 0:
        raise DomainError("the twist exponent n must be nonzero")
    if order < 0:
        raise DomainError("series order must be nonnegative")
    if nsymbols < order:
        raise DomainError("need at least as many symbols as the truncation order")
    ring = formal_ring(nsymbols)
    coeffs = [ring.one]
    for k in range(1, order + 1):
        acc = ring.zero
        for part in partitions_of(k):
            blocks = part.nonzero_blocks()
            mults = tuple(kj for _, kj in blocks)
            args = tuple(_q_power(j * n) for j, _ in blocks)
            c = block_distinct_sum(mults, args, cap=cap)
            if m:
                c = c * _q_power(k * m)
            exps = [0] * nsymbols
            for j, kj in blocks:
                exps[j - 1] = kj
            acc = acc + FormalSigma(nsymbols, {tuple(exps): c})
        coeffs.append(acc)
    return TruncatedSeries(ring, coeffs)


# -- consistency checks used by tests and the verification suite ----------------


@dataclass(frozen=True)
class FuncEqReport:
    """Outcome of the functional-equation check zeta_a(T) = zeta_a(q^n T) * zeta_b(q^m T)."""

    passed: bool
    first_divergence: int | None
    lhs: TruncatedSeries
    rhs: TruncatedSeries


def check_functional_equation(
    b: MotivicClass | IntLaurent | int,
    m: int,
    n: int,
    order: int,
    *,
    a: MotivicClass | None = None,
    cap: int = DEFAULT_PERMUTATION_CAP,
) -> FuncEqReport:
    """Check zeta_a(T) = zeta_a(q^n T) * zeta_b(q^m T) for a = b*q^m/(1-q^n).

    The equation characterizes zeta_a: a = b*q^m + q^n*a splits the defining
    product over i >= 0 into the i = 0 factor and the rest.  When ``a`` is
    passed explicitly it must equal the constructed class.
    """
    if n < 1:
        raise DomainError("the functional equation needs n >= 1")
    if not isinstance(b, MotivicClass):
        b = MotivicClass(b)
    constructed = b * _q_power(m) * (MotivicClass.one() - _q_power(n)).inverse()
    if a is not None and not a == constructed:
        raise DomainError("a must equal b * q^m / (1 - q^n)")
    za = zeta_series(constructed, order, cap=cap)
    zb = zeta_series(b, order, cap=cap)
    rhs = za.scale_t(_q_power(n)) * zb.scale_t(_q_power(m))
    idx = za.first_divergence(rhs)
    return FuncEqReport(idx is None, idx, za, rhs)


_PREFIX_CAP = 24
_PREFIX_ORDER_CAP = 12
_PREFIX_QDEG_CAP = 48


@dataclass(frozen=True)
class PrefixReport:
    """q-adic expansion of a finite prefix of prod_{i>=0} zeta_b(q^{m+in} T).

    tables[k] is the q-expansion (degree <= q_degree) of the T^k coefficient
    of the prefix product, as sorted (exponent, coefficient) pairs.  When
    m + prefix*n exceeds q_degree the next factor cannot disturb anything up
    to that degree (for base classes of nonnegative q-valuation, which holds
    for every class this package feeds it), so the prefix must already agree
    with the prefix one longer; ``stabilized`` records that comparison and
    is None when the threshold is not met.
    """

    prefix: int
    order: int
    q_degree: int
    tables: tuple[tuple[tuple[int, int], ...], ...]
    stabilized: bool | None


def infinite_product_prefix(
    b: MotivicClass | IntLaurent | int,
    m: int,
    n: int,
    prefix: int,
    order: int,
    q_degree: int = 10,
    *,
    cap: int = DEFAULT_PERMUTATION_CAP,
) -> PrefixReport:
    """Expand prod_{i=0}^{prefix-1} zeta_b(q^{m+in} T) q-adically.

    This is the independent oracle for the partition formula: the infinite
    product converges coefficientwise in the q-adic topology, and any prefix
    past the stabilization threshold pins the expansion of zeta_a for
    a = b*q^m/(1-q^n) up to the requested q-degree.
    """
    if n < 1:
        raise DomainError("the infinite-product oracle needs n >= 1")
    if prefix < 1:
        raise DomainError("need at least one factor")
    if prefix > _PREFIX_CAP or order > _PREFIX_ORDER_CAP or q_degree > _PREFIX_QDEG_CAP:
        raise ResourceLimitError("prefix expansion caps exceeded")
    if not isinstance(b, MotivicClass):
        b = MotivicClass(b)
    zb = zeta_series(b, order, cap=cap)

    def tables_for(count: int) -> tuple[tuple[tuple[int, int], ...], ...]:
        prod = TruncatedSeries.one(MOTIVIC, order)
        for i in range(count):
            prod = prod * zb.scale_t(_q_power(m + i * n))
        return tuple(
            tuple(sorted(c.q_expansion(q_degree).items())) for c in prod.coefficients
        )

    tables = tables_for(prefix)
    stabilized: bool | None = None
    if m + prefix * n > q_degree:
        stabilized = tables == tables_for(prefix + 1)
    return PrefixReport(prefix, order, q_degree, tables, stabilized)
