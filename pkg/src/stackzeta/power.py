"""Power structures induced by a pre-lambda structure.

A lambda provider hands out the series lambda_b(T) = 1 + b T + ... for ring
elements b.  Any series A(T) with constant term 1 then factors uniquely as

    A(T) = prod_{k>=1} lambda_{b_k}(T^k)

(greedily: b_k is the T^k coefficient left after stripping the first k-1
factors), and the power structure raises A to a ring-element exponent m by

    A(T)^m := prod_{k>=1} lambda_{m * b_k}(T^k).

Everything here is generic over the coefficient ring; the Kapranov and
Hodge-Deligne providers live next to their zeta functions.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .errors import DomainError
from .series import Ring, TruncatedSeries


@dataclass(frozen=True, eq=False)
class LambdaProvider:
    """A pre-lambda structure: element b and order N give lambda_b(T) to T^N."""

    name: str
    ring: Ring
    fn: Callable[[Any, int], TruncatedSeries]

    def series(self, element: Any, order: int) -> TruncatedSeries:
        if not self.ring.is_member(element):
            raise DomainError(f"element does not lie in the {self.ring.name} ring")
        return self.fn(element, order)


def _element_key(element: Any):
    """A hashable identity for a ring element, or None if it has none."""
    sk = getattr(element, "structural_key", None)
    if callable(sk):
        return ("s", sk())
    try:
        hash(element)
    except TypeError:
        return None
    return ("h", element)


def _series_key(series: TruncatedSeries):
    parts = []
    for c in series.coefficients:
        k = _element_key(c)
        if k is None:
            return None
        parts.append(k)
    return (series.ring.name, series.order, tuple(parts))


_provider_caches: "weakref.WeakKeyDictionary[LambdaProvider, dict]" = weakref.WeakKeyDictionary()


def _cache_for(provider: LambdaProvider) -> dict:
    cache = _provider_caches.get(provider)
    if cache is None:
        cache = {}
        _provider_caches[provider] = cache
    return cache


def lambda_factorize(series: TruncatedSeries, provider: LambdaProvider) -> tuple:
    """The unique elements (b_1, ..., b_N) with series = prod lambda_{b_k}(T^k)."""
    if series.ring != provider.ring:
        raise DomainError("series ring does not match the provider")
    ring = provider.ring
    if not series.coefficient(0) == ring.one:
        raise DomainError("lambda factorization needs constant term 1")
    skey = _series_key(series)
    ckey = ("factorize", skey) if skey is not None else None
    cache = _cache_for(provider)
    if ckey is not None and ckey in cache:
        return cache[ckey]
    order = series.order
    residual = series
    out = []
    for k in range(1, order + 1):
        bk = residual.coefficient(k)
        out.append(bk)
        if bk == ring.zero:
            continue
        lam = provider.series(bk, order).substitute_tk(k)
        residual = residual * lam.inverse()
    result = tuple(out)
    if ckey is not None:
        cache[ckey] = result
    return result


def power(series: TruncatedSeries, exponent: Any, provider: LambdaProvider) -> TruncatedSeries:
    """series^exponent under the provider's power structure.

    The exponent must lie in the provider's coefficient ring; cross-ring
    exponentiation is rejected.
    """
    if not provider.ring.is_member(exponent):
        raise DomainError(f"exponent does not lie in the {provider.ring.name} ring")
    skey = _series_key(series)
    ekey = _element_key(exponent)
    ckey = ("power", skey, ekey) if skey is not None and ekey is not None else None
    cache = _cache_for(provider)
    if ckey is not None and ckey in cache:
        return cache[ckey]
    bs = lambda_factorize(series, provider)
    ring = provider.ring
    order = series.order
    out = TruncatedSeries.one(ring, order)
    for k, bk in enumerate(bs, start=1):
        if bk == ring.zero:
            continue
        out = out * provider.series(exponent * bk, order).substitute_tk(k)
    if ckey is not None:
        cache[ckey] = out
    return out


def binomial_series(exponent: Any, order: int, provider: LambdaProvider) -> TruncatedSeries:
    """(1 + T)^exponent under the provider's power structure."""
    ring = provider.ring
    coeffs = [ring.one] * min(2, order + 1) + [ring.zero] * max(order - 1, 0)
    one_plus_t = TruncatedSeries(ring, tuple(coeffs))
    return power(one_plus_t, exponent, provider)


def opposite_series(series: TruncatedSeries) -> TruncatedSeries:
    """(A(-T))^{-1}: the opposite of a pre-lambda series, itself pre-lambda."""
    ring = series.ring
    if not series.coefficient(0) == ring.one:
        raise DomainError("opposite needs constant term 1")
    alt = TruncatedSeries(
        ring, tuple(c if k % 2 == 0 else -c for k, c in enumerate(series.coefficients))
    )
    return alt.inverse()


def opposite_provider(provider: LambdaProvider) -> LambdaProvider:
    """The opposite pre-lambda structure of a provider."""
    return LambdaProvider(
        f"{provider.name}-opposite",
        provider.ring,
        lambda element, order: opposite_series(provider.fn(element, order)),
    )


# -- axiom suite ----------------------------------------------------------------


@dataclass(frozen=True)
class AxiomSample:
    """One randomized test point: two series, two exponents, a substitution index."""

    a: TruncatedSeries
    b: TruncatedSeries
    m: Any
    n: Any
    k: int = 2


@dataclass(frozen=True)
class AxiomCheck:
    axiom: int
    description: str
    passed: bool
    witness: str | None = None


@dataclass(frozen=True)
class AxiomReport:
    provider: str
    order: int
    checks: tuple[AxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[AxiomCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)


_AXIOMS = (
    (1, "A^0 = 1"),
    (2, "A^1 = A"),
    (3, "(A*B)^m = A^m * B^m"),
    (4, "A^(m+n) = A^m * A^n"),
    (5, "A^(m*n) = (A^n)^m"),
    (6, "(1+T)^m = 1 + m*T + O(T^2)"),
    (7, "A(T^k)^m = (A^m)(T^k)"),
)


def axiom_suite(provider: LambdaProvider, samples: Sequence[AxiomSample], order: int) -> AxiomReport:
    """Check the seven power-structure axioms on the given samples.

    Every axiom is evaluated on every sample; the first witness per axiom is
    kept.  Series in the samples are truncated to the requested order.
    """
    ring = provider.ring
    one_series = TruncatedSeries.one(ring, order)

    def run(axiom: int, description: str) -> AxiomCheck:
        for idx, s in enumerate(samples):
            a = s.a.truncate(min(order, s.a.order))
            b = s.b.truncate(min(order, s.b.order))
            if axiom == 1:
                lhs, rhs = power(a, ring.zero, provider), one_series
            elif axiom == 2:
                lhs, rhs = power(a, ring.one, provider), a
            elif axiom == 3:
                lhs = power(a * b, s.m, provider)
                rhs = power(a, s.m, provider) * power(b, s.m, provider)
            elif axiom == 4:
                lhs = power(a, s.m + s.n, provider)
                rhs = power(a, s.m, provider) * power(a, s.n, provider)
            elif axiom == 5:
                lhs = power(a, s.m * s.n, provider)
                rhs = power(power(a, s.n, provider), s.m, provider)
            elif axiom == 6:
                lhs = binomial_series(s.m, order, provider).truncate(min(1, order))
                rhs = TruncatedSeries(ring, tuple([ring.one, s.m][: order + 1]))
            else:
                lhs = power(a.substitute_tk(s.k), s.m, provider)
                rhs = power(a, s.m, provider).substitute_tk(s.k)
            if not lhs == rhs:
                witness = f"sample {idx}: lhs = {lhs}; rhs = {rhs}"
                return AxiomCheck(axiom, description, False, witness)
        return AxiomCheck(axiom, description, True)

    return AxiomReport(provider.name, order, tuple(run(i, d) for i, d in _AXIOMS))
