"""Sparse multivariate integer polynomials.

Used for Hodge-Deligne polynomials in u, v (two variables) and for the
truncated expansions of the distinct-exponent generating functions in
q_1..q_k.  Exponent tuples are the keys; coefficients are nonzero ints.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import DomainError

Exponents = tuple[int, ...]


def _names(nvars: int) -> tuple[str, ...]:
    if nvars == 2:
        return ("u", "v")
    return tuple(f"q{i + 1}" for i in range(nvars))


class MultiPoly:
    """Immutable sparse polynomial in a fixed number of variables."""

    __slots__ = ("_nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, int] | Iterable[tuple[Exponents, int]] = ()):
        if nvars < 1:
            raise DomainError("MultiPoly needs at least one variable")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponents, int] = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise DomainError(f"bad exponent tuple {exps!r} for {nvars} variables")
            if coeff:
                clean[exps] = clean.get(exps, 0) + coeff
                if not clean[exps]:
                    del clean[exps]
        object.__setattr__(self, "_nvars", nvars)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> MultiPoly:
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def constant(cls, nvars: int, c: int) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, index: int) -> MultiPoly:
        if not 0 <= index < nvars:
            raise DomainError(f"variable index {index} out of range")
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {exps: 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> MultiPoly:
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff})

    # -- inspection --------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exps: Iterable[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def items(self) -> Iterator[tuple[Exponents, int]]:
        """Terms as (exponents, coefficient), descending lexicographic."""
        return iter(sorted(self._terms.items(), reverse=True))

    def total_degree(self) -> int:
        if not self._terms:
            raise DomainError("the zero polynomial has no degree")
        return max(sum(e) for e in self._terms)

    def top_part(self) -> MultiPoly:
        """Homogeneous part of highest total degree."""
        d = self.total_degree()
        return MultiPoly(self._nvars, {e: c for e, c in self._terms.items() if sum(e) == d})

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> MultiPoly | None:
        if isinstance(other, MultiPoly):
            if other._nvars != self._nvars:
                raise DomainError("variable-count mismatch")
            return other
        if isinstance(other, int):
            return MultiPoly.constant(self._nvars, other)
        return None

    def __add__(self, other) -> MultiPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for exps, coeff in o._terms.items():
            out[exps] = out.get(exps, 0) + coeff
            if not out[exps]:
                del out[exps]
        return MultiPoly(self._nvars, out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self._nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> MultiPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> MultiPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> MultiPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
                if not out[e]:
                    del out[e]
        return MultiPoly(self._nvars, out)

    __rmul__ = __mul__

    def mul_truncated(self, other: MultiPoly, max_total: int) -> MultiPoly:
        """Product with terms above the given total degree discarded."""
        o = self._coerce(other)
        out: dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            d1 = sum(e1)
            for e2, c2 in o._terms.items():
                if d1 + sum(e2) > max_total:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
                if not out[e]:
                    del out[e]
        return MultiPoly(self._nvars, out)

    def __pow__(self, n: int) -> MultiPoly:
        if not isinstance(n, int) or n < 0:
            raise DomainError("MultiPoly exponents must be nonnegative integers")
        out = MultiPoly.one(self._nvars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(self._nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._nvars, tuple(sorted(self._terms.items()))))

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        names = _names(self._nvars)
        pieces: list[str] = []
        for exps, coeff in sorted(self._terms.items(), reverse=True):
            mag = abs(coeff)
            syms = []
            for name, e in zip(names, exps):
                if e == 1:
                    syms.append(name)
                elif e > 1:
                    syms.append(f"{name}^{e}")
            if not syms:
                body = str(mag)
            else:
                stem = "*".join(syms)
                body = stem if mag == 1 else f"{mag}*{stem}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"MultiPoly({self._nvars}, {self})"

    def to_json(self) -> dict:
        return {
            "nvars": self._nvars,
            "terms": [[list(e), c] for e, c in sorted(self._terms.items(), reverse=True)],
        }

    @classmethod
    def from_json(cls, data: dict) -> MultiPoly:
        return cls(data["nvars"], {tuple(e): c for e, c in data["terms"]})
