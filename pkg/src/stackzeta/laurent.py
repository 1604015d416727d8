"""Exact integer Laurent polynomials in the Lefschetz symbol L.

Polynomials are sparse maps from degree to nonzero integer coefficient, so
arithmetic is exact at every step.  Negative degrees are allowed; the class
layer on top of this module is responsible for clearing them where its
invariants demand nonnegative numerators.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import DomainError
from .multipoly import MultiPoly


class IntLaurent:
    """Sparse Laurent polynomial in one symbol with int coefficients.

    Immutable and hashable.  The zero polynomial is the empty term map; no
    stored coefficient is ever zero.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for deg, coeff in items:
            if coeff:
                clean[deg] = clean.get(deg, 0) + coeff
                if not clean[deg]:
                    del clean[deg]
        object.__setattr__(self, "_terms", clean)

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> IntLaurent:
        # internal: terms must already be zero-free; the dict is adopted as is
        obj = object.__new__(cls)
        object.__setattr__(obj, "_terms", terms)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("IntLaurent is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> IntLaurent:
        return cls()

    @classmethod
    def one(cls) -> IntLaurent:
        return cls({0: 1})

    @classmethod
    def term(cls, deg: int, coeff: int = 1) -> IntLaurent:
        return cls({deg: coeff})

    @classmethod
    def from_int(cls, n: int) -> IntLaurent:
        return cls({0: n})

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_deg(self) -> int:
        if not self._terms:
            raise DomainError("the zero polynomial has no degree")
        return min(self._terms)

    @property
    def max_deg(self) -> int:
        if not self._terms:
            raise DomainError("the zero polynomial has no degree")
        return max(self._terms)

    def coefficient(self, deg: int) -> int:
        return self._terms.get(deg, 0)

    def coeff_sum(self) -> int:
        """Sum of all coefficients; the value at L = 1."""
        return sum(self._terms.values())

    def items(self) -> Iterator[tuple[int, int]]:
        """Terms as (degree, coefficient), ascending by degree."""
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> IntLaurent | None:
        if isinstance(other, IntLaurent):
            return other
        if isinstance(other, int):
            return IntLaurent.from_int(other)
        return None

    def __add__(self, other) -> IntLaurent:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for deg, coeff in o._terms.items():
            out[deg] = out.get(deg, 0) + coeff
            if not out[deg]:
                del out[deg]
        return IntLaurent._raw(out)

    __radd__ = __add__

    def __neg__(self) -> IntLaurent:
        return IntLaurent._raw({d: -c for d, c in self._terms.items()})

    def __sub__(self, other) -> IntLaurent:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> IntLaurent:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> IntLaurent:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, int] = {}
        get = out.get
        for d1, c1 in self._terms.items():
            for d2, c2 in o._terms.items():
                d = d1 + d2
                v = get(d, 0) + c1 * c2
                if v:
                    out[d] = v
                elif d in out:
                    del out[d]
        return IntLaurent._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntLaurent:
        if not isinstance(n, int) or n < 0:
            raise DomainError("IntLaurent exponents must be nonnegative integers")
        out = IntLaurent.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> IntLaurent:
        """Multiply by L^k."""
        if k == 0:
            return self
        return IntLaurent._raw({d + k: c for d, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items())))

    # -- division ----------------------------------------------------------

    def divexact(self, other) -> IntLaurent | None:
        """Exact quotient self/other, or None when it does not divide.

        Division by zero is a domain error rather than None: it signals a
        caller bug, not a failed divisibility test.
        """
        o = self._coerce(other)
        if o is None or o.is_zero:
            raise DomainError("division by the zero polynomial")
        if self.is_zero:
            return IntLaurent.zero()
        if len(o._terms) == 2:
            lo, hi = min(o._terms), max(o._terms)
            if o._terms[hi] == 1 and o._terms[lo] == -1:
                return self._div_binomial(hi - lo, lo)
        va, vb = self.min_deg, o.min_deg
        rem = {d - va: c for d, c in self._terms.items()}
        div = {d - vb: c for d, c in o._terms.items()}
        deg_b = max(div)
        lc_b = div[deg_b]
        quot: dict[int, int] = {}
        while rem:
            d = max(rem)
            if d < deg_b:
                return None
            c = rem[d]
            if c % lc_b:
                return None
            qc = c // lc_b
            qd = d - deg_b
            quot[qd] = qc
            for db, cb in div.items():
                nd = qd + db
                rem[nd] = rem.get(nd, 0) - qc * cb
                if not rem[nd]:
                    del rem[nd]
        return IntLaurent(quot).shift(va - vb)

    def _div_binomial(self, n: int, lo: int) -> IntLaurent | None:
        """Exact quotient by L^lo * (L^n - 1), linear in the output size.

        Working per residue class mod n, the quotient coefficient at degree e
        is the sum of the dividend coefficients strictly above e in the same
        class, and the division is exact iff every class sums to zero.
        """
        va = self.min_deg
        sums: dict[int, int] = {}
        for d, c in self._terms.items():
            r = (d - va) % n
            sums[r] = sums.get(r, 0) + c
        if any(sums.values()):
            return None
        classes: dict[int, list[tuple[int, int]]] = {}
        for d, c in self._terms.items():
            classes.setdefault((d - va) % n, []).append((d - va, c))
        quot: dict[int, int] = {}
        for terms in classes.values():
            terms.sort(reverse=True)
            s = 0
            for i in range(len(terms) - 1):
                d, c = terms[i]
                s += c
                if not s:
                    continue
                floor = terms[i + 1][0]
                for e in range(d - n, floor - 1, -n):
                    quot[e] = s
        return IntLaurent._raw(quot).shift(va - lo)

    # -- maps out of the ring ------------------------------------------------

    def substitute(self, image: MultiPoly) -> MultiPoly:
        """Evaluate at L = image inside a multivariate polynomial ring.

        Negative degrees have no polynomial image: callers clear them first.
        """
        if not self.is_zero and self.min_deg < 0:
            raise DomainError("negative powers of L must be cleared before substitution")
        out = MultiPoly.zero(image.nvars)
        for deg, coeff in self._terms.items():
            out = out + image ** deg * coeff
        return out

    def eval_rational(self, t: Fraction | int) -> Fraction:
        """Exact value at L = t."""
        t = Fraction(t)
        if t == 0 and not self.is_zero and self.min_deg < 0:
            raise DomainError("evaluation at 0 with negative powers of L")
        total = Fraction(0)
        for deg, coeff in self._terms.items():
            total += coeff * t ** deg
        return total

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for deg, coeff in sorted(self._terms.items(), reverse=True):
            mag = abs(coeff)
            if deg == 0:
                body = str(mag)
            else:
                sym = "L" if deg == 1 else f"L^{deg}"
                body = sym if mag == 1 else f"{mag}*{sym}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"IntLaurent({self})"


#: The symbol L itself.
L = IntLaurent.term(1)


def l_minus_one(n: int) -> IntLaurent:
    """The polynomial L^n - 1."""
    if n < 1:
        raise DomainError("l_minus_one needs n >= 1")
    return IntLaurent({n: 1, 0: -1})
