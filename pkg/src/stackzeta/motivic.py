"""Classes in the Grothendieck ring of algebraic stacks.

The ring is the localization of the Grothendieck ring of varieties at the
Lefschetz class L and at L^n - 1 for every n >= 1.  Every element used here
is a fraction

    num(L) / (L^e * (L^{n_1} - 1) * ... * (L^{n_r} - 1))

with an integer-polynomial numerator (nonnegative degrees only; negative
powers of L are folded into e on construction) and a structured denominator
``DenomForm``.  The denominator factors are kept as the multiset of the
exponents n_i, sorted ascending, so classes such as 1/[GL(n)] keep the shape
in which they arise and normalization can cancel factor by factor via exact
division.

Equality is mathematical, by cross-multiplication, so two representations of
the same class always compare equal.  Consequently MotivicClass is not
hashable; caches key on ``structural_key`` of a normalized value instead.

Writing q = L^{-1}, the fractions above are exactly the classes of the form
b * q^m / ((1-q^{n_1})...(1-q^{n_r})) that the zeta engine consumes, since
1/(1-q^n) = L^n/(L^n - 1).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, InternalConsistencyError, NonInvertibleError
from .laurent import IntLaurent, l_minus_one
from .multipoly import MultiPoly


@dataclass(frozen=True)
class DenomForm:
    """Structured denominator L^l_exp * prod(L^n - 1 for n in factors).

    l_exp is nonnegative; factors is a multiset of integers >= 1, stored as
    an ascending tuple.  The trivial denominator is DenomForm(0, ()).
    """

    l_exp: int = 0
    factors: tuple[int, ...] = ()

    def __post_init__(self):
        if self.l_exp < 0:
            raise DomainError("denominator L-exponent must be nonnegative")
        if any(n < 1 for n in self.factors):
            raise DomainError("denominator factors must be exponents >= 1")
        object.__setattr__(self, "factors", tuple(sorted(self.factors)))

    @property
    def is_trivial(self) -> bool:
        return self.l_exp == 0 and not self.factors

    def expand(self) -> IntLaurent:
        """The denominator as an honest polynomial in L."""
        return _expand(self.l_exp, self.factors)

    def times(self, other: DenomForm) -> DenomForm:
        return DenomForm(self.l_exp + other.l_exp, self.factors + other.factors)

    def lcm(self, other: DenomForm) -> DenomForm:
        """Smallest shape both denominators divide (per-factor max multiplicity)."""
        mine, theirs = Counter(self.factors), Counter(other.factors)
        merged: list[int] = []
        for n in sorted(set(mine) | set(theirs)):
            merged.extend([n] * max(mine[n], theirs[n]))
        return DenomForm(max(self.l_exp, other.l_exp), tuple(merged))

    def complement_in(self, target: DenomForm) -> IntLaurent:
        """The polynomial target/self; target must be a multiple of self."""
        mine, theirs = Counter(self.factors), Counter(target.factors)
        missing: list[int] = []
        for n in set(mine) | set(theirs):
            extra = theirs[n] - mine[n]
            if extra < 0:
                raise DomainError("complement_in needs a denominator multiple")
            missing.extend([n] * extra)
        if target.l_exp < self.l_exp:
            raise DomainError("complement_in needs a denominator multiple")
        return _expand(target.l_exp - self.l_exp, tuple(sorted(missing)))

    def __str__(self) -> str:
        parts = []
        if self.l_exp == 1:
            parts.append("L")
        elif self.l_exp > 1:
            parts.append(f"L^{self.l_exp}")
        for n in self.factors:
            parts.append("(L-1)" if n == 1 else f"(L^{n}-1)")
        if not parts:
            return "1"
        return " * ".join(parts)


_TRIVIAL_DEN = DenomForm()


@lru_cache(maxsize=None)
def _expand(l_exp: int, factors: tuple[int, ...]) -> IntLaurent:
    out = IntLaurent.term(l_exp)
    for n in factors:
        out = out * l_minus_one(n)
    return out


def unit_part(p: IntLaurent) -> tuple[int, int, tuple[int, ...]] | None:
    """Factor p as sign * L^a * prod(L^n - 1), or None if p is not of that shape.

    These are exactly the units of the ring, so this is the invertibility
    test.  Greedy extraction of the largest dividing L^n - 1 is correct: if
    p has that shape, the largest n with (L^n - 1) | p equals the largest
    n_i present (a primitive n-th root of unity must be a root, which forces
    n among the n_i).
    """
    if p.is_zero:
        return None
    val = p.min_deg
    body = p.shift(-val)
    factors: list[int] = []
    while True:
        top = body.max_deg
        if top == 0:
            c = body.coefficient(0)
            if c in (1, -1):
                return c, val, tuple(sorted(factors))
            return None
        for n in range(top, 0, -1):
            q = body.divexact(l_minus_one(n))
            if q is not None:
                body = q
                factors.append(n)
                break
        else:
            return None


class MotivicClass:
    """An element of the Grothendieck ring of stacks, kept as an exact fraction.

    Construction folds negative numerator degrees into the denominator
    L-power and canonicalizes zero; full cancellation is ``normalize``.
    Arithmetic coerces ints and IntLaurent values on either side.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num: IntLaurent | int, den: DenomForm = _TRIVIAL_DEN):
        if isinstance(num, int):
            num = IntLaurent.from_int(num)
        if not isinstance(num, IntLaurent) or not isinstance(den, DenomForm):
            raise DomainError("MotivicClass needs an IntLaurent numerator and a DenomForm")
        if num.is_zero:
            num, den = IntLaurent.zero(), _TRIVIAL_DEN
        elif num.min_deg < 0:
            shift = -num.min_deg
            num = num.shift(shift)
            den = DenomForm(den.l_exp + shift, den.factors)
        object.__setattr__(self, "_num", num)
        object.__setattr__(self, "_den", den)

    def __setattr__(self, name, value):
        raise AttributeError("MotivicClass is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> MotivicClass:
        return cls(IntLaurent.zero())

    @classmethod
    def one(cls) -> MotivicClass:
        return cls(IntLaurent.one())

    @classmethod
    def l_power(cls, k: int) -> MotivicClass:
        """L^k for any integer k; negative k lands in the denominator."""
        if k >= 0:
            return cls(IntLaurent.term(k))
        return cls(IntLaurent.one(), DenomForm(-k, ()))

    # -- inspection --------------------------------------------------------

    @property
    def num(self) -> IntLaurent:
        return self._num

    @property
    def den(self) -> DenomForm:
        return self._den

    @property
    def is_zero(self) -> bool:
        return self._num.is_zero

    def structural_key(self) -> tuple:
        """Hashable key of this exact representation (not of the class)."""
        return (tuple(self._num.items()), self._den.l_exp, self._den.factors)

    # -- equality ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._num.is_zero or o._num.is_zero:
            return self._num.is_zero and o._num.is_zero
        if self._den == o._den:
            return self._num == o._num
        return self._num * o._den.expand() == o._num * self._den.expand()

    __hash__ = None  # mathematical equality is incompatible with structural hashing

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> MotivicClass:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._num.is_zero:
            return o
        if o._num.is_zero:
            return self
        den = self._den.lcm(o._den)
        num = self._num * self._den.complement_in(den) + o._num * o._den.complement_in(den)
        return MotivicClass(num, den).normalize()

    __radd__ = __add__

    def __neg__(self) -> MotivicClass:
        return MotivicClass(-self._num, self._den)

    def __sub__(self, other) -> MotivicClass:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> MotivicClass:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    _ONE_KEY = (((0, 1),), 0, ())

    def __mul__(self, other) -> MotivicClass:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._num.is_zero or o._num.is_zero:
            return MotivicClass.zero()
        if o.structural_key() == MotivicClass._ONE_KEY:
            return self
        if self.structural_key() == MotivicClass._ONE_KEY:
            return o
        return MotivicClass(self._num * o._num, self._den.times(o._den)).normalize()

    __rmul__ = __mul__

    def __truediv__(self, other) -> MotivicClass:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> MotivicClass:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> MotivicClass:
        if not isinstance(n, int):
            raise DomainError("class exponents must be integers")
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return MotivicClass.one()
        if n == 1:
            return self
        den = DenomForm(self._den.l_exp * n, self._den.factors * n)
        return MotivicClass(self._num ** n, den).normalize()

    # -- canonicalization ----------------------------------------------------

    def normalize(self) -> MotivicClass:
        """Cancel denominator factors and shared L-powers by exact division."""
        if self._num.is_zero:
            return MotivicClass.zero()
        num = self._num
        l_exp = self._den.l_exp
        kept: list[int] = []
        pending = sorted(self._den.factors, reverse=True)
        while pending:
            if num.coeff_sum() != 0:
                # num(1) != 0 rules out division by any L^n - 1
                kept.extend(pending)
                break
            n = pending.pop(0)
            q = num.divexact(l_minus_one(n))
            if q is None:
                kept.append(n)
            else:
                num = q
        val = num.min_deg
        if val > 0 and l_exp > 0:
            g = min(val, l_exp)
            num = num.shift(-g)
            l_exp -= g
        return MotivicClass(num, DenomForm(l_exp, tuple(kept)))

    def inverse(self) -> MotivicClass:
        """1/self; defined exactly for units sign * L^a * prod(L^n - 1)."""
        a = self.normalize()
        uf = unit_part(a._num)
        if uf is None:
            raise NonInvertibleError(f"class is not a unit of the ring: {a}")
        sign, lpow, factors = uf
        num = a._den.expand()
        if sign < 0:
            num = -num
        return MotivicClass(num, DenomForm(lpow, factors)).normalize()

    # -- maps out of the ring --------------------------------------------------

    def eval_rational(self, t: Fraction | int) -> Fraction:
        """Exact value at L = t; poles raise DomainError."""
        t = Fraction(t)
        den = t ** self._den.l_exp
        for n in self._den.factors:
            den *= t ** n - 1
        if den == 0:
            raise DomainError(f"denominator vanishes at L = {t}")
        return self._num.eval_rational(t) / den

    def q_expansion(self, max_degree: int) -> dict[int, int]:
        """Laurent expansion in q = L^{-1}, kept to q-degree <= max_degree.

        Each 1/(L^n - 1) = q^n/(1-q^n) expands as the geometric series
        q^n + q^{2n} + ...; the result is the truncated product.
        """
        e = self._den.l_exp
        shift = e + sum(self._den.factors)
        cur: dict[int, int] = {}
        for d, c in self._num.items():
            k = shift - d
            cur[k] = cur.get(k, 0) + c
        for n in self._den.factors:
            nxt: dict[int, int] = {}
            for exp, c in cur.items():
                t = exp
                while t <= max_degree:
                    nxt[t] = nxt.get(t, 0) + c
                    t += n
            cur = {k: v for k, v in nxt.items() if v}
        return {k: v for k, v in cur.items() if v and k <= max_degree}

    def hd_realization(self) -> HDRealization:
        """Hodge-Deligne realization: L goes to uv, denominator kept structured."""
        a = self.normalize()
        uv = MultiPoly.monomial((1, 1))
        return HDRealization(a._num.substitute(uv), a._den.l_exp, a._den.factors)

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        num = str(self._num)
        if self._den.is_trivial:
            return num
        if " " in num or num.startswith("-"):
            num = f"({num})"
        den = str(self._den)
        nparts = (1 if self._den.l_exp else 0) + len(self._den.factors)
        if nparts > 1:
            den = f"({den})"
        return f"{num} / {den}"

    def __repr__(self) -> str:
        return f"MotivicClass({self})"

    def to_json(self) -> dict:
        if self._num.is_zero:
            num = {"min_deg": 0, "coeffs": [0]}
        else:
            lo, hi = self._num.min_deg, self._num.max_deg
            num = {"min_deg": lo, "coeffs": [self._num.coefficient(d) for d in range(lo, hi + 1)]}
        return {"num": num, "den": {"l_exp": self._den.l_exp, "factors": list(self._den.factors)}}

    @classmethod
    def from_json(cls, data: dict) -> MotivicClass:
        lo = data["num"]["min_deg"]
        num = IntLaurent({lo + i: c for i, c in enumerate(data["num"]["coeffs"])})
        den = DenomForm(data["den"]["l_exp"], tuple(data["den"]["factors"]))
        return cls(num, den)


def _coerce(x) -> MotivicClass | None:
    if isinstance(x, MotivicClass):
        return x
    if isinstance(x, int):
        return MotivicClass(x)
    if isinstance(x, IntLaurent):
        return MotivicClass(x)
    return None


def divide_exact_int(a: MotivicClass, d: int) -> MotivicClass:
    """a/d for an integer d that must divide every numerator coefficient.

    Failure means an identity that guarantees exactness was violated, so it
    raises InternalConsistencyError rather than DomainError.
    """
    if d == 0:
        raise DomainError("division by zero")
    terms = {}
    for deg, c in a.num.items():
        if c % d:
            raise InternalConsistencyError(f"inexact integer division of {a} by {d}")
        terms[deg] = c // d
    return MotivicClass(IntLaurent(terms), a.den)


@dataclass(frozen=True)
class HDRealization:
    """Image of a class under E: num(uv) / ((uv)^l_exp * prod((uv)^n - 1))."""

    num: MultiPoly
    l_exp: int
    factors: tuple[int, ...]

    @property
    def is_polynomial(self) -> bool:
        return self.l_exp == 0 and not self.factors

    def __str__(self) -> str:
        num = str(self.num)
        if self.l_exp == 0 and not self.factors:
            return num
        if " " in num or num.startswith("-"):
            num = f"({num})"
        parts = []
        if self.l_exp == 1:
            parts.append("(u*v)")
        elif self.l_exp > 1:
            parts.append(f"(u*v)^{self.l_exp}")
        parts.extend("((u*v)-1)" if n == 1 else f"((u*v)^{n}-1)" for n in self.factors)
        den = " * ".join(parts)
        if len(parts) > 1:
            den = f"({den})"
        return f"{num} / {den}"

    def to_json(self) -> dict:
        return {
            "num": self.num.to_json(),
            "den": {"l_exp": self.l_exp, "factors": list(self.factors), "base": "u*v"},
        }


# -- standard classes ---------------------------------------------------------


def gl_class(n: int) -> MotivicClass:
    """[GL(n)] = prod_{j=0}^{n-1} (L^n - L^j), a polynomial class."""
    if n < 0:
        raise DomainError("GL(n) needs n >= 0")
    out = IntLaurent.one()
    for j in range(n):
        out = out * (IntLaurent.term(n) - IntLaurent.term(j))
    return MotivicClass(out)


def bgl_class(n: int) -> MotivicClass:
    """[BGL(n)] = 1/[GL(n)], stored with the denominator in factored shape."""
    if n < 0:
        raise DomainError("BGL(n) needs n >= 0")
    return MotivicClass(IntLaurent.one(), DenomForm(n * (n - 1) // 2, tuple(range(1, n + 1))))


def grassmannian_class(k: int, n: int) -> MotivicClass:
    """[Gr(k, n)], the Gaussian binomial (n choose k)_L; always a polynomial."""
    if not 0 <= k <= n:
        raise DomainError("Gr(k, n) needs 0 <= k <= n")
    num = IntLaurent.one()
    den = IntLaurent.one()
    for i in range(1, k + 1):
        num = num * l_minus_one(n - k + i)
        den = den * l_minus_one(i)
    q = num.divexact(den)
    if q is None:
        raise InternalConsistencyError("Gaussian binomial division failed")
    return MotivicClass(q)
