"""Hodge-Deligne realization, zeta functions of E-polynomials, effectiveness.

The realization sends a motivic class to its Hodge-Deligne polynomial in u, v
via L -> uv; denominators stay structured as powers of (uv)^n - 1.  The zeta
function acts on an E-polynomial P = sum c_{ab} u^a v^b monomial by monomial:

    zeta_P(T) = prod_{a,b} (1 - u^a v^b T)^{-c_{ab}}

which realizes the Kapranov zeta function of any polynomial class.

Effectiveness here means "is the class of an actual variety, or a nonnegative
combination of such".  The checkers are refutation heuristics built on one
fact: the E-polynomial of a nonempty variety of dimension n has top-degree
part ell * (uv)^n with ell >= 1 (count of top-dimensional components), and
nonnegative combinations preserve that shape.  A violating top part therefore
refutes effectiveness conclusively; the passing verdict is only
"effective-candidate", never a proof.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import DomainError
from .laurent import IntLaurent
from .motivic import DenomForm, MotivicClass, bgl_class
from .multipoly import MultiPoly
from .power import LambdaProvider, binomial_series, opposite_provider, opposite_series
from .series import TruncatedSeries, hd_ring
from .zeta import motivic_provider, zeta_series

EFFECTIVE_CANDIDATE = "effective-candidate"
NOT_EFFECTIVE = "not-effective"
INCONCLUSIVE = "inconclusive (denominator shape)"


def hd_zeta(poly: MultiPoly, order: int) -> TruncatedSeries:
    """zeta of an E-polynomial: the monomial-wise geometric product."""
    if order < 0:
        raise DomainError("series order must be nonnegative")
    ring = hd_ring(poly.nvars)
    out = TruncatedSeries.one(ring, order)
    for exps, coeff in poly.items():
        mono = MultiPoly.monomial(exps)
        if coeff > 0:
            geo = TruncatedSeries.build(ring, order, lambda k, m=mono: m ** k)
            factor = geo ** coeff
        else:
            lin = [ring.one]
            if order >= 1:
                lin.append(-mono)
                lin.extend([ring.zero] * (order - 1))
            factor = TruncatedSeries(ring, lin) ** (-coeff)
        out = out * factor
    return out


def hd_provider(nvars: int = 2) -> LambdaProvider:
    """The E-polynomial zeta function as a lambda provider."""
    return LambdaProvider("hd-zeta", hd_ring(nvars), hd_zeta)


def hd_opposite_provider(nvars: int = 2) -> LambdaProvider:
    """The opposite of the E-polynomial provider."""
    return opposite_provider(hd_provider(nvars))


# -- effectiveness --------------------------------------------------------------


@dataclass(frozen=True)
class EffectivenessResult:
    verdict: str
    witness: MultiPoly | None = None
    detail: str = ""

    @property
    def refuted(self) -> bool:
        return self.verdict == NOT_EFFECTIVE

    def __str__(self) -> str:
        out = self.verdict
        if self.witness is not None:
            out += f"; witness: {self.witness}"
        if self.detail:
            out += f" [{self.detail}]"
        return out


def check_polynomial_effectiveness(poly: MultiPoly) -> EffectivenessResult:
    """Refutation heuristic on an E-polynomial in u, v.

    not-effective is conclusive (the top-degree part cannot come from any
    nonnegative combination of varieties); effective-candidate is not a
    proof of effectiveness.
    """
    if poly.nvars != 2:
        raise DomainError("effectiveness is checked on polynomials in u, v")
    if poly.is_zero:
        return EffectivenessResult(EFFECTIVE_CANDIDATE, detail="zero polynomial")
    top = poly.top_part()
    terms = list(top.items())
    if len(terms) == 1:
        (a, b), coeff = terms[0]
        if a == b and coeff > 0:
            return EffectivenessResult(
                EFFECTIVE_CANDIDATE, detail=f"top part {coeff}*(uv)^{a}"
            )
    return EffectivenessResult(NOT_EFFECTIVE, witness=top, detail="top-degree part not ell*(uv)^n")


def check_class_effectiveness(a: MotivicClass) -> EffectivenessResult:
    """Refutation heuristic on a motivic class.

    The denominator must be a product of [GL(r)]-shapes: factors are matched
    greedily as staircases {1, ..., r} (largest remaining exponent fixes r).
    Powers of L are units and never affect the verdict: a missing L-power is
    moved into the numerator and an excess one is discarded, so the verdict
    is invariant under multiplication by L^{+-1}.  A denominator that is not
    a product of staircases yields the inconclusive verdict: the class may
    still be ineffective, but this test cannot tell.
    """
    norm = a.normalize()
    if norm.is_zero:
        return EffectivenessResult(EFFECTIVE_CANDIDATE, detail="zero class")
    remaining = Counter(norm.den.factors)
    ranks: list[int] = []
    while remaining:
        r = max(remaining)
        for j in range(1, r + 1):
            if remaining[j] <= 0:
                return EffectivenessResult(
                    INCONCLUSIVE,
                    detail=f"denominator factors {norm.den.factors} are not GL-staircases",
                )
            remaining[j] -= 1
            if not remaining[j]:
                del remaining[j]
        ranks.append(r)
    needed_l = sum(r * (r - 1) // 2 for r in ranks)
    deficit = needed_l - norm.den.l_exp
    num = norm.num.shift(deficit) if deficit > 0 else norm.num
    realized = num.substitute(MultiPoly.monomial((1, 1)))
    inner = check_polynomial_effectiveness(realized)
    shape = f"numerator against GL ranks {tuple(ranks)}" if ranks else "polynomial class"
    return EffectivenessResult(inner.verdict, inner.witness, f"{shape}; {inner.detail}")


# -- the two non-effectiveness reproductions ------------------------------------


@dataclass(frozen=True)
class CounterexampleReport:
    name: str
    passed: bool
    coefficient: object
    effectiveness: EffectivenessResult
    notes: tuple[str, ...] = ()

    def __str__(self) -> str:
        head = f"{self.name}: {'ok' if self.passed else 'FAILED'}"
        body = [f"  T^2 coefficient: {self.coefficient}", f"  effectiveness: {self.effectiveness}"]
        body.extend(f"  {n}" for n in self.notes)
        return "\n".join([head] + body)


def curve_opposite_counterexample() -> CounterexampleReport:
    """Opposite power structure on the class of a genus-1 curve.

    For e = 1 - u - v + uv (the E-polynomial of a smooth projective genus-1
    curve), the T^2 coefficient of (1 + T)^e under the opposite power
    structure equals e^2 - sym^2(e), and its top-degree part -u^2v - uv^2
    refutes effectiveness.  So the opposite structure, unlike the Kapranov
    one, does not preserve effectivity.
    """
    u = MultiPoly.variable(2, 0)
    v = MultiPoly.variable(2, 1)
    e = MultiPoly.one(2) - u - v + u * v
    opp = opposite_series(hd_zeta(e, 2))
    c2 = opp.coefficient(2)
    expected = (
        -(u ** 2 * v) - u * v ** 2 + u ** 2 + v ** 2 + 2 * u * v - u - v
    )
    notes = []
    passed = True
    if not opp.coefficient(1) == e:
        passed = False
        notes.append(f"T coefficient {opp.coefficient(1)} != {e}")
    if not c2 == expected:
        passed = False
        notes.append(f"T^2 coefficient differs from {expected}")
    binom = binomial_series(e, 2, hd_opposite_provider())
    if not binom.coefficient(2) == c2:
        passed = False
        notes.append("(1+T)^e under the opposite provider disagrees with the direct series")
    eff = check_polynomial_effectiveness(c2)
    if not eff.refuted:
        passed = False
        notes.append("expected a refutation")
    expected_witness = -(u ** 2 * v) - u * v ** 2
    if eff.witness is None or not eff.witness == expected_witness:
        passed = False
        notes.append(f"expected witness {expected_witness}, got {eff.witness}")
    notes.append(f"series: {opp}")
    return CounterexampleReport("curve-opposite", passed, c2, eff, tuple(notes))


def stack_power_counterexample(order: int = 2) -> CounterexampleReport:
    """The power structure on stack classes does not preserve effectivity.

    With m = [BGL(1)] = 1/(L-1), the series (1 + T)^m is computed two ways:
    through the power structure and as zeta_m(T)/zeta_m(T^2) (valid since
    (1+T) = (1-T^2)/(1-T) and (1-T)^{-m} = zeta_m).  Its T^2 coefficient is
    (-L^3 + L^2 + L)/[GL(2)], whose realization has top part -(uv)^3, so no
    stacky analogue of "effective" survives this power structure.
    """
    if order < 2:
        raise DomainError("the refutation lives at T^2; need order >= 2")
    m = bgl_class(1)
    provider = motivic_provider()
    via_power = binomial_series(m, order, provider)
    zm = zeta_series(m, order)
    via_ratio = zm * zm.substitute_tk(2).inverse()
    target = MotivicClass(IntLaurent({3: -1, 2: 1, 1: 1}), DenomForm(1, (1, 2)))
    notes = []
    passed = True
    div = via_power.first_divergence(via_ratio)
    if div is not None:
        passed = False
        notes.append(f"power and ratio routes diverge at T^{div}")
    if not via_power.coefficient(1) == m:
        passed = False
        notes.append("T coefficient is not [BGL(1)]")
    c2 = via_power.coefficient(2)
    if not c2 == target:
        passed = False
        notes.append(f"T^2 coefficient {c2} != {target}")
    eff = check_class_effectiveness(c2)
    if not eff.refuted:
        passed = False
        notes.append("expected a refutation")
    notes.append(f"series: {via_power}")
    return CounterexampleReport("stack-power", passed, c2, eff, tuple(notes))
