"""Superspeciality test for the trigonal quintic x y z^3 + s x^5 + t y^5 = 0.

The desingularized curve is superspecial exactly when 25 specific
coefficients of (x y z^3 + s x^5 + t y^5)^(p-1) vanish.  Each coefficient is
a single multinomial term located by solving a small integer linear system,
so the whole test costs O(p) (factorial tables) + O(1) per monomial.
"""

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import DegenerateParameters, InvalidParameters
from .finite_field import (
    FieldElement,
    PrimeField,
    QuadExtField,
    is_prime,
    multinomial_mod_p,
)

ExponentTriple = tuple[int, int, int]

# Degree-5 exponent vectors generating the monomial grid: row r, column c of
# the 5x5 coefficient matrix holds the monomial p*BASE[r] - BASE[c].
MONOMIAL_BASE: tuple[ExponentTriple, ...] = (
    (3, 1, 1),
    (1, 3, 1),
    (2, 2, 1),
    (2, 1, 2),
    (1, 2, 2),
)


def _explicit_triples(p: int) -> tuple[ExponentTriple, ...]:
    # The authoritative flat list, row-major.  Kept verbatim rather than
    # produced by the generator loop so the two can cross-check each other.
    return (
        (3 * p - 3, p - 1, p - 1),
        (3 * p - 1, p - 3, p - 1),
        (3 * p - 2, p - 2, p - 1),
        (3 * p - 2, p - 1, p - 2),
        (3 * p - 1, p - 2, p - 2),
        (p - 3, 3 * p - 1, p - 1),
        (p - 1, 3 * p - 3, p - 1),
        (p - 2, 3 * p - 2, p - 1),
        (p - 2, 3 * p - 1, p - 2),
        (p - 1, 3 * p - 2, p - 2),
        (2 * p - 3, 2 * p - 1, p - 1),
        (2 * p - 1, 2 * p - 3, p - 1),
        (2 * p - 2, 2 * p - 2, p - 1),
        (2 * p - 2, 2 * p - 1, p - 2),
        (2 * p - 1, 2 * p - 2, p - 2),
        (2 * p - 3, p - 1, 2 * p - 1),
        (2 * p - 1, p - 3, 2 * p - 1),
        (2 * p - 2, p - 2, 2 * p - 1),
        (2 * p - 2, p - 1, 2 * p - 2),
        (2 * p - 1, p - 2, 2 * p - 2),
        (p - 3, 2 * p - 1, 2 * p - 1),
        (p - 1, 2 * p - 3, 2 * p - 1),
        (p - 2, 2 * p - 2, 2 * p - 1),
        (p - 2, 2 * p - 1, 2 * p - 2),
        (p - 1, 2 * p - 2, 2 * p - 2),
    )


class MonomialSet25:
    """The 25 degree-5(p-1) monomials whose coefficients decide the test."""

    __slots__ = ("p", "triples")

    def __init__(self, p: int):
        explicit = _explicit_triples(p)
        generated = tuple(
            (p * u - uu, p * v - vv, p * w - ww)
            for (u, v, w) in MONOMIAL_BASE
            for (uu, vv, ww) in MONOMIAL_BASE
        )
        if explicit != generated:
            raise AssertionError("monomial generator disagrees with the explicit list")
        if any(i + j + k != 5 * (p - 1) for (i, j, k) in explicit):
            raise AssertionError("monomial of wrong total degree")
        self.p = p
        self.triples = explicit

    def __len__(self):
        return 25

    def __iter__(self):
        return iter(self.triples)

    def at(self, row: int, col: int) -> ExponentTriple:
        return self.triples[5 * row + col]


class MultinomialSolution(NamedTuple):
    # exponents of (x y z^3), (s x^5), (t y^5) in the single surviving term
    alpha: int
    beta: int
    gamma: int


@dataclass(frozen=True)
class QuinticParams:
    """p > 5 and a pair of units s, t, over F_p or F_{p^2}."""

    field: PrimeField | QuadExtField
    s: FieldElement
    t: FieldElement

    def __post_init__(self):
        p = self.field.p
        if p == 5:
            raise InvalidParameters(
                "p = 5 is unsupported: in characteristic 5 the plane quintic "
                "acquires extra singular points beyond [0:0:1]"
            )
        if p < 5:
            raise InvalidParameters(f"p = {p} is unsupported: the quintic needs p > 5")
        if self.s.field != self.field or self.t.field != self.field:
            raise InvalidParameters("s and t must live in the declared field")
        if self.s.is_zero() or self.t.is_zero():
            raise DegenerateParameters("s and t must be nonzero")

    @property
    def p(self) -> int:
        return self.field.p

    @classmethod
    def make(cls, p: int, s=1, t=1, extension: bool = False) -> "QuinticParams":
        """Build params from ints or (u, v) pairs; pairs force F_{p^2}."""
        if isinstance(s, tuple) or isinstance(t, tuple):
            extension = True
        field = QuadExtField(PrimeField(p)) if extension else PrimeField(p)

        def embed(x):
            if isinstance(x, FieldElement):
                return x
            if isinstance(x, tuple):
                return field.element(*x)
            return field.element(x)

        return cls(field, embed(s), embed(t))


def solve_exponent_system(p: int, triple: ExponentTriple) -> Optional[MultinomialSolution]:
    """The unique (alpha, beta, gamma) with alpha+beta+gamma = p-1,
    alpha+5*beta = i, alpha+5*gamma = j, 3*alpha = k, or None.

    Row reduction turns the system into 15*gamma = i + 4j - 5(p-1); the
    candidate from that pivot is accepted only if it satisfies all four
    original equations with every component in [0, p-1], which also rejects
    triples of the wrong total degree.
    """
    i, j, k = triple
    if min(i, j, k) < 0:
        raise InvalidParameters(f"exponents must be nonnegative, got {triple}")
    rhs = i + 4 * j - 5 * (p - 1)
    if rhs % 15 != 0:
        return None
    gamma = rhs // 15
    beta = -j + (p - 1) + 4 * gamma
    alpha = (p - 1) - beta - gamma
    if not (0 <= alpha <= p - 1 and 0 <= beta <= p - 1 and 0 <= gamma <= p - 1):
        return None
    # re-check the full original system, not just the reduced rows
    if alpha + beta + gamma != p - 1:
        return None
    if alpha + 5 * beta != i or alpha + 5 * gamma != j or 3 * alpha != k:
        return None
    return MultinomialSolution(alpha, beta, gamma)


def coefficient(params: QuinticParams, triple: ExponentTriple) -> FieldElement:
    """Coefficient of x^i y^j z^k in (x y z^3 + s x^5 + t y^5)^(p-1)."""
    p = params.p
    i, j, k = triple
    if i + j + k != 5 * (p - 1):
        raise InvalidParameters(
            f"degree mismatch: {i}+{j}+{k} != 5(p-1) = {5 * (p - 1)}"
        )
    sol = solve_exponent_system(p, triple)
    if sol is None:
        return params.field.zero()
    base = params.field.base if isinstance(params.field, QuadExtField) else params.field
    m = multinomial_mod_p(base, sol.alpha, sol.beta, sol.gamma)
    return (params.s ** sol.beta) * (params.t ** sol.gamma) * m


@dataclass(frozen=True)
class HWReport:
    """The 25 coefficients, arranged 5x5, plus the all-zero verdict."""

    p: int
    s: FieldElement
    t: FieldElement
    monomials: MonomialSet25
    coefficients: dict
    matrix: tuple
    superspecial: bool

    def __post_init__(self):
        assert self.superspecial == all(c.is_zero() for c in self.coefficients.values())

    def nonzero_triples(self) -> list[ExponentTriple]:
        return [tr for tr in self.monomials if not self.coefficients[tr].is_zero()]


def hasse_witt_matrix(params: QuinticParams) -> HWReport:
    monomials = MonomialSet25(params.p)
    coeffs = {tr: coefficient(params, tr) for tr in monomials}
    matrix = tuple(
        tuple(coeffs[monomials.at(r, c)] for c in range(5)) for r in range(5)
    )
    verdict = all(c.is_zero() for c in coeffs.values())
    return HWReport(
        p=params.p,
        s=params.s,
        t=params.t,
        monomials=monomials,
        coefficients=coeffs,
        matrix=matrix,
        superspecial=verdict,
    )


def superspecial_predicted(p: int) -> bool:
    """Congruence form of the verdict: p = 11 or 14 mod 15."""
    if not is_prime(p) or p <= 5:
        raise InvalidParameters(f"p = {p} must be a prime > 5")
    return p % 15 in (11, 14)
