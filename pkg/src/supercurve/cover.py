"""Symbolic verifier for the Hermitian-cover substitutions.

A substitution (y, z) -> (Y^e1, Y^e2 Z^e3) with exponents affine-linear in a
parameter m is pushed through 1 + y^a + z^b y^c; after multiplying by a
declared unit monomial the term multiset must equal the Hermitian relation's
term multiset exactly:

  case 1:  1 + Y^(nm) + Z^(nm)            (the curve 1 + Y^(p+1) + Z^(p+1) = 0,  p+1 = nm)
  case 2:  Y^(nm+d-1) + Y + Z^(nm+d)      (the curve Y^p + Y = -Z^(p+1),  p+1 = nm+d)

Everything is exact integer arithmetic in Z[m]; a numeric spot-check maps
random Hermitian points through the substitution at a concrete prime.
"""

import random
from dataclasses import dataclass, replace
from math import gcd
from typing import Optional

from .congruence import TABLE2_CASES, crt_d
from .errors import InvalidParameters, MathematicalMismatch
from .finite_field import PrimeField, QuadExtField, is_prime


@dataclass(frozen=True)
class LinExp:
    """const + slope*m with exact integer components."""

    const: int = 0
    slope: int = 0

    def __add__(self, other: "LinExp") -> "LinExp":
        return LinExp(self.const + other.const, self.slope + other.slope)

    def __sub__(self, other: "LinExp") -> "LinExp":
        return LinExp(self.const - other.const, self.slope - other.slope)

    def __neg__(self) -> "LinExp":
        return LinExp(-self.const, -self.slope)

    def __mul__(self, k: int) -> "LinExp":
        return LinExp(self.const * k, self.slope * k)

    __rmul__ = __mul__

    def evaluate(self, m: int) -> int:
        return self.const + self.slope * m

    def is_zero(self) -> bool:
        return self.const == 0 and self.slope == 0

    def render(self) -> str:
        if self.slope == 0:
            return str(self.const)
        if self.slope == 1:
            s = "m"
        elif self.slope == -1:
            s = "-m"
        else:
            s = f"{self.slope}m"
        if self.const == 0:
            return s
        return f"{s}{'+' if self.const > 0 else '-'}{abs(self.const)}"


@dataclass(frozen=True)
class LaurentTerm:
    """coeff * Y^y * Z^z; canonical multisets merge equal exponent pairs."""

    coeff: int
    y: LinExp
    z: LinExp

    def render(self) -> str:
        if self.coeff == 1:
            sign = "+"
        elif self.coeff == -1:
            sign = "-"
        else:
            sign = f"{self.coeff:+d}"
        return f"{sign} Y^({self.y.render()}) Z^({self.z.render()})"


def _merge(terms) -> tuple[LaurentTerm, ...]:
    acc: dict = {}
    for t in terms:
        key = (t.y, t.z)
        acc[key] = acc.get(key, 0) + t.coeff
    merged = [LaurentTerm(c, y, z) for (y, z), c in acc.items() if c != 0]
    merged.sort(key=lambda t: (t.y.slope, t.y.const, t.z.slope, t.z.const, t.coeff))
    return tuple(merged)


@dataclass(frozen=True)
class CoverSpec:
    a: int
    b: int
    c: int
    case: int
    n: int
    d: Optional[int]
    gamma: int
    y_exp: LinExp           # y -> Y^(y_exp)
    z_exp_y: LinExp         # z -> Y^(z_exp_y) Z^(z_exp_z)
    z_exp_z: LinExp
    unit_y: LinExp          # Y-exponent of the unit monomial multiplied through
    target: tuple[LaurentTerm, ...]

    def relation(self) -> str:
        if self.case == 1:
            return f"1 + Y^({self.n}m) + Z^({self.n}m) = 0"
        return "Y^p + Y = -Z^(p+1)"


def cover_spec(a: int, b: int, c: int, case: int) -> CoverSpec:
    """Build the substitution data for one family and case, checking that
    every exponent division is exact."""
    if b + 2 * c != a:
        raise InvalidParameters(f"b + 2c != a: {b} + 2*{c} != {a}")
    if case not in (1, 2):
        raise InvalidParameters(f"case must be 1 or 2, got {case}")
    gamma = gcd(gcd(a, b), c)
    n = a * b // gamma
    zero = LinExp()
    if case == 1:
        return CoverSpec(
            a=a, b=b, c=c, case=1, n=n, d=None, gamma=gamma,
            y_exp=LinExp(0, b // gamma),
            z_exp_y=LinExp(0, -(c // gamma)),
            z_exp_z=LinExp(0, a // gamma),
            unit_y=zero,
            target=_merge([
                LaurentTerm(1, zero, zero),
                LaurentTerm(1, LinExp(0, n), zero),
                LaurentTerm(1, zero, LinExp(0, n)),
            ]),
        )
    if gcd(a, b) != 1:
        raise InvalidParameters(f"case 2 needs gcd(a, b) = 1, got gcd({a}, {b}) = {gcd(a, b)}")
    d = crt_d(a, b)
    if (d - 2) % a != 0:
        raise InvalidParameters(f"a = {a} does not divide d - 2 = {d - 2}")
    if d % b != 0:
        raise InvalidParameters(f"b = {b} does not divide d = {d}")
    if (c * (d - 2) + a) % (a * b) != 0:
        raise InvalidParameters(f"a*b = {a * b} does not divide c(d-2) + a = {c * (d - 2) + a}")
    return CoverSpec(
        a=a, b=b, c=c, case=2, n=n, d=d, gamma=gamma,
        y_exp=LinExp((d - 2) // a, b // gamma),
        z_exp_y=LinExp(-((c * (d - 2) + a) // (a * b)), -(c // gamma)),
        z_exp_z=LinExp(d // b, a // gamma),
        unit_y=LinExp(1, 0),
        target=_merge([
            LaurentTerm(1, LinExp(d - 1, n), zero),
            LaurentTerm(1, LinExp(1, 0), zero),
            LaurentTerm(1, zero, LinExp(d, n)),
        ]),
    )


@dataclass(frozen=True)
class ProofTranscript:
    spec: CoverSpec
    substituted: tuple[LaurentTerm, ...]
    final: tuple[LaurentTerm, ...]
    target: tuple[LaurentTerm, ...]
    verdict: bool
    mismatches: tuple[str, ...]

    def render_lines(self) -> list[str]:
        s = self.spec
        lines = [
            f"cover ({s.a},{s.b},{s.c}) case {s.case}: n={s.n}"
            + (f" d={s.d}" if s.d is not None else "")
            + f" gamma={s.gamma}",
            f"substitute y -> Y^({s.y_exp.render()})",
            f"substitute z -> Y^({s.z_exp_y.render()}) Z^({s.z_exp_z.render()})",
            f"multiply through by Y^({s.unit_y.render()})",
        ]
        lines += [f"term {t.render()}" for t in self.final]
        lines += [f"want {t.render()}" for t in self.target]
        lines += [f"mismatch {m}" for m in self.mismatches]
        lines.append(f"{'PASS' if self.verdict else 'FAIL'} {s.relation()}")
        return lines

    def render(self) -> str:
        return "\n".join(self.render_lines())


def verify_cover(spec: CoverSpec) -> ProofTranscript:
    """Substitute into 1 + y^a + z^b y^c and compare term multisets."""
    zero = LinExp()
    substituted = _merge([
        LaurentTerm(1, zero, zero),
        LaurentTerm(1, spec.a * spec.y_exp, zero),                      # y^a
        LaurentTerm(1, spec.b * spec.z_exp_y + spec.c * spec.y_exp,     # z^b y^c
                    spec.b * spec.z_exp_z),
    ])
    final = _merge(
        LaurentTerm(t.coeff, t.y + spec.unit_y, t.z) for t in substituted
    )
    verdict = final == spec.target
    mismatches = []
    if not verdict:
        got = {(t.y, t.z): t.coeff for t in final}
        want = {(t.y, t.z): t.coeff for t in spec.target}
        for key in sorted(set(got) | set(want),
                          key=lambda k: (k[0].slope, k[0].const, k[1].slope, k[1].const)):
            if got.get(key, 0) != want.get(key, 0):
                y, z = key
                mismatches.append(
                    f"Y^({y.render()}) Z^({z.render()}): got coefficient "
                    f"{got.get(key, 0)}, want {want.get(key, 0)}"
                )
    return ProofTranscript(
        spec=spec,
        substituted=substituted,
        final=final,
        target=spec.target,
        verdict=verdict,
        mismatches=tuple(mismatches),
    )


def perturb_z_exponent(spec: CoverSpec, delta: int) -> CoverSpec:
    """Negative control: shift the Z-exponent of the z-substitution."""
    return replace(spec, z_exp_z=LinExp(spec.z_exp_z.const + delta, spec.z_exp_z.slope))


def verify_all_table2() -> list[ProofTranscript]:
    """Verify the listed case of every maximal-family table row."""
    out = []
    for (a, b, c), case in TABLE2_CASES:
        out.append(verify_cover(cover_spec(a, b, c, int(case[-1]))))
    return out


# --- numeric spot-check ------------------------------------------------------

def cover_m_value(spec: CoverSpec, p: int) -> int:
    """The integer m with p + 1 = n*m (case 1) or p + 1 = n*m + d (case 2)."""
    offset = 0 if spec.case == 1 else spec.d
    if (p + 1 - offset) % spec.n != 0:
        raise InvalidParameters(
            f"p = {p} does not match: p + 1 - {offset} is not a multiple of n = {spec.n}"
        )
    m = (p + 1 - offset) // spec.n
    if m < 0:
        raise InvalidParameters(f"p = {p} too small for case {spec.case}")
    return m


def smallest_matching_prime(spec: CoverSpec) -> int:
    residue = spec.n - 1 if spec.case == 1 else (spec.d - 1) % spec.n
    k = residue
    while True:
        if k > 2 and k % 2 == 1 and is_prime(k) and gcd(k, spec.a * spec.b) == 1:
            if spec.case == 1 or k + 1 >= spec.d:
                return k
        k += spec.n


def check_cover_numeric(spec: CoverSpec, p: int, samples: int = 200, seed: int = 1) -> int:
    """Map random F_{p^2} points of the Hermitian model through the
    substitution and check they land on 1 + y^a + z^b y^c = 0.

    Returns the number of points checked; raises MathematicalMismatch on the
    first point that misses the curve.
    """
    m = cover_m_value(spec, p)
    field = QuadExtField(PrimeField(p))
    nr = field.nr
    rng = random.Random(seed)
    e_y = spec.y_exp.evaluate(m)
    e_zy = spec.z_exp_y.evaluate(m)
    e_zz = spec.z_exp_z.evaluate(m)

    if spec.case == 1:
        # group the field by norm x^(p+1) = x0^2 - nr*x1^2 once
        by_norm: dict[int, list] = {}
        for z0 in range(p):
            for z1 in range(p):
                by_norm.setdefault((z0 * z0 - nr * z1 * z1) % p, []).append((z0, z1))

    inv2 = pow(2, p - 2, p)
    checked = 0
    while checked < samples:
        if spec.case == 1:
            y_pt = field.random_element(rng, nonzero=True)
            norm_y = (y_pt.u * y_pt.u - nr * y_pt.v * y_pt.v) % p
            z0, z1 = rng.choice(by_norm[(-1 - norm_y) % p])
            z_pt = field.element(z0, z1)
            on_hermitian = (field.one() + y_pt ** (p + 1) + z_pt ** (p + 1)).is_zero()
        else:
            z_pt = field.random_element(rng)
            norm_z = (z_pt.u * z_pt.u - nr * z_pt.v * z_pt.v) % p
            y0 = (-norm_z) * inv2 % p
            y_pt = field.element(y0, rng.randrange(p))
            if y_pt.is_zero():
                continue
            on_hermitian = (y_pt ** p + y_pt + z_pt ** (p + 1)).is_zero()
        if not on_hermitian:
            raise MathematicalMismatch(
                f"sampler produced a point off the Hermitian model at p = {p}"
            )
        y = y_pt ** e_y
        z = (y_pt ** e_zy) * (z_pt ** e_zz)
        value = field.one() + y ** spec.a + (z ** spec.b) * (y ** spec.c)
        if not value.is_zero():
            raise MathematicalMismatch(
                f"cover ({spec.a},{spec.b},{spec.c}) case {spec.case} at p = {p}: "
                f"Hermitian point ({y_pt!r}, {z_pt!r}) maps off the curve "
                f"(residual {value!r})"
            )
        checked += 1
    return checked
