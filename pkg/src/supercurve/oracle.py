"""Brute-force reference implementations.

Everything here exists to validate the fast paths and is guarded to desk
scale: dense expansion of the quintic power, projective plane-model point
counts by literal evaluation, and the Jacobian singular-point scan.
"""

import numpy as np

from . import _vec
from .errors import InvalidParameters
from .finite_field import FieldElement, PrimeField, QuadExtField, is_prime
from .pointcount import FamilyParams

_EXPAND_PRIMES = (7, 11, 13, 17, 19)
_SCAN_LIMIT = 2 * 10**4


class DensePoly3:
    """Sparse exponent-map polynomial in x, y, z over one field."""

    __slots__ = ("field", "coeffs", "degree_bound")

    def __init__(self, field, coeffs: dict, degree_bound: int):
        for (i, j, k), value in coeffs.items():
            if value.is_zero():
                raise AssertionError("zero coefficient stored")
            if i + j + k > degree_bound:
                raise AssertionError(f"term {(i, j, k)} exceeds degree bound {degree_bound}")
        self.field = field
        self.coeffs = coeffs
        self.degree_bound = degree_bound

    def coefficient(self, triple) -> FieldElement:
        return self.coeffs.get(tuple(triple), self.field.zero())

    def total(self) -> FieldElement:
        """Sum of all coefficients = value at x = y = z = 1."""
        acc = self.field.zero()
        for value in self.coeffs.values():
            acc = acc + value
        return acc

    def __len__(self):
        return len(self.coeffs)

    def items(self):
        return self.coeffs.items()


def _mul_sparse(a: dict, b: dict) -> dict:
    out: dict = {}
    for (i1, j1, k1), c1 in a.items():
        for (i2, j2, k2), c2 in b.items():
            key = (i1 + i2, j1 + j2, k1 + k2)
            prev = out.get(key)
            out[key] = c1 * c2 if prev is None else prev + c1 * c2
    return {k: v for k, v in out.items() if not v.is_zero()}


def expand_power(params) -> DensePoly3:
    """Full expansion of (x y z^3 + s x^5 + t y^5)^(p-1) by repeated
    sparse multiplication; O(p^4)-ish terms kept, so desk-scale primes only."""
    p = params.p
    if p not in _EXPAND_PRIMES:
        raise InvalidParameters(
            f"expand_power is guarded to p in {_EXPAND_PRIMES}, got {p}"
        )
    field = params.field
    base = {(1, 1, 3): field.one(), (5, 0, 0): params.s, (0, 5, 0): params.t}
    result = {(0, 0, 0): field.one()}
    power = base
    e = p - 1
    while e:
        if e & 1:
            result = _mul_sparse(result, power)
        e >>= 1
        if e:
            power = _mul_sparse(power, power)
    return DensePoly3(field, result, 5 * (p - 1))


def _field_for(p: int, q: int):
    if q == p:
        return PrimeField(p)
    if q == p * p:
        return QuadExtField(PrimeField(p))
    raise InvalidParameters(f"q = {q} must be p = {p} or p^2 = {p * p}")


def _all_pairs(field):
    """All q elements as int64 coordinate arrays (v = 0 in the prime field)."""
    p = field.p
    if field.degree == 1:
        u = np.arange(p, dtype=np.int64)
        return u, np.zeros_like(u)
    idx = np.arange(p * p, dtype=np.int64)
    return idx // p, idx % p


def plane_count(params: FamilyParams, q: int | None = None) -> int:
    """Projective points of s x^a + t y^a + z^b x^c y^c = 0 over F_q by
    literal evaluation on [1:y:z], [0:1:z], [0:0:1] representatives."""
    p = params.p
    if q is None:
        q = p * p
    if q > _SCAN_LIMIT:
        raise InvalidParameters(f"plane scan guarded to q <= {_SCAN_LIMIT}, got {q}")
    field = _field_for(p, q)
    a, b, c = params.a, params.b, params.c
    nr = field.nr if field.degree == 2 else 0
    if field.degree == 1 and (params.s[1] or params.t[1]):
        raise InvalidParameters("s, t have an extension component but q = p")
    su, sv = params.s
    tu, tv = params.t

    zu, zv = _all_pairs(field)
    zbu, zbv = _vec.pow_fp2(zu, zv, b, p, nr)
    total = 0
    # chart x = 1: F(1, y, z) = s + t y^a + y^c z^b
    for y in field.elements():
        ya = y ** a
        yc = y ** c
        ku = (su + (tu * ya.u + nr * (tv * ya.v % p))) % p
        kv = (sv + (tu * ya.v + tv * ya.u)) % p
        wu, wv = _vec.mul_fp2(zbu, zbv, np.int64(yc.u), np.int64(yc.v), p, nr)
        total += int(np.count_nonzero(((ku + wu) % p == 0) & ((kv + wv) % p == 0)))
    # chart [0:1:z]: c >= 1 kills the cross term, so F = t identically
    if (tu, tv) == (0, 0):
        total += q
    # [0:0:1]: every monomial contains x or y
    total += 1
    return total


def singular_points(p: int, a: int, b: int, c: int, s=1, t=1, q: int | None = None):
    """All F_q-points where F = s x^a + t y^a + z^b x^c y^c and its three
    partials vanish, as normalized projective triples.

    Takes raw parameters (no FamilyParams) so degenerate characteristics
    like p = 5 for the quintic can be scanned.
    """
    if not is_prime(p) or p == 2:
        raise InvalidParameters(f"p = {p} is not an odd prime")
    if b + 2 * c != a or b < 2 or c < 1:
        raise InvalidParameters(f"need b + 2c = a with b >= 2, c >= 1, got ({a}, {b}, {c})")
    if q is None:
        q = p * p
    if q > _SCAN_LIMIT:
        raise InvalidParameters(f"singular scan guarded to q <= {_SCAN_LIMIT}, got {q}")
    field = _field_for(p, q)

    def embed(x):
        if isinstance(x, tuple):
            return field.element(*x)
        return field.element(x)

    s_el, t_el = embed(s), embed(t)
    one, zero = field.one(), field.zero()

    def partials(x, y, z):
        f = s_el * x ** a + t_el * y ** a + (z ** b) * (x ** c) * (y ** c)
        fx = a * s_el * x ** (a - 1) + c * (x ** (c - 1)) * (y ** c) * (z ** b)
        fy = a * t_el * y ** (a - 1) + c * (x ** c) * (y ** (c - 1)) * (z ** b)
        fz = b * (x ** c) * (y ** c) * (z ** (b - 1))
        return f, fx, fy, fz

    found = []
    for y in field.elements():
        for z in field.elements():
            vals = partials(one, y, z)
            if all(v.is_zero() for v in vals):
                found.append((one, y, z))
    for z in field.elements():
        vals = partials(zero, one, z)
        if all(v.is_zero() for v in vals):
            found.append((zero, one, z))
    vals = partials(zero, zero, one)
    if all(v.is_zero() for v in vals):
        found.append((zero, zero, one))
    return found


def point_str(point) -> str:
    return "[" + ":".join(repr(x) for x in point) + "]"
