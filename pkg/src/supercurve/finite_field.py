"""Exact arithmetic in F_p and F_{p^2}.

F_{p^2} is realized as F_p[alpha] / (alpha^2 - nr) where nr is the smallest
positive quadratic nonresidue mod p, so every field has one canonical
representation and all downstream counts are reproducible bit for bit.

All objects are immutable after construction and every operation is pure.
"""

from math import gcd

from .errors import InvalidParameters

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 2^64."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def find_nonresidue(p: int) -> int:
    """Smallest positive r with r^((p-1)/2) = -1 mod p."""
    if p == 2 or not is_prime(p):
        raise InvalidParameters(f"p = {p} is not an odd prime")
    e = (p - 1) // 2
    for r in range(2, p):
        if pow(r, e, p) == p - 1:
            return r
    raise InvalidParameters(f"no quadratic nonresidue mod {p}")  # unreachable for p > 2


class PrimeField:
    """F_p for an odd prime p, with factorial tables for multinomials.

    Table construction is O(p) in time and memory; fields are meant to be
    built once and shared.
    """

    __slots__ = ("p", "q", "degree", "fact", "inv_fact")

    def __init__(self, p: int):
        if p == 2 or not is_prime(p):
            raise InvalidParameters(f"p = {p} is not an odd prime")
        self.p = p
        self.q = p
        self.degree = 1
        fact = [1] * p
        for t in range(1, p):
            fact[t] = fact[t - 1] * t % p
        inv_fact = [1] * p
        inv_fact[p - 1] = pow(fact[p - 1], p - 2, p)
        for t in range(p - 1, 0, -1):
            inv_fact[t - 1] = inv_fact[t] * t % p
        self.fact = fact
        self.inv_fact = inv_fact

    def element(self, u: int) -> "FieldElement":
        return FieldElement(self, u % self.p, 0)

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1, 0)

    def elements(self):
        for u in range(self.p):
            yield FieldElement(self, u, 0)

    def random_element(self, rng, nonzero=False) -> "FieldElement":
        lo = 1 if nonzero else 0
        return FieldElement(self, rng.randrange(lo, self.p), 0)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class QuadExtField:
    """F_{p^2} = F_p[alpha]/(alpha^2 - nr) over a PrimeField base."""

    __slots__ = ("base", "p", "q", "nr", "degree")

    def __init__(self, base, nr: int | None = None):
        if isinstance(base, int):
            base = PrimeField(base)
        self.base = base
        self.p = base.p
        self.q = base.p * base.p
        if nr is None:
            nr = find_nonresidue(base.p)
        else:
            if pow(nr % self.p, (self.p - 1) // 2, self.p) != self.p - 1:
                raise InvalidParameters(f"{nr} is not a quadratic nonresidue mod {self.p}")
        self.nr = nr
        self.degree = 2

    @property
    def fact(self):
        return self.base.fact

    @property
    def inv_fact(self):
        return self.base.inv_fact

    def element(self, u: int, v: int = 0) -> "FieldElement":
        return FieldElement(self, u % self.p, v % self.p)

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1, 0)

    def gen(self) -> "FieldElement":
        """The adjoined square root alpha of nr."""
        return FieldElement(self, 0, 1)

    def elements(self):
        for u in range(self.p):
            for v in range(self.p):
                yield FieldElement(self, u, v)

    def random_element(self, rng, nonzero=False) -> "FieldElement":
        while True:
            u = rng.randrange(self.p)
            v = rng.randrange(self.p)
            if not (nonzero and u == 0 and v == 0):
                return FieldElement(self, u, v)

    def __eq__(self, other):
        return isinstance(other, QuadExtField) and other.p == self.p and other.nr == self.nr

    def __hash__(self):
        return hash(("QuadExtField", self.p, self.nr))

    def __repr__(self):
        return f"QuadExtField(p={self.p}, nr={self.nr})"


class FieldElement:
    """u + v*alpha, with v = 0 in the prime-field case.

    Components are kept reduced to [0, p), so equality and hashing are
    component-wise.
    """

    __slots__ = ("field", "u", "v")

    def __init__(self, field, u: int, v: int = 0):
        self.field = field
        self.u = u
        self.v = v

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(f"mixed fields: {self.field} vs {other.field}")
            return other
        if isinstance(other, int):
            return FieldElement(self.field, other % self.field.p, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FieldElement(self.field, (self.u + other.u) % p, (self.v + other.v) % p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FieldElement(self.field, (self.u - other.u) % p, (self.v - other.v) % p)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, -self.u % p, -self.v % p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.field.p
        if self.field.degree == 1:
            return FieldElement(self.field, self.u * other.u % p, 0)
        nr = self.field.nr
        u = (self.u * other.u + nr * (self.v * other.v % p)) % p
        v = (self.u * other.v + self.v * other.u) % p
        return FieldElement(self.field, u, v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def inverse(self) -> "FieldElement":
        p = self.field.p
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.field.degree == 1:
            return FieldElement(self.field, pow(self.u, p - 2, p), 0)
        # (u + v a)^(-1) = (u - v a) / (u^2 - nr v^2)
        norm = (self.u * self.u - self.field.nr * (self.v * self.v % p)) % p
        ninv = pow(norm, p - 2, p)
        return FieldElement(self.field, self.u * ninv % p, -self.v * ninv % p)

    def __pow__(self, e: int) -> "FieldElement":
        # x^0 = 1 for every x, including 0 (documented convention; curve
        # formulas never rely on 0^0).
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self) -> "FieldElement":
        """x -> x^p; the identity on the prime field."""
        if self.field.degree == 1:
            return self
        # alpha^p = -alpha since alpha^2 = nr is a nonresidue
        return FieldElement(self.field, self.u, -self.v % self.field.p)

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def in_base_field(self) -> bool:
        return self.v == 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.u == other % self.field.p and self.v == 0
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.u == other.u
            and self.v == other.v
        )

    def __hash__(self):
        return hash((self.field, self.u, self.v))

    def __repr__(self):
        if self.field.degree == 1:
            return f"{self.u}"
        return f"{self.u}+{self.v}*i"


def nth_root_count(w: FieldElement, b: int) -> int:
    """Number of z in F_q with z^b = w.

    0 maps only to 0; otherwise with m = gcd(b, q-1) the b-th power map is
    m-to-1 onto the m-th powers, so the count is m if w^((q-1)/m) = 1 and 0
    otherwise.
    """
    if b <= 0:
        raise InvalidParameters(f"b = {b} must be positive")
    field = w.field
    if b % field.p == 0:
        raise InvalidParameters(f"p = {field.p} divides b = {b} (wild case unsupported)")
    if w.is_zero():
        return 1
    m = gcd(b, field.q - 1)
    return m if (w ** ((field.q - 1) // m)) == 1 else 0


def multinomial_mod_p(pf: PrimeField, alpha: int, beta: int, gamma: int) -> int:
    """(p-1)! / (alpha! beta! gamma!) mod p for alpha + beta + gamma = p - 1.

    Never 0: all factorial arguments are below p, so no factor p appears.
    """
    if min(alpha, beta, gamma) < 0 or alpha + beta + gamma != pf.p - 1:
        raise InvalidParameters(
            f"({alpha}, {beta}, {gamma}) must be nonnegative and sum to p - 1 = {pf.p - 1}"
        )
    p = pf.p
    value = pf.fact[p - 1] * pf.inv_fact[alpha] % p * pf.inv_fact[beta] % p * pf.inv_fact[gamma] % p
    assert value != 0
    return value
