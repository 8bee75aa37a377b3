"""Congruence classification of (p, a, b, c) against the maximality cases.

Case 1: p = -1 (mod n) with n = ab / gcd(a, b, c).
Case 2 (a, b coprime): p = d - 1 (mod n) for the unique d in [0, ab) with
d = 2 (mod a) and d = 0 (mod b).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .errors import InvalidParameters
from .finite_field import is_prime
from .pointcount import genus


def totient(n: int) -> int:
    if n < 1:
        raise InvalidParameters(f"totient of {n}")
    result = n
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            while m % f == 0:
                m //= f
            result -= result // f
        f += 1
    if m > 1:
        result -= result // m
    return result


def density(modulus: int, residues) -> Fraction:
    """Natural density of primes in the given residue classes: |R| / phi(m)."""
    residues = set(residues)
    for r in residues:
        if gcd(r, modulus) != 1:
            raise InvalidParameters(f"residue {r} is not coprime to {modulus}")
    return Fraction(len(residues), totient(modulus))


def crt_d(a: int, b: int) -> int:
    """The unique d in [0, ab) with d = 2 (mod a), d = 0 (mod b), for coprime a, b.

    Plain search: ab stays tiny for every parameter set in range.
    """
    if gcd(a, b) != 1:
        raise InvalidParameters(f"a = {a} and b = {b} are not coprime")
    hits = [d for d in range(a * b) if d % a == 2 % a and d % b == 0]
    assert len(hits) == 1
    return hits[0]


@dataclass(frozen=True)
class ClassifyReport:
    p: int
    a: int
    b: int
    c: int
    n: int
    d: Optional[int]
    genus: int
    case: str  # "case1" | "case2" | "none"
    predicted_maximal: bool
    predicted_superspecial: Optional[bool]  # quintic only


def classify(p: int, a: int, b: int, c: int) -> ClassifyReport:
    if b + 2 * c != a:
        raise InvalidParameters(f"b + 2c != a: {b} + 2*{c} != {a}")
    if not is_prime(p) or gcd(p, a * b) != 1 or p == 2:
        raise InvalidParameters(f"p = {p} must be an odd prime coprime to a*b = {a * b}")
    n = a * b // gcd(gcd(a, b), c)
    d = crt_d(a, b) if gcd(a, b) == 1 else None
    case = "none"
    if p % n == n - 1:
        case = "case1"
    elif d is not None and p % n == (d - 1) % n:
        case = "case2"
    quintic = (a, b, c) == (5, 3, 1)
    return ClassifyReport(
        p=p,
        a=a,
        b=b,
        c=c,
        n=n,
        d=d,
        genus=genus(a, b, c),
        case=case,
        predicted_maximal=case != "none",
        predicted_superspecial=(p % 15 in (11, 14)) if quintic else None,
    )


def quintic_iff(p: int) -> tuple[bool, bool]:
    """(superspecial, maximal) for the s = t = 1 quintic; both equal
    p mod 15 in {11, 14}."""
    if not is_prime(p) or p <= 5 or gcd(p, 15) != 1:
        raise InvalidParameters(f"p = {p} must be a prime > 5 coprime to 15")
    hit = p % 15 in (11, 14)
    return hit, hit


def bezout_d(a: int, b: int, c: int) -> tuple[int, int, int]:
    """k, l with k*b + l*c = 1, 0 <= -l < b, and d' = -l*a + 2.

    Requires gcd(a, b) = 1 and gcd(b, c) = 1 alongside b + 2c = a; d' then
    satisfies both of case 2's congruences and equals classify's d.
    """
    if b + 2 * c != a:
        raise InvalidParameters(f"b + 2c != a: {b} + 2*{c} != {a}")
    if gcd(a, b) != 1 or gcd(b, c) != 1:
        raise InvalidParameters(f"need gcd(a, b) = gcd(b, c) = 1, got ({a}, {b}, {c})")
    # extended Euclid for k0*b + l0*c = 1, then shift l into (-b, 0]
    old_r, r = b, c
    old_k, k = 1, 0
    old_l, l = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_k, k = k, old_k - qt * k
        old_l, l = l, old_l - qt * l
    assert old_r == 1
    k0, l0 = old_k, old_l
    shift = -((-l0) % b)  # representative of l0 mod b in (-b, 0]
    l = shift
    k = (1 - l * c) // b
    assert k * b + l * c == 1 and 0 <= -l < b
    d = -l * a + 2
    assert d % a == 2 % a and d % b == 0 and 0 <= d < a * b
    assert d == crt_d(a, b)
    return k, l, d


# Parameter rows of the maximal-family table: every (a, b, c) with b + 2c = a
# and genus between 4 and 11, one case-1 row each, plus a case-2 row for the
# three triples with a, b coprime.
TABLE2_CASES: tuple[tuple[tuple[int, int, int], str], ...] = (
    ((8, 2, 3), "case1"),
    ((10, 2, 4), "case1"),
    ((5, 3, 1), "case1"),
    ((5, 3, 1), "case2"),
    ((12, 2, 5), "case1"),
    ((14, 2, 6), "case1"),
    ((7, 3, 2), "case1"),
    ((7, 3, 2), "case2"),
    ((9, 3, 3), "case1"),
    ((16, 2, 7), "case1"),
    ((18, 2, 8), "case1"),
    ((6, 4, 1), "case1"),
    ((20, 2, 9), "case1"),
    ((22, 2, 10), "case1"),
    ((8, 4, 2), "case1"),
    ((11, 3, 4), "case1"),
    ((11, 3, 4), "case2"),
)


@dataclass(frozen=True)
class Table2Row:
    genus: int
    congruence: str
    triple: tuple[int, int, int]
    case: str
    n: int
    d: Optional[int]


def table2_rows() -> list[Table2Row]:
    """All 17 maximal-family rows, derived by classification arithmetic."""
    rows = []
    for (a, b, c), case in TABLE2_CASES:
        n = a * b // gcd(gcd(a, b), c)
        if case == "case1":
            residue, d = n - 1, None
        else:
            d = crt_d(a, b)
            residue = (d - 1) % n
        rows.append(
            Table2Row(
                genus=genus(a, b, c),
                congruence=f"p = {residue} (mod {n})",
                triple=(a, b, c),
                case=case,
                n=n,
                d=d,
            )
        )
    return rows
