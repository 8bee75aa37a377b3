"""Vectorized mod-p kernels on int64 numpy arrays.

Internal only.  Elements of F_{p^2} travel as coordinate pairs (u, v) meaning
u + v*alpha with alpha^2 = nr; every product of reduced residues fits in
int64 as long as p < 2^31, which is asserted at the entry points (the scans
that use these kernels enumerate q = p^2 values, so far smaller p in
practice).
"""

import numpy as np

_P_LIMIT = 1 << 31


def check_p(p: int) -> None:
    if p >= _P_LIMIT:
        raise ValueError(f"vectorized kernels require p < 2^31, got {p}")


def mul_fp2(u1, v1, u2, v2, p, nr):
    u = (u1 * u2 + nr * (v1 * v2 % p)) % p
    v = (u1 * v2 + v1 * u2) % p
    return u, v


def pow_fp2(u, v, e, p, nr):
    """Component arrays raised to a fixed scalar exponent e >= 0."""
    ru = np.ones_like(u)
    rv = np.zeros_like(v)
    bu, bv = u % p, v % p
    while e:
        if e & 1:
            ru, rv = mul_fp2(ru, rv, bu, bv, p, nr)
        e >>= 1
        if e:
            bu, bv = mul_fp2(bu, bv, bu, bv, p, nr)
    return ru, rv


def pow_fp(x, e, p):
    r = np.ones_like(x)
    b = x % p
    while e:
        if e & 1:
            r = r * b % p
        e >>= 1
        if e:
            b = b * b % p
    return r
