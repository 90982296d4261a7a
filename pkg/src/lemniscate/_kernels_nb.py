"""Loop kernels for dense polynomials over F_p and F_p[t]/(t^2+1), compiled with numba.

Polynomials are int64 arrays in ascending degree with no trailing zeros
(``[]`` is the zero polynomial).  F_{p^2} polynomials are ``(n, 2)`` arrays
whose rows are ``(c0, c1)`` meaning ``c0 + c1*t``.  Requires p < 2**31 so
every product fits in int64 before reduction.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def inv_mod(a, p):
    result = 1
    base = a % p
    e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


@njit(cache=True)
def fp_trim(a):
    n = a.shape[0]
    while n > 0 and a[n - 1] == 0:
        n -= 1
    return a[:n].copy()


@njit(cache=True)
def fp_mul(a, b, p):
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    out = np.zeros(a.shape[0] + b.shape[0] - 1, dtype=np.int64)
    for i in range(a.shape[0]):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(b.shape[0]):
            out[i + j] = (out[i + j] + ai * b[j]) % p
    return fp_trim(out)


@njit(cache=True)
def fp_divmod(a, b, p):
    db = b.shape[0] - 1
    r = a.copy()
    if a.shape[0] - 1 < db:
        return np.zeros(0, dtype=np.int64), fp_trim(r)
    q = np.zeros(a.shape[0] - db, dtype=np.int64)
    inv = inv_mod(b[db], p)
    for i in range(a.shape[0] - 1, db - 1, -1):
        c = r[i] * inv % p
        if c == 0:
            continue
        q[i - db] = c
        for j in range(db + 1):
            r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    return fp_trim(q), fp_trim(r[:db])


@njit(cache=True)
def fp_monic(a, p):
    if a.shape[0] == 0:
        return a.copy()
    inv = inv_mod(a[a.shape[0] - 1], p)
    out = np.empty_like(a)
    for i in range(a.shape[0]):
        out[i] = a[i] * inv % p
    return out


@njit(cache=True)
def fp_gcd(a, b, p):
    a = fp_trim(a)
    b = fp_trim(b)
    while b.shape[0] > 0:
        _, r = fp_divmod(a, b, p)
        a = b
        b = r
    return fp_monic(a, p)


@njit(cache=True)
def fp_mulmod(a, b, f, p):
    _, r = fp_divmod(fp_mul(a, b, p), f, p)
    return r


@njit(cache=True)
def fp_powmod(a, e, f, p):
    _, base = fp_divmod(a, f, p)
    result = np.ones(1, dtype=np.int64)
    if f.shape[0] == 1:
        return np.zeros(0, dtype=np.int64)
    while e > 0:
        if e & 1:
            result = fp_mulmod(result, base, f, p)
        base = fp_mulmod(base, base, f, p)
        e >>= 1
    return result


# F_{p^2} = F_p[t]/(t^2 + 1)


@njit(cache=True)
def fp2_trim(a):
    n = a.shape[0]
    while n > 0 and a[n - 1, 0] == 0 and a[n - 1, 1] == 0:
        n -= 1
    return a[:n].copy()


@njit(cache=True)
def fp2_inv(x0, x1, p):
    d = inv_mod((x0 * x0 % p + x1 * x1 % p) % p, p)
    return x0 * d % p, (p - x1) % p * d % p


@njit(cache=True)
def fp2_mul(a, b, p):
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros((0, 2), dtype=np.int64)
    out = np.zeros((a.shape[0] + b.shape[0] - 1, 2), dtype=np.int64)
    for i in range(a.shape[0]):
        a0 = a[i, 0]
        a1 = a[i, 1]
        if a0 == 0 and a1 == 0:
            continue
        for j in range(b.shape[0]):
            b0 = b[j, 0]
            b1 = b[j, 1]
            out[i + j, 0] = (out[i + j, 0] + a0 * b0 % p - a1 * b1 % p) % p
            out[i + j, 1] = (out[i + j, 1] + a0 * b1 % p + a1 * b0 % p) % p
    return fp2_trim(out)


@njit(cache=True)
def fp2_divmod(a, b, p):
    db = b.shape[0] - 1
    r = a.copy()
    if a.shape[0] - 1 < db:
        return np.zeros((0, 2), dtype=np.int64), fp2_trim(r)
    q = np.zeros((a.shape[0] - db, 2), dtype=np.int64)
    i0, i1 = fp2_inv(b[db, 0], b[db, 1], p)
    for i in range(a.shape[0] - 1, db - 1, -1):
        c0 = (r[i, 0] * i0 % p - r[i, 1] * i1 % p) % p
        c1 = (r[i, 0] * i1 % p + r[i, 1] * i0 % p) % p
        if c0 == 0 and c1 == 0:
            continue
        q[i - db, 0] = c0
        q[i - db, 1] = c1
        for j in range(db + 1):
            b0 = b[j, 0]
            b1 = b[j, 1]
            k = i - db + j
            r[k, 0] = (r[k, 0] - c0 * b0 % p + c1 * b1 % p) % p
            r[k, 1] = (r[k, 1] - c0 * b1 % p - c1 * b0 % p) % p
    return fp2_trim(q), fp2_trim(r[:db])


@njit(cache=True)
def fp2_monic(a, p):
    if a.shape[0] == 0:
        return a.copy()
    n = a.shape[0] - 1
    i0, i1 = fp2_inv(a[n, 0], a[n, 1], p)
    out = np.empty_like(a)
    for k in range(a.shape[0]):
        out[k, 0] = (a[k, 0] * i0 % p - a[k, 1] * i1 % p) % p
        out[k, 1] = (a[k, 0] * i1 % p + a[k, 1] * i0 % p) % p
    return out


@njit(cache=True)
def fp2_gcd(a, b, p):
    a = fp2_trim(a)
    b = fp2_trim(b)
    while b.shape[0] > 0:
        _, r = fp2_divmod(a, b, p)
        a = b
        b = r
    return fp2_monic(a, p)


@njit(cache=True)
def fp2_mulmod(a, b, f, p):
    _, r = fp2_divmod(fp2_mul(a, b, p), f, p)
    return r


@njit(cache=True)
def fp2_powmod(a, e, f, p):
    _, base = fp2_divmod(a, f, p)
    result = np.zeros((1, 2), dtype=np.int64)
    result[0, 0] = 1
    if f.shape[0] == 1:
        return np.zeros((0, 2), dtype=np.int64)
    while e > 0:
        if e & 1:
            result = fp2_mulmod(result, base, f, p)
        base = fp2_mulmod(base, base, f, p)
        e >>= 1
    return result
