"""Vectorized numpy versions of the finite-field polynomial kernels.

Same contracts as the numba module: int64 arrays, ascending degree,
trimmed, p < 2**31.  Inner loops run over one polynomial while the other is
handled as a whole-array operation.
"""

import numpy as np


def inv_mod(a, p):
    return pow(int(a) % p, p - 2, p)


def fp_trim(a):
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1].copy() if nz.size else np.zeros(0, dtype=np.int64)


def fp_mul(a, b, p):
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    if a.shape[0] > b.shape[0]:
        a, b = b, a
    out = np.zeros(a.shape[0] + b.shape[0] - 1, dtype=np.int64)
    nb = b.shape[0]
    for i, ai in enumerate(a.tolist()):
        if ai:
            seg = out[i : i + nb]
            seg += ai * b % p
            seg %= p
    return fp_trim(out)


def fp_divmod(a, b, p):
    db = b.shape[0] - 1
    r = a.copy()
    if a.shape[0] - 1 < db:
        return np.zeros(0, dtype=np.int64), fp_trim(r)
    q = np.zeros(a.shape[0] - db, dtype=np.int64)
    inv = inv_mod(b[db], p)
    for i in range(a.shape[0] - 1, db - 1, -1):
        c = int(r[i]) * inv % p
        if c == 0:
            continue
        q[i - db] = c
        seg = r[i - db : i + 1]
        seg -= c * b % p
        seg %= p
    return fp_trim(q), fp_trim(r[:db])


def fp_monic(a, p):
    if a.shape[0] == 0:
        return a.copy()
    return a * inv_mod(a[-1], p) % p


def fp_gcd(a, b, p):
    a, b = fp_trim(a), fp_trim(b)
    while b.shape[0]:
        a, b = b, fp_divmod(a, b, p)[1]
    return fp_monic(a, p)


def fp_mulmod(a, b, f, p):
    return fp_divmod(fp_mul(a, b, p), f, p)[1]


def fp_powmod(a, e, f, p):
    if f.shape[0] == 1:
        return np.zeros(0, dtype=np.int64)
    base = fp_divmod(a, f, p)[1]
    result = np.ones(1, dtype=np.int64)
    e = int(e)
    while e:
        if e & 1:
            result = fp_mulmod(result, base, f, p)
        base = fp_mulmod(base, base, f, p)
        e >>= 1
    return result


def fp2_trim(a):
    nz = np.flatnonzero(a.any(axis=1)) if a.shape[0] else np.zeros(0, dtype=np.int64)
    return a[: nz[-1] + 1].copy() if nz.size else np.zeros((0, 2), dtype=np.int64)


def fp2_inv(x0, x1, p):
    d = inv_mod((int(x0) ** 2 + int(x1) ** 2) % p, p)
    return int(x0) * d % p, (-int(x1)) % p * d % p


def _scale(b, c0, c1, p):
    """Rows of b multiplied by the F_{p^2} scalar c0 + c1*t."""
    out = np.empty_like(b)
    out[:, 0] = (c0 * b[:, 0] % p - c1 * b[:, 1] % p) % p
    out[:, 1] = (c0 * b[:, 1] % p + c1 * b[:, 0] % p) % p
    return out


def fp2_mul(a, b, p):
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros((0, 2), dtype=np.int64)
    if a.shape[0] > b.shape[0]:
        a, b = b, a
    out = np.zeros((a.shape[0] + b.shape[0] - 1, 2), dtype=np.int64)
    nb = b.shape[0]
    for i, (a0, a1) in enumerate(a.tolist()):
        if a0 or a1:
            seg = out[i : i + nb]
            seg += _scale(b, a0, a1, p)
            seg %= p
    return fp2_trim(out)


def fp2_divmod(a, b, p):
    db = b.shape[0] - 1
    r = a.copy()
    if a.shape[0] - 1 < db:
        return np.zeros((0, 2), dtype=np.int64), fp2_trim(r)
    q = np.zeros((a.shape[0] - db, 2), dtype=np.int64)
    i0, i1 = fp2_inv(b[db, 0], b[db, 1], p)
    for i in range(a.shape[0] - 1, db - 1, -1):
        r0, r1 = int(r[i, 0]), int(r[i, 1])
        c0 = (r0 * i0 - r1 * i1) % p
        c1 = (r0 * i1 + r1 * i0) % p
        if c0 == 0 and c1 == 0:
            continue
        q[i - db] = (c0, c1)
        seg = r[i - db : i + 1]
        seg -= _scale(b, c0, c1, p)
        seg %= p
    return fp2_trim(q), fp2_trim(r[:db])


def fp2_monic(a, p):
    if a.shape[0] == 0:
        return a.copy()
    i0, i1 = fp2_inv(a[-1, 0], a[-1, 1], p)
    return _scale(a, i0, i1, p)


def fp2_gcd(a, b, p):
    a, b = fp2_trim(a), fp2_trim(b)
    while b.shape[0]:
        a, b = b, fp2_divmod(a, b, p)[1]
    return fp2_monic(a, p)


def fp2_mulmod(a, b, f, p):
    return fp2_divmod(fp2_mul(a, b, p), f, p)[1]


def fp2_powmod(a, e, f, p):
    if f.shape[0] == 1:
        return np.zeros((0, 2), dtype=np.int64)
    base = fp2_divmod(a, f, p)[1]
    result = np.array([[1, 0]], dtype=np.int64)
    e = int(e)
    while e:
        if e & 1:
            result = fp2_mulmod(result, base, f, p)
        base = fp2_mulmod(base, base, f, p)
        e >>= 1
    return result
