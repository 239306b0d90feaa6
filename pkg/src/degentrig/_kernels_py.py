"""Pure-Python/numpy kernels.

Same signatures and the same floating-point operation order as the
compiled ``_kernels`` extension, so both backends return bit-identical
results.
"""

import numpy as np

EPS_STOP = 2.0 ** -53


def falling_factorial(x, n, lam):
    p = 1.0
    for j in range(n):
        p *= x - j * lam
    return p


def falling_factorial_complex(z, n, lam):
    p = 1.0 + 0.0j
    for j in range(n):
        p *= z - j * lam
    return p


_SPLIT = 134217729.0  # 2^27 + 1


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _two_prod(a, b):
    p = a * b
    t = _SPLIT * a
    ah = t - (t - a)
    al = a - ah
    t = _SPLIT * b
    bh = t - (t - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def exp_series(x, lam, t, max_terms):
    """Partial sum of sum_n (x)_{n,lam} t^n / n! in double-double arithmetic.

    Returns ``(value, last_term_magnitude, terminated)``. Stops on an exactly
    zero term or once ``|term| <= 2^-53 |sum|``.
    """
    th, tl = 1.0, 0.0  # current term
    sh, sl = 1.0, 0.0  # running sum
    last = 1.0
    terminated = False
    for n in range(1, max_terms + 1):
        # factor = x - (n-1) lam, exactly as a double-double
        ph, pl = _two_prod(n - 1.0, lam)
        fh, fl = _two_sum(x, -ph)
        fl -= pl
        fh, fl = _two_sum(fh, fl)
        # term *= factor
        p, e = _two_prod(th, fh)
        e += th * fl + tl * fh
        th, tl = _two_sum(p, e)
        # term /= n
        q = th / n
        p, e = _two_prod(q, float(n))
        r = ((th - p) - e + tl) / n
        th, tl = _two_sum(q, r)
        # term *= t
        p, e = _two_prod(th, t)
        e += tl * t
        th, tl = _two_sum(p, e)
        if th == 0.0:
            last = 0.0
            terminated = True
            break
        # sum += term
        s, e = _two_sum(sh, th)
        e += sl + tl
        sh, sl = _two_sum(s, e)
        last = abs(th)
        if last <= EPS_STOP * abs(sh):
            break
    return sh + sl, last, terminated


def clenshaw(coeffs, ys):
    """Evaluate sum_k coeffs[k] T_k(y) elementwise over a 1-d float array."""
    ys = np.asarray(ys, dtype=np.float64)
    c = np.asarray(coeffs, dtype=np.float64)
    b1 = np.zeros_like(ys)
    b2 = np.zeros_like(ys)
    for k in range(c.shape[0] - 1, 0, -1):
        b1, b2 = c[k] + 2.0 * ys * b1 - b2, b1
    return c[0] + ys * b1 - b2


def km_product(zeros, constant, s):
    s = np.asarray(s, dtype=np.float64)
    p = np.full_like(s, constant)
    for z in zeros:
        p = p * (1.0 - s / z)
    return p
