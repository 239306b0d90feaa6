# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Mirrors _kernels_py operation for operation."""

import numpy as np

cdef double EPS_STOP = 2.0 ** -53


def falling_factorial(double x, long n, double lam):
    cdef double p = 1.0
    cdef long j
    for j in range(n):
        p *= x - j * lam
    return p


def falling_factorial_complex(double complex z, long n, double lam):
    cdef double complex p = 1.0
    cdef long j
    for j in range(n):
        p = p * (z - j * lam)
    return complex(p)


cdef double SPLIT = 134217729.0


cdef inline void two_sum(double a, double b, double* s, double* err):
    cdef double ss = a + b
    cdef double bb = ss - a
    s[0] = ss
    err[0] = (a - (ss - bb)) + (b - bb)


cdef inline void two_prod(double a, double b, double* p, double* err):
    cdef double pp = a * b
    cdef double t = SPLIT * a
    cdef double ah = t - (t - a)
    cdef double al = a - ah
    t = SPLIT * b
    cdef double bh = t - (t - b)
    cdef double bl = b - bh
    p[0] = pp
    err[0] = ((ah * bh - pp) + ah * bl + al * bh) + al * bl


def exp_series(double x, double lam, double t, long max_terms):
    cdef double th = 1.0, tl = 0.0, sh = 1.0, sl = 0.0, last = 1.0
    cdef double ph, pl, fh, fl, p, e, q, r, s
    cdef bint terminated = False
    cdef long n
    for n in range(1, max_terms + 1):
        two_prod(n - 1.0, lam, &ph, &pl)
        two_sum(x, -ph, &fh, &fl)
        fl -= pl
        two_sum(fh, fl, &fh, &fl)
        two_prod(th, fh, &p, &e)
        e += th * fl + tl * fh
        two_sum(p, e, &th, &tl)
        q = th / n
        two_prod(q, <double>n, &p, &e)
        r = ((th - p) - e + tl) / n
        two_sum(q, r, &th, &tl)
        two_prod(th, t, &p, &e)
        e += tl * t
        two_sum(p, e, &th, &tl)
        if th == 0.0:
            last = 0.0
            terminated = True
            break
        two_sum(sh, th, &s, &e)
        e += sl + tl
        two_sum(s, e, &sh, &sl)
        last = abs(th)
        if last <= EPS_STOP * abs(sh):
            break
    return sh + sl, last, terminated


def clenshaw(coeffs, ys):
    cdef double[::1] c = np.ascontiguousarray(coeffs, dtype=np.float64)
    cdef double[::1] y = np.ascontiguousarray(ys, dtype=np.float64).ravel()
    out = np.empty(y.shape[0], dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t i, k, n = c.shape[0]
    cdef double b1, b2, tmp, yi
    for i in range(y.shape[0]):
        yi = y[i]
        b1 = 0.0
        b2 = 0.0
        for k in range(n - 1, 0, -1):
            tmp = c[k] + 2.0 * yi * b1 - b2
            b2 = b1
            b1 = tmp
        o[i] = c[0] + yi * b1 - b2
    return out.reshape(np.shape(ys))


def km_product(zeros, double constant, s):
    cdef double[::1] z = np.ascontiguousarray(zeros, dtype=np.float64)
    cdef double[::1] x = np.ascontiguousarray(s, dtype=np.float64).ravel()
    out = np.empty(x.shape[0], dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t i, k
    cdef double p
    for i in range(x.shape[0]):
        p = constant
        for k in range(z.shape[0]):
            p = p * (1.0 - x[i] / z[k])
        o[i] = p
    return out.reshape(np.shape(s))
