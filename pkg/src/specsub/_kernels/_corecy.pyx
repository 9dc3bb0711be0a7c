# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled fixed-point CORDIC kernels.

Bit-identical to the numpy fallback in ``_ref``; selected at import time by
``specsub._kernels`` when available.
"""

import numpy as np

from libc.stdint cimport int64_t

cdef int64_t GUARD_BITS = 14
cdef int64_t INTERNAL_FRAC = 27


cdef inline int64_t _round_out(int64_t v) nogil:
    return (v + (<int64_t>1 << (GUARD_BITS - 1))) >> GUARD_BITS


def cordic_vectoring_raw(re, im, atab, inv_gain, pi_int):
    """Vectoring mode: (re, im) raw Q2.13 -> (magnitude, phase) raw Q2.13."""
    cdef int64_t[::1] re_v = np.ascontiguousarray(re, dtype=np.int64)
    cdef int64_t[::1] im_v = np.ascontiguousarray(im, dtype=np.int64)
    cdef int64_t[::1] at_v = np.ascontiguousarray(atab, dtype=np.int64)
    cdef int64_t gain = inv_gain
    cdef int64_t pi_i = pi_int
    cdef Py_ssize_t n = re_v.shape[0]
    cdef Py_ssize_t niter = at_v.shape[0]
    mag_out = np.empty(n, dtype=np.int64)
    ph_out = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] mag_v = mag_out
    cdef int64_t[::1] ph_v = ph_out
    cdef Py_ssize_t j, i
    cdef int64_t x, y, z, zoff, xs, ys, phase
    with nogil:
        for j in range(n):
            if re_v[j] == 0 and im_v[j] == 0:
                mag_v[j] = 0
                ph_v[j] = 0
                continue
            x = re_v[j] << GUARD_BITS
            y = im_v[j] << GUARD_BITS
            zoff = 0
            if x < 0:
                zoff = pi_i if y >= 0 else -pi_i
                x = -x
                y = -y
            z = 0
            for i in range(niter):
                xs = x >> i
                ys = y >> i
                if y >= 0:
                    x = x + ys
                    y = y - xs
                    z = z + at_v[i]
                else:
                    x = x - ys
                    y = y + xs
                    z = z - at_v[i]
            phase = zoff + z
            if phase > pi_i:
                phase = phase - 2 * pi_i
            if phase <= -pi_i:
                phase = phase + 2 * pi_i
            mag_v[j] = _round_out((x * gain) >> INTERNAL_FRAC)
            ph_v[j] = _round_out(phase)
    return mag_out, ph_out


def cordic_rotation_raw(theta, atab, inv_gain, pi_int):
    """Rotation mode: theta raw Q2.13 in (-pi, pi] -> (cos, sin) raw Q2.13."""
    cdef int64_t[::1] th_v = np.ascontiguousarray(theta, dtype=np.int64)
    cdef int64_t[::1] at_v = np.ascontiguousarray(atab, dtype=np.int64)
    cdef int64_t gain = inv_gain
    cdef int64_t pi_i = pi_int
    cdef int64_t half_pi = pi_i >> 1
    cdef Py_ssize_t n = th_v.shape[0]
    cdef Py_ssize_t niter = at_v.shape[0]
    cos_out = np.empty(n, dtype=np.int64)
    sin_out = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] cos_v = cos_out
    cdef int64_t[::1] sin_v = sin_out
    cdef Py_ssize_t j, i
    cdef int64_t x, y, z, xs, ys, sign
    with nogil:
        for j in range(n):
            z = th_v[j] << GUARD_BITS
            sign = 1
            if z > half_pi:
                z = z - pi_i
                sign = -1
            elif z < -half_pi:
                z = z + pi_i
                sign = -1
            x = gain
            y = 0
            for i in range(niter):
                xs = x >> i
                ys = y >> i
                if z >= 0:
                    x = x - ys
                    y = y + xs
                    z = z - at_v[i]
                else:
                    x = x + ys
                    y = y - xs
                    z = z + at_v[i]
            cos_v[j] = _round_out(sign * x)
            sin_v[j] = _round_out(sign * y)
    return cos_out, sin_out
