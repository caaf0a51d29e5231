"""Compiled inner loops for the brute-force oracles."""
import math

import numba
import numpy as np


@numba.njit(cache=True)
def polar_grid_max(s_re, s_im, p_re, p_im, step, cos_t, sin_t, cos_2t, sin_2t):
    """Maximise ``(1 - r**2) / |1 - s z + p z**2|`` over the polar grid ``z = (i*step) e^{i theta_j}``.

    Returns ``(value, i, j)``; ties keep the first index in (radius, angle) order.
    """
    nr = int(math.ceil(1.0 / step))
    nt = cos_t.shape[0]
    best_num = -1.0
    best_den = 1.0
    bi = 0
    bj = 0
    for i in range(nr):
        r = i * step
        num = 1.0 - r * r
        num2 = num * num
        ar = r * s_re
        ai = r * s_im
        br = r * r * p_re
        bim = r * r * p_im
        for j in range(nt):
            c = cos_t[j]
            s = sin_t[j]
            c2 = cos_2t[j]
            s2 = sin_2t[j]
            dr = 1.0 - (ar * c - ai * s) + (br * c2 - bim * s2)
            di = -(ar * s + ai * c) + (br * s2 + bim * c2)
            den = dr * dr + di * di
            # num2/den > best_num/best_den without dividing
            if num2 * best_den > best_num * den:
                best_num = num2
                best_den = den
                bi = i
                bj = j
    return math.sqrt(best_num / best_den), bi, bj


def angle_tables(step: float):
    nt = int(math.ceil(2.0 * math.pi / step))
    theta = np.arange(nt) * (2.0 * math.pi / nt)
    return theta, np.cos(theta), np.sin(theta), np.cos(2 * theta), np.sin(2 * theta)
