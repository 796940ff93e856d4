"""The fixed pairing bijection between N x N and N (Cantor polynomial)."""

import math


def cantor_pair(i, j):
    """e(i, j) = (i + j)(i + j + 1)/2 + j."""
    s = i + j
    return s * (s + 1) // 2 + j


def cantor_unpair(n):
    """Inverse of cantor_pair, exact for arbitrary size via integer sqrt."""
    w = (math.isqrt(8 * n + 1) - 1) // 2
    t = w * (w + 1) // 2
    j = n - t
    return w - j, j
