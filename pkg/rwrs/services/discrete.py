"""
Exact inversion sampling for symmetric integer laws with heavy tails.

The magnitude |X| >= 1 has weights w(k) with a closed-form tail
T(m) = sum_{k >= m} w(k). Survival probabilities T(k+1)/T(1) are
tabulated up to `table_size`; draws beyond the table are located by
bisection on T itself, so the support is never truncated.
"""
import logging
from typing import Callable
import numpy as np
from scipy import special


class IntegerTailLaw:
    def __init__(self, label: str, tail: Callable[[np.ndarray], np.ndarray], table_size: int):
        self.label = label
        self.tail = tail
        self.table_size = table_size
        self.total = float(tail(np.array([1.0]))[0])
        k = np.arange(1, table_size + 1, dtype=np.float64)
        # Decreasing survival S(k) = P(|X| > k | |X| >= 1); negated for searchsorted.
        self._neg_survival = -tail(k + 1.0) / self.total
        logging.debug(f"{label}: tabulated {table_size} magnitudes, tail mass beyond = {-self._neg_survival[-1]:.3g}")

    def magnitudes(self, v: np.ndarray) -> np.ndarray:
        """Map survival uniforms v in (0, 1] to magnitudes: the smallest k with S(k) <= v."""
        v = np.asarray(v, dtype=np.float64)
        index = np.searchsorted(self._neg_survival, -v, side="left")
        out = (index + 1).astype(np.float64)
        beyond = index >= self.table_size
        if np.any(beyond):
            out[beyond] = self._bisect(v[beyond])
        return out

    def _bisect(self, v: np.ndarray) -> np.ndarray:
        target = v * self.total
        lo = np.full(v.shape, float(self.table_size))
        hi = 2.0 * lo
        while True:
            open_ = self.tail(hi + 1.0) > target
            if not np.any(open_):
                break
            lo = np.where(open_, hi, lo)
            hi = np.where(open_, 2.0 * hi, hi)
        while np.any(hi - lo > 1.0):
            mid = np.floor((lo + hi) / 2.0)
            done = self.tail(mid + 1.0) <= target
            hi = np.where(done, mid, hi)
            lo = np.where(done, lo, mid)
        return hi


def lorentz_tail(m: np.ndarray) -> np.ndarray:
    """sum_{k >= m} 1/(1+k^2) = Im digamma(m + i)."""
    return np.imag(special.psi(np.asarray(m, dtype=np.float64) + 1j))


def zeta_tail(exponent: float) -> Callable[[np.ndarray], np.ndarray]:
    """sum_{k >= m} k^(-exponent) as a Hurwitz zeta function."""
    def tail(m: np.ndarray) -> np.ndarray:
        return special.zeta(exponent, np.asarray(m, dtype=np.float64))
    return tail
