"""Pure-numpy kernels for circular convolution and correlation.

Uses real FFTs, so both operations are O(n log n). Results agree with the
direct O(n^2) sums to well below 1e-9 per entry at the dimensions this
package uses.
"""

import numpy as np

NAME = "python"


def convolve(x, y):
    n = x.shape[0]
    return np.fft.irfft(np.fft.rfft(x) * np.fft.rfft(y), n=n)


def correlate(x, z):
    n = x.shape[0]
    return np.fft.irfft(np.conj(np.fft.rfft(x)) * np.fft.rfft(z), n=n)
