#pragma once

#include "qrup/types.hpp"

namespace qrup {

// Unitary discrete Fourier transform, negative exponent:
//   fhat(w) = N^{-1/2} sum_t f(t) e^{-i 2 pi w t / N}.
Signal dft(const Signal& f);

// Unitary inverse (positive exponent): idft(dft(f)) == f.
Signal idft(const Signal& fhat);

namespace fft_detail {
// Unnormalized in-place transform of any length. sign = -1 forward, +1
// inverse. Radix-2 for powers of two, Bluestein otherwise.
void transform(CVec& x, int sign);
}  // namespace fft_detail

}  // namespace qrup
