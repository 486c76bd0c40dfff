#include "qrup/fft.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <unordered_map>
#include <utility>

namespace qrup {
namespace fft_detail {
namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Roots e^{-i 2 pi k / n} for k in [0, n/2), shared across transforms of the
// same size.
const std::vector<Complex>& twiddles(int n) {
  static std::mutex mu;
  static std::unordered_map<int, std::unique_ptr<std::vector<Complex>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<std::vector<Complex>>(static_cast<size_t>(n / 2));
    for (int k = 0; k < n / 2; ++k)
      (*slot)[static_cast<size_t>(k)] =
          std::polar(1.0, -2.0 * std::numbers::pi * k / n);
  }
  return *slot;
}

void transform_pow2(CVec& x, int sign) {
  const int n = static_cast<int>(x.size());
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x(i), x(j));
  }
  const auto& tw = twiddles(n);
  for (int len = 2; len <= n; len <<= 1) {
    const int half = len / 2;
    const int stride = n / len;
    for (int base = 0; base < n; base += len) {
      for (int k = 0; k < half; ++k) {
        Complex w = tw[static_cast<size_t>(k * stride)];
        if (sign > 0) w = std::conj(w);
        const Complex u = x(base + k);
        const Complex v = x(base + k + half) * w;
        x(base + k) = u + v;
        x(base + k + half) = u - v;
      }
    }
  }
}

struct BluesteinPlan {
  int n = 0;
  int m = 0;                   // padded power-of-two length >= 2n-1
  std::vector<Complex> chirp;  // a_k = e^{-i pi k^2 / n}
  CVec kernel_fft;             // forward FFT of the wrapped conjugate chirp
};

// Chirp angles use k^2 mod 2n so large k keeps full precision.
std::shared_ptr<const BluesteinPlan> bluestein_plan(int n) {
  static std::mutex mu;
  static std::unordered_map<int, std::shared_ptr<const BluesteinPlan>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto plan = std::make_shared<BluesteinPlan>();
    plan->n = n;
    int m = 1;
    while (m < 2 * n - 1) m <<= 1;
    plan->m = m;
    plan->chirp.resize(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
      const long long k2 = (1ll * k * k) % (2ll * n);
      plan->chirp[static_cast<size_t>(k)] =
          std::polar(1.0, -std::numbers::pi * static_cast<double>(k2) / n);
    }
    CVec kern = CVec::Zero(m);
    for (int k = 0; k < n; ++k) {
      const Complex c = std::conj(plan->chirp[static_cast<size_t>(k)]);
      kern(k) = c;
      if (k > 0) kern(m - k) = c;
    }
    transform_pow2(kern, -1);
    plan->kernel_fft = std::move(kern);
    slot = std::move(plan);
  }
  return slot;
}

// X_k = a_k * sum_t (x_t a_t) conj(a_{k-t}) with a_m = e^{-i pi m^2 / n};
// the convolution runs over a padded power-of-two cyclic FFT.
void transform_bluestein(CVec& x, int sign) {
  const int n = static_cast<int>(x.size());
  const auto plan = bluestein_plan(n);
  const int m = plan->m;
  CVec u = CVec::Zero(m);
  for (int k = 0; k < n; ++k) {
    Complex a = plan->chirp[static_cast<size_t>(k)];
    if (sign > 0) a = std::conj(a);
    u(k) = x(k) * a;
  }
  transform_pow2(u, -1);
  if (sign < 0) {
    u.array() *= plan->kernel_fft.array();
  } else {
    // kernel is even in its index, so conj(FFT(kernel)) == FFT(conj(kernel))
    u.array() *= plan->kernel_fft.array().conjugate();
  }
  transform_pow2(u, +1);
  u /= static_cast<double>(m);
  for (int k = 0; k < n; ++k) {
    Complex a = plan->chirp[static_cast<size_t>(k)];
    if (sign > 0) a = std::conj(a);
    x(k) = u(k) * a;
  }
}

}  // namespace

void transform(CVec& x, int sign) {
  const int n = static_cast<int>(x.size());
  if (n <= 1) return;
  if (is_pow2(n)) {
    transform_pow2(x, sign);
  } else {
    transform_bluestein(x, sign);
  }
}

}  // namespace fft_detail

Signal dft(const Signal& f) {
  if (f.size() == 0) throw std::invalid_argument("dft: empty signal");
  CVec x = f;
  fft_detail::transform(x, -1);
  x /= std::sqrt(static_cast<double>(f.size()));
  return x;
}

Signal idft(const Signal& fhat) {
  if (fhat.size() == 0) throw std::invalid_argument("idft: empty signal");
  CVec x = fhat;
  fft_detail::transform(x, +1);
  x /= std::sqrt(static_cast<double>(fhat.size()));
  return x;
}

}  // namespace qrup
