#include "qrup/dictionary.hpp"

#include <cmath>

#include "qrup/fft.hpp"
#include "qrup/random.hpp"

namespace qrup {

const char* to_string(DictionaryKind k) {
  switch (k) {
    case DictionaryKind::spike_fourier: return "spike_fourier";
    case DictionaryKind::spike_random: return "spike_random";
    case DictionaryKind::custom: return "custom";
  }
  return "unknown";
}

namespace {

// Haar-distributed unitary: QR of an i.i.d. complex Gaussian matrix with the
// diagonal phases of R folded into Q, which pins the representative and makes
// the result a deterministic function of the seed.
CMat random_unitary(int n, std::uint64_t seed) {
  Rng rng(seed);
  CMat g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = rng.complex_gaussian(1.0);
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ() * CMat::Identity(n, n);
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double m = std::abs(d);
    q.col(j) *= (m == 0.0 ? Complex(1.0, 0.0) : d / m);
  }
  return q;
}

}  // namespace

PairDictionary::PairDictionary(int n, DictionaryKind kind,
                               std::optional<std::uint64_t> seed,
                               std::optional<CMat> basis2)
    : n_(n), kind_(kind), seed_(seed), basis2_(std::move(basis2)) {}

PairDictionary PairDictionary::make(int n, DictionaryKind kind,
                                    std::optional<std::uint64_t> seed) {
  if (n < 2) throw std::invalid_argument("PairDictionary: n must be >= 2");
  switch (kind) {
    case DictionaryKind::spike_fourier:
      return PairDictionary(n, kind, seed, std::nullopt);
    case DictionaryKind::spike_random:
      if (!seed)
        throw std::invalid_argument("PairDictionary: spike_random requires a seed");
      return PairDictionary(n, kind, seed, random_unitary(n, *seed));
    case DictionaryKind::custom:
      throw std::invalid_argument("PairDictionary: use custom(basis2) for custom kind");
  }
  throw std::invalid_argument("PairDictionary: unknown kind");
}

PairDictionary PairDictionary::custom(CMat basis2) {
  const int n = static_cast<int>(basis2.rows());
  if (n < 2 || basis2.cols() != n)
    throw std::invalid_argument("PairDictionary: custom basis must be square, n >= 2");
  return PairDictionary(n, DictionaryKind::custom, std::nullopt, std::move(basis2));
}

const CMat& PairDictionary::basis2_matrix() const {
  if (!basis2_)
    throw std::logic_error("PairDictionary: spike_fourier has no explicit matrix");
  return *basis2_;
}

Signal PairDictionary::basis2_apply(const CVec& a) const {
  if (a.size() != n_) throw std::invalid_argument("basis2_apply: dimension mismatch");
  if (basis2_) return *basis2_ * a;
  return idft(a);  // Fourier atoms carry the positive exponent
}

CVec PairDictionary::basis2_adjoint(const Signal& f) const {
  if (f.size() != n_) throw std::invalid_argument("basis2_adjoint: dimension mismatch");
  if (basis2_) return basis2_->adjoint() * f;
  return dft(f);
}

Signal PairDictionary::atom(int gamma) const {
  if (gamma < 0 || gamma >= 2 * n_)
    throw std::invalid_argument("atom: index out of range");
  if (gamma < n_) {
    Signal e = Signal::Zero(n_);
    e(gamma) = 1.0;
    return e;
  }
  if (basis2_) return basis2_->col(gamma - n_);
  CVec e = CVec::Zero(n_);
  e(gamma - n_) = 1.0;
  return idft(e);
}

Signal PairDictionary::synthesize(const CVec& stacked) const {
  if (stacked.size() != 2 * n_)
    throw std::invalid_argument("synthesize: coefficient length must be 2N");
  return stacked.head(n_) + basis2_apply(stacked.tail(n_));
}

Signal PairDictionary::synthesize(const CoefficientVector& a) const {
  return synthesize(a.entries);
}

CVec PairDictionary::analyze(const Signal& f) const {
  if (f.size() != n_) throw std::invalid_argument("analyze: dimension mismatch");
  CVec out(2 * n_);
  out.head(n_) = f;
  out.tail(n_) = basis2_adjoint(f);
  return out;
}

double PairDictionary::mutual_incoherence() const {
  // <e_t, phi_w> is entry (t, w) of the second basis.
  if (!basis2_) return 1.0 / std::sqrt(static_cast<double>(n_));
  return basis2_->cwiseAbs().maxCoeff();
}

PairDictionary make_dictionary(int n, DictionaryKind kind,
                               std::optional<std::uint64_t> seed) {
  return PairDictionary::make(n, kind, seed);
}

}  // namespace qrup
