#include "qrup/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qrup/random.hpp"

namespace qrup {

namespace {

void check_supports(const SupportPair& s) {
  for (int t : s.t_set)
    if (t < 0 || t >= s.n) throw std::invalid_argument("support index out of range");
  for (int w : s.omega_set)
    if (w < 0 || w >= s.n) throw std::invalid_argument("support index out of range");
}

}  // namespace

PartialOperator partial_operator(const PairDictionary& d, const SupportPair& s) {
  if (s.n != d.n()) throw std::invalid_argument("partial_operator: dimension mismatch");
  check_supports(s);
  const int rows = static_cast<int>(s.omega_set.size());
  const int cols = static_cast<int>(s.t_set.size());
  CMat a(rows, cols);
  if (d.has_matrix()) {
    const CMat& b = d.basis2_matrix();
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < rows; ++i)
        a(i, j) = std::conj(b(s.t_set[static_cast<size_t>(j)],
                              s.omega_set[static_cast<size_t>(i)]));
  } else {
    const double root = std::sqrt(static_cast<double>(s.n));
    for (int j = 0; j < cols; ++j) {
      const long long t = s.t_set[static_cast<size_t>(j)];
      for (int i = 0; i < rows; ++i) {
        const long long w = s.omega_set[static_cast<size_t>(i)];
        const double angle =
            -2.0 * std::numbers::pi * static_cast<double>((w * t) % s.n) / s.n;
        a(i, j) = std::polar(1.0 / root, angle);
      }
    }
  }
  return PartialOperator{std::move(a), s};
}

CMat auxiliary_matrix(const SupportPair& s) {
  check_supports(s);
  const int k = static_cast<int>(s.t_set.size());
  CMat h = CMat::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < i; ++j) {
      const int delta = s.t_set[static_cast<size_t>(i)] - s.t_set[static_cast<size_t>(j)];
      Complex sum(0.0, 0.0);
      for (int w : s.omega_set) {
        const long long e = (1ll * w * delta) % s.n;
        sum += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / s.n);
      }
      h(i, j) = sum;          // H(t, t') with t > t'
      h(j, i) = std::conj(sum);
    }
  }
  return h;
}

namespace {

double largest_eig_dense(const CMat& gram) {
  if (gram.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<CMat> es(gram, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

double largest_eig_power(const CMat& a, double rel_tol) {
  const int nc = static_cast<int>(a.cols());
  Rng rng(0x9d2c5680u);
  CVec v(nc);
  for (int i = 0; i < nc; ++i) v(i) = rng.complex_gaussian(1.0);
  v.normalize();
  double lambda = 0.0;
  for (int it = 0; it < 100000; ++it) {
    CVec w = a.adjoint() * (a * v);
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    const double next = v.dot(w).real();
    w /= norm;
    const bool settled = std::abs(next - lambda) <= rel_tol * std::max(next, 1e-300);
    lambda = next;
    v.swap(w);
    if (settled && it > 2) break;
  }
  return lambda;
}

}  // namespace

double operator_norm_sq(const PartialOperator& a, int dense_cap) {
  const auto rows = a.matrix.rows();
  const auto cols = a.matrix.cols();
  if (rows == 0 || cols == 0) return 0.0;
  const auto small = std::min(rows, cols);
  if (small > dense_cap) return largest_eig_power(a.matrix, 1e-10);
  // the two Gram products share nonzero spectrum; take the smaller
  CMat gram = (cols <= rows) ? CMat(a.matrix.adjoint() * a.matrix)
                             : CMat(a.matrix * a.matrix.adjoint());
  return largest_eig_dense(gram);
}

CMat restricted_gram(const PairDictionary& d, const SupportPair& s) {
  const PartialOperator op = partial_operator(d, s);
  const int kt = static_cast<int>(s.t_set.size());
  const int kw = static_cast<int>(s.omega_set.size());
  CMat gram = CMat::Identity(kt + kw, kt + kw);
  gram.block(kt, 0, kw, kt) = op.matrix;
  gram.block(0, kt, kt, kw) = op.matrix.adjoint();
  return gram;
}

SpectralReport gram_spectrum(const PairDictionary& d, const SupportPair& s) {
  const PartialOperator op = partial_operator(d, s);
  const int kt = static_cast<int>(s.t_set.size());
  const int kw = static_cast<int>(s.omega_set.size());
  const int k = kt + kw;
  if (k < 1) throw std::invalid_argument("gram_spectrum: empty support");

  CMat gram = CMat::Identity(k, k);
  gram.block(kt, 0, kw, kt) = op.matrix;
  gram.block(0, kt, kt, kw) = op.matrix.adjoint();

  Eigen::SelfAdjointEigenSolver<CMat> es(gram, Eigen::EigenvaluesOnly);

  SpectralReport r;
  r.gram_eigenvalues = es.eigenvalues();
  r.gram_min_eig = r.gram_eigenvalues.minCoeff();
  r.gram_max_eig = r.gram_eigenvalues.maxCoeff();
  r.op_norm_sq = operator_norm_sq(op);
  r.qrup_pass = r.op_norm_sq <= 0.5;
  r.trace_gsg = 2.0 * op.matrix.squaredNorm();  // Tr(G*G) = 2 ||A||_F^2

  // Expected spectrum: 1 +- sigma_i(A), padded with exact ones.
  std::vector<double> expected;
  expected.reserve(static_cast<size_t>(k));
  if (kt > 0 && kw > 0) {
    Eigen::BDCSVD<CMat> svd(op.matrix);
    for (int i = 0; i < svd.singularValues().size(); ++i) {
      expected.push_back(1.0 - svd.singularValues()(i));
      expected.push_back(1.0 + svd.singularValues()(i));
    }
  }
  while (static_cast<int>(expected.size()) < k) expected.push_back(1.0);
  std::sort(expected.begin(), expected.end());
  double worst = 0.0;
  for (int i = 0; i < k; ++i)
    worst = std::max(worst,
                     std::abs(r.gram_eigenvalues(i) - expected[static_cast<size_t>(i)]));
  r.pairing_residual = worst;

  if (!d.has_matrix() && kt > 0) {
    const CMat h = auxiliary_matrix(s);
    Eigen::SelfAdjointEigenSolver<CMat> hes(h, Eigen::EigenvaluesOnly);
    r.aux_norm = hes.eigenvalues().cwiseAbs().maxCoeff();
  }
  return r;
}

TraceIdentity trace_identity_check(const SupportPair& s) {
  const PairDictionary d = PairDictionary::make(s.n, DictionaryKind::spike_fourier);
  const PartialOperator op = partial_operator(d, s);
  const int kt = static_cast<int>(s.t_set.size());
  const int kw = static_cast<int>(s.omega_set.size());
  CMat g = CMat::Zero(kt + kw, kt + kw);
  g.block(kt, 0, kw, kt) = op.matrix;
  g.block(0, kt, kt, kw) = op.matrix.adjoint();
  TraceIdentity t;
  t.computed = (g.adjoint() * g).trace().real();
  t.predicted = 2.0 * kt * kw / static_cast<double>(s.n);
  return t;
}

std::pair<bool, SpectralReport> qrup_check(const PairDictionary& d,
                                           const SupportPair& s) {
  if (s.t_set.empty() && s.omega_set.empty()) {
    SpectralReport r;
    r.qrup_pass = true;
    r.gram_eigenvalues = RVec();
    return {true, r};
  }
  SpectralReport r = gram_spectrum(d, s);
  return {r.qrup_pass, r};
}

}  // namespace qrup
