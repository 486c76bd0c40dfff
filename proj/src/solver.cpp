#include "qrup/solver.hpp"

#include <algorithm>
#include <cmath>

#include "qrup/spectral.hpp"

namespace qrup {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::max_iters: return "max_iters";
    case SolveStatus::infeasible_input: return "infeasible_input";
  }
  return "unknown";
}

namespace {

// Complex soft threshold: shrink the modulus by lambda, keep the phase.
void soft_threshold(const CVec& v, double lambda, CVec& out) {
  const auto m = v.size();
  for (Eigen::Index i = 0; i < m; ++i) {
    const double mag = std::abs(v(i));
    out(i) = (mag <= lambda) ? Complex(0.0, 0.0) : v(i) * ((mag - lambda) / mag);
  }
}

IndexSet effective_support(const CVec& a, double cutoff) {
  IndexSet s;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (std::abs(a(i)) > cutoff) s.push_back(static_cast<int>(i));
  return s;
}

double smallest_gram_eig(const PairDictionary& d, const IndexSet& gamma) {
  const int n = d.n();
  if (static_cast<int>(gamma.size()) > n) return 0.0;  // rank(Phi_Gamma) <= n
  if (gamma.empty()) return 1.0;
  const CMat gram = restricted_gram(d, split_dictionary_support(n, gamma));
  Eigen::SelfAdjointEigenSolver<CMat> es(gram, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

DualCertificate certificate_from_dual(const PairDictionary& d, const Signal& s,
                                      const IndexSet& gamma, const CVec& signs,
                                      double gram_min_eig) {
  DualCertificate c;
  c.dual_signal = s;
  c.p_vector = d.analyze(s);
  c.gram_min_eig = gram_min_eig;
  double on = 0.0;
  for (size_t i = 0; i < gamma.size(); ++i)
    on = std::max(on, std::abs(c.p_vector(gamma[i]) - signs(static_cast<Eigen::Index>(i))));
  c.on_support_residual = on;
  double off = 0.0;
  size_t next = 0;
  for (Eigen::Index g = 0; g < c.p_vector.size(); ++g) {
    if (next < gamma.size() && gamma[next] == g) {
      ++next;
      continue;
    }
    off = std::max(off, std::abs(c.p_vector(g)));
  }
  c.off_support_max = off;
  return c;
}

}  // namespace

SolveResult basis_pursuit(const PairDictionary& d, const Signal& f,
                          const SolverConfig& cfg) {
  const int n = d.n();
  SolveResult res;
  if (f.size() != n) {
    res.status = SolveStatus::infeasible_input;
    res.alpha_hat = zero_coefficients(n);
    return res;
  }
  const double fnorm = f.norm();
  if (fnorm == 0.0) {
    res.alpha_hat = zero_coefficients(n);
    res.status = SolveStatus::optimal;
    return res;
  }

  const Signal g = f / fnorm;
  const CVec pg = d.analyze(g);
  // Threshold scale tracks the coefficient magnitudes of the normalized
  // input; the 0.03 factor is calibrated on N=256..1024 recovery instances.
  const double lambda = cfg.step_parameter * 0.03 * pg.cwiseAbs().maxCoeff();

  CVec z = 0.5 * pg;
  CVec alpha = CVec::Zero(2 * n);
  CVec prev = CVec::Zero(2 * n);
  CVec reflected(2 * n), shrunk(2 * n);
  Signal phi_z(n), residual(n);

  int it = 0;
  bool converged = false;
  double rel_gap = 0.0;
  while (true) {
    ++it;
    phi_z = d.synthesize(z);
    residual = g - phi_z;
    alpha = z + 0.5 * d.analyze(residual);

    const double l1 = alpha.lpNorm<1>();
    if (cfg.record_objective) res.objective_history.push_back(l1);

    // Dual candidate from the iterate: S = residual / (2 lambda), so
    // Phi* S = (alpha - z) / lambda comes free.
    const double p_inf = (alpha - z).lpNorm<Eigen::Infinity>() / lambda;
    const double dual_obj =
        (residual.dot(g).real() / (2.0 * lambda)) / std::max(1.0, p_inf);
    const double gap = l1 - dual_obj;
    rel_gap = std::abs(gap) / std::max(1.0, l1);

    const double change =
        (alpha - prev).norm() / std::max(alpha.norm(), 1e-300);
    prev = alpha;

    if (rel_gap <= cfg.duality_gap_tol && change <= cfg.duality_gap_tol &&
        (d.synthesize(alpha) - g).norm() <= cfg.feasibility_tol)
      converged = true;

    if (converged || it >= cfg.max_iterations) break;

    reflected = 2.0 * alpha - z;
    soft_threshold(reflected, lambda, shrunk);
    z += shrunk - alpha;
  }

  res.iterations = it;
  res.status = converged ? SolveStatus::optimal : SolveStatus::max_iters;
  res.feasibility_residual = (d.synthesize(alpha) - g).norm();
  res.l1_value = alpha.lpNorm<1>() * fnorm;
  res.duality_gap = rel_gap;

  res.alpha_hat.entries = alpha * fnorm;
  res.alpha_hat.support =
      effective_support(res.alpha_hat.entries, 0.0);  // exact nonzero pattern

  if (cfg.with_certificate) {
    // Scale the raw dual into (D1) feasibility before reporting it.
    Signal s_dual = residual / (2.0 * lambda);
    const CVec p_raw = (alpha - z) / lambda;
    const double p_inf = p_raw.lpNorm<Eigen::Infinity>();
    if (p_inf > 1.0) s_dual /= p_inf;
    const IndexSet gamma = effective_support(
        alpha, 1e-6 * alpha.cwiseAbs().maxCoeff());
    CVec signs(static_cast<Eigen::Index>(gamma.size()));
    for (size_t i = 0; i < gamma.size(); ++i)
      signs(static_cast<Eigen::Index>(i)) = csign(alpha(gamma[i]));
    res.certificate = certificate_from_dual(d, s_dual, gamma, signs,
                                            smallest_gram_eig(d, gamma));
  }
  return res;
}

DualCertificate min_energy_dual(const PairDictionary& d, const IndexSet& support,
                                const CVec& signs) {
  const int n = d.n();
  if (static_cast<int>(support.size()) != signs.size())
    throw std::invalid_argument("min_energy_dual: signs must align with support");
  for (Eigen::Index i = 0; i < signs.size(); ++i)
    if (std::abs(std::abs(signs(i)) - 1.0) > 1e-12)
      throw std::invalid_argument("min_energy_dual: signs must be unit modulus");
  if (support.empty())
    throw std::invalid_argument("min_energy_dual: empty support");
  for (size_t i = 1; i < support.size(); ++i)
    if (support[i] <= support[i - 1])
      throw std::invalid_argument("min_energy_dual: support must be sorted and unique");

  const SupportPair split = split_dictionary_support(n, support);
  if (static_cast<int>(support.size()) > n) throw GramSingularError(0.0);
  const CMat gram = restricted_gram(d, split);
  Eigen::SelfAdjointEigenSolver<CMat> es(gram);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig <= 1e-8) throw GramSingularError(min_eig);

  const CVec u = es.eigenvectors() *
                 (es.eigenvalues().cwiseInverse().asDiagonal() *
                  (es.eigenvectors().adjoint() * signs));
  const Signal s = d.synthesize(coefficients_on_support(n, support, u));
  return certificate_from_dual(d, s, support, signs, min_eig);
}

bool certificate_valid(const DualCertificate& c) {
  return c.on_support_residual <= 1e-8 && c.off_support_max < 1.0 - 1e-10 &&
         c.gram_min_eig > 1e-8;
}

KktReport kkt_check(const PairDictionary& d, const Signal& f,
                    const SolveResult& r, double gap_tol) {
  if (r.status != SolveStatus::optimal)
    throw std::invalid_argument("kkt_check: result is not optimal");
  KktReport rep;
  if (f.norm() == 0.0) {
    rep.pass = true;
    return rep;
  }
  if (!r.certificate)
    throw std::invalid_argument("kkt_check: solve carried no certificate");
  // dual_signal was built against f/||f||; pairing it with f restores the
  // scale of l1_value
  const CVec p = d.analyze(r.certificate->dual_signal);
  rep.p_inf_norm = p.lpNorm<Eigen::Infinity>();
  rep.dual_objective = r.certificate->dual_signal.dot(f).real();
  rep.duality_gap = r.l1_value - rep.dual_objective;
  rep.relative_gap = std::abs(rep.duality_gap) / std::max(1.0, r.l1_value);
  rep.pass = rep.p_inf_norm <= 1.0 + 1e-6 &&
             rep.duality_gap <= gap_tol * std::max(1.0, r.l1_value);
  return rep;
}

bool recovery_success(const CoefficientVector& alpha_hat,
                      const CoefficientVector& alpha_true, double rel_tol) {
  if (alpha_hat.entries.size() != alpha_true.entries.size())
    throw std::invalid_argument("recovery_success: length mismatch");
  const double true_norm = alpha_true.entries.norm();
  const double err = (alpha_hat.entries - alpha_true.entries).norm();
  if (true_norm == 0.0) return alpha_hat.entries.norm() <= rel_tol;
  return err <= rel_tol * true_norm;
}

}  // namespace qrup
