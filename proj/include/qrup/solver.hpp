#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrup/dictionary.hpp"

namespace qrup {

struct SolverConfig {
  int max_iterations = 20000;
  double feasibility_tol = 1e-9;   // on ||Phi a - f||_2 / ||f||_2
  double duality_gap_tol = 1e-8;   // relative
  double step_parameter = 1.0;     // proximal step scale
  bool with_certificate = true;    // attach the dual built from the final iterate
  bool record_objective = false;   // keep the per-iteration l1 objective
};

enum class SolveStatus { optimal, max_iters, infeasible_input };

const char* to_string(SolveStatus s);

// Dual data for a coefficient vector on support Gamma: a signal S whose
// analysis P = Phi* S matches the sign pattern on Gamma and stays inside the
// unit disk off it.
struct DualCertificate {
  Signal dual_signal;                // S in C^N
  CVec p_vector;                     // P = Phi* S in C^{2N}
  double on_support_residual = 0.0;  // max_{g in Gamma} |P(g) - sgn(g)|
  double off_support_max = 0.0;      // max_{g not in Gamma} |P(g)|
  double gram_min_eig = 0.0;         // smallest eigenvalue of Phi_Gamma* Phi_Gamma
};

struct SolveResult {
  CoefficientVector alpha_hat;
  SolveStatus status = SolveStatus::optimal;
  int iterations = 0;
  double feasibility_residual = 0.0;  // ||Phi a - f||_2 / ||f||_2
  double l1_value = 0.0;
  double duality_gap = 0.0;  // relative
  std::optional<DualCertificate> certificate;
  std::vector<double> objective_history;  // filled when cfg.record_objective
};

/// Basis Pursuit over the dictionary: minimizes the sum of coefficient
/// moduli subject to Phi a = f.
///
/// Douglas-Rachford splitting between the l1 prox (complex soft threshold,
/// magnitude shrinkage preserving phase) and the exact projection onto the
/// affine feasible set, a <- a + Phi*(f - Phi a)/2, which is closed-form
/// because Phi Phi* = 2 I. Stops when feasibility, relative change and the
/// certificate-based duality gap are all inside tolerance. The input is
/// normalized internally, so the iteration is scale and phase equivariant.
SolveResult basis_pursuit(const PairDictionary& d, const Signal& f,
                          const SolverConfig& cfg = {});

// Raised when Phi_Gamma* Phi_Gamma is numerically singular (smallest
// eigenvalue <= 1e-8), the failure event of the dual construction.
class GramSingularError : public std::runtime_error {
 public:
  explicit GramSingularError(double min_eig)
      : std::runtime_error("gram-singular: min eigenvalue " +
                           std::to_string(min_eig)),
        min_eig_(min_eig) {}
  double min_eig() const { return min_eig_; }

 private:
  double min_eig_;
};

/// Minimum-energy dual vector S = Phi_Gamma (Phi_Gamma* Phi_Gamma)^{-1} signs.
/// `signs` aligns with the sorted support and must be unit modulus.
DualCertificate min_energy_dual(const PairDictionary& d, const IndexSet& support,
                                const CVec& signs);

// True iff the on-support match is exact (<= 1e-8), the off-support maximum
// is strictly below 1 (margin 1e-10) and the restricted Gram is invertible.
// Implies the supported vector is the unique Basis Pursuit minimizer.
bool certificate_valid(const DualCertificate& c);

struct KktReport {
  double p_inf_norm = 0.0;     // ||Phi* S||_inf of the reconstructed dual
  double dual_objective = 0.0; // Re <S, f>
  double duality_gap = 0.0;    // l1_value - dual_objective
  double relative_gap = 0.0;
  bool pass = false;
};

// Optimality audit: rebuilds a dual feasible point from the solver's final
// iterate and reports the duality gap.
KktReport kkt_check(const PairDictionary& d, const Signal& f,
                    const SolveResult& r, double gap_tol = 1e-8);

// ||ahat - a||_2 <= rel_tol ||a||_2 (for a = 0: ||ahat||_2 <= rel_tol).
bool recovery_success(const CoefficientVector& alpha_hat,
                      const CoefficientVector& alpha_true,
                      double rel_tol = 1e-3);

}  // namespace qrup
