#pragma once

#include <optional>
#include <utility>

#include "qrup/dictionary.hpp"

namespace qrup {

// Cross-basis operator restricted to a support pair:
//   A = R_Omega Phi2* Phi1 R_T*,  size |Omega| x |T|,
// entry (w, t) = <basis-2 atom w, basis-1 atom t>. For the spike-Fourier
// pair this is the partial Fourier matrix with entries e^{-i 2 pi w t / N} / sqrt(N).
struct PartialOperator {
  CMat matrix;
  SupportPair supports;
};

PartialOperator partial_operator(const PairDictionary& d, const SupportPair& s);

// Auxiliary |T| x |T| matrix for the spike-Fourier pair: zero diagonal and
// H(t, t') = sum_{w in Omega} e^{i 2 pi w (t - t') / N} off it, so that
// N A*A = |Omega| I + H entrywise.
CMat auxiliary_matrix(const SupportPair& s);

// Largest eigenvalue of A*A (the squared operator norm). Dense Hermitian
// eigendecomposition up to `dense_cap` on the smaller Gram side, power
// iteration beyond it (relative tolerance 1e-10).
double operator_norm_sq(const PartialOperator& a, int dense_cap = 2048);

struct SpectralReport {
  double op_norm_sq = 0.0;      // ||A* A||
  double gram_min_eig = 1.0;    // extreme eigenvalues of Phi_Gamma* Phi_Gamma
  double gram_max_eig = 1.0;
  std::optional<double> aux_norm;  // ||H_T||, spike-Fourier only
  double trace_gsg = 0.0;          // Tr(G* G), G = Phi_Gamma* Phi_Gamma - I
  double pairing_residual = 0.0;   // max deviation of gram spectrum from {1 +- sigma_i(A)}
  bool qrup_pass = false;          // op_norm_sq <= 1/2
  RVec gram_eigenvalues;           // ascending
};

// Restricted Gram matrix Phi_Gamma* Phi_Gamma = [[I, A*], [A, I]], ordered
// with the |T| basis-1 atoms first.
CMat restricted_gram(const PairDictionary& d, const SupportPair& s);

// Spectrum of the |Gamma| x |Gamma| Gram matrix [[I, A*], [A, I]], plus the
// derived report fields.
SpectralReport gram_spectrum(const PairDictionary& d, const SupportPair& s);

struct TraceIdentity {
  double computed = 0.0;   // Tr(G* G) from the assembled matrix
  double predicted = 0.0;  // 2 |T| |Omega| / N
};

// Spike-Fourier trace identity.
TraceIdentity trace_identity_check(const SupportPair& s);

// Energy-splitting check: true iff ||A* A|| <= 1/2, which bounds the energy
// any signal supported on T can place on Omega in the other domain.
std::pair<bool, SpectralReport> qrup_check(const PairDictionary& d,
                                           const SupportPair& s);

}  // namespace qrup
