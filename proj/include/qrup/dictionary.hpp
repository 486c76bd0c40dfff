#pragma once

#include <cstdint>
#include <optional>

#include "qrup/types.hpp"

namespace qrup {

enum class DictionaryKind { spike_fourier, spike_random, custom };

const char* to_string(DictionaryKind k);

/// Two-orthobasis dictionary Phi = [Phi1 Phi2] on C^N.
///
/// Basis 1 is always the spike (identity) basis. Basis 2 is either the
/// unitary Fourier basis with atoms phi_w(t) = e^{i 2 pi w t / N} / sqrt(N),
/// applied via FFT, or an explicit dense unitary matrix (Haar-random or
/// user supplied). Since both bases are orthonormal, Phi Phi* = 2 I.
///
/// Immutable after construction; safe to share across threads.
class PairDictionary {
 public:
  static PairDictionary make(int n, DictionaryKind kind,
                             std::optional<std::uint64_t> seed = {});
  /// Wraps an explicit second basis; columns must be orthonormal.
  static PairDictionary custom(CMat basis2);

  int n() const { return n_; }
  DictionaryKind kind() const { return kind_; }
  std::optional<std::uint64_t> seed() const { return seed_; }
  bool has_matrix() const { return basis2_.has_value(); }
  const CMat& basis2_matrix() const;

  /// Phi2 a for a length-N coefficient block.
  Signal basis2_apply(const CVec& a) const;
  /// Phi2* f.
  CVec basis2_adjoint(const Signal& f) const;

  /// Dictionary column gamma, gamma in [0, 2N).
  Signal atom(int gamma) const;

  /// f = Phi1 a1 + Phi2 a2 from a stacked length-2N coefficient vector.
  Signal synthesize(const CVec& stacked) const;
  Signal synthesize(const CoefficientVector& a) const;

  /// (Phi1* f ; Phi2* f), length 2N. synthesize(analyze(f)) == 2 f.
  CVec analyze(const Signal& f) const;

  /// max |<phi1, phi2>| over atom pairs; lies in [1/sqrt(N), 1].
  double mutual_incoherence() const;

 private:
  PairDictionary(int n, DictionaryKind kind, std::optional<std::uint64_t> seed,
                 std::optional<CMat> basis2);

  int n_;
  DictionaryKind kind_;
  std::optional<std::uint64_t> seed_;
  std::optional<CMat> basis2_;
};

PairDictionary make_dictionary(int n, DictionaryKind kind,
                               std::optional<std::uint64_t> seed = {});

}  // namespace qrup
