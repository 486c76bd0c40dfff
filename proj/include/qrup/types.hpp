#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace qrup {

using Complex = std::complex<double>;
using Signal = Eigen::VectorXcd;  // vector in C^N, time or transform domain
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;

// Sorted, duplicate-free index set.
using IndexSet = std::vector<int>;

// Dictionary indexing convention: atom gamma in [0, n) is basis-1 atom gamma,
// gamma in [n, 2n) is basis-2 atom gamma - n.

// Support sets in the two analysis domains over an ambient dimension n.
struct SupportPair {
  int n = 0;
  IndexSet t_set;      // basis-1 indices, subset of [0, n)
  IndexSet omega_set;  // basis-2 indices, subset of [0, n)

  int total_size() const {
    return static_cast<int>(t_set.size() + omega_set.size());
  }

  // Combined dictionary support T ∪ (Ω + n), sorted.
  IndexSet dictionary_support() const {
    IndexSet gamma;
    gamma.reserve(t_set.size() + omega_set.size());
    gamma.insert(gamma.end(), t_set.begin(), t_set.end());
    for (int w : omega_set) gamma.push_back(w + n);
    return gamma;
  }
};

// Coefficient vector over the 2N dictionary atoms with explicit support.
// entries(gamma) == 0 for every gamma outside `support`.
struct CoefficientVector {
  CVec entries;      // length 2n
  IndexSet support;  // sorted subset of [0, 2n)

  int n() const { return static_cast<int>(entries.size()) / 2; }
};

inline CoefficientVector zero_coefficients(int n) {
  return CoefficientVector{CVec::Zero(2 * n), {}};
}

// Places `values` (aligned with the sorted support) onto a 2n vector.
inline CoefficientVector coefficients_on_support(int n, IndexSet support,
                                                 const CVec& values) {
  if (static_cast<int>(support.size()) != values.size())
    throw std::invalid_argument("coefficients_on_support: size mismatch");
  CoefficientVector a{CVec::Zero(2 * n), std::move(support)};
  for (int i = 0; i < values.size(); ++i) {
    int g = a.support[static_cast<size_t>(i)];
    if (g < 0 || g >= 2 * n)
      throw std::invalid_argument("coefficients_on_support: index out of range");
    a.entries(g) = values(i);
  }
  return a;
}

// Splits a sorted dictionary support Gamma ⊆ [0, 2n) into per-basis sets.
inline SupportPair split_dictionary_support(int n, const IndexSet& gamma) {
  SupportPair s;
  s.n = n;
  for (int g : gamma) {
    if (g < 0 || g >= 2 * n)
      throw std::invalid_argument("split_dictionary_support: index out of range");
    if (g < n)
      s.t_set.push_back(g);
    else
      s.omega_set.push_back(g - n);
  }
  return s;
}

// sgn(z) = z/|z| for z != 0, and 0 at z = 0.
inline Complex csign(Complex z) {
  double m = std::abs(z);
  return m == 0.0 ? Complex(0.0, 0.0) : z / m;
}

// Sign vector of a coefficient vector: sgn on the support, 0 elsewhere.
inline CVec sign_vector(const CoefficientVector& a) {
  CVec s = CVec::Zero(a.entries.size());
  for (int g : a.support) s(g) = csign(a.entries(g));
  return s;
}

}  // namespace qrup
