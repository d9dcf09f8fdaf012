// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gacomb/comb.hpp"

namespace gacomb {

struct Term {
  CombMask mask = 0;
  double coeff = 0.0;
};

/// A real linear combination of blades, stored as parallel mask/coefficient
/// arrays in ascending mask order (canonical form: no zero coefficients, no
/// duplicate masks). Multivectors are immutable values; all operations are
/// pure functions, so instances can be shared across threads freely.
class Multivector {
 public:
  explicit Multivector(AlgebraConfig cfg) : cfg_(cfg) {}

  /// A single blade with the given coefficient.
  static Multivector comb(const AlgebraConfig& cfg, CombMask mask, double coeff = 1.0);

  /// The algebra unit (empty mask, coefficient 1): the all-zero comb.
  static Multivector vacuum(const AlgebraConfig& cfg) { return comb(cfg, 0, 1.0); }

  static Multivector scalar(const AlgebraConfig& cfg, double value) {
    return comb(cfg, 0, value);
  }

  /// Canonicalizes an arbitrary term list: sorts by mask, sums duplicates in
  /// encounter order, drops exact zeros. Throws if a mask uses positions the
  /// algebra does not reserve.
  static Multivector from_terms(const AlgebraConfig& cfg, std::vector<Term> terms);

  const AlgebraConfig& config() const { return cfg_; }
  int dim() const { return cfg_.n; }
  std::size_t term_count() const { return masks_.size(); }
  bool empty() const { return masks_.empty(); }

  std::span<const CombMask> masks() const { return masks_; }
  std::span<const double> coeffs() const { return coeffs_; }
  CombMask mask_at(std::size_t i) const { return masks_[i]; }
  double coeff_at(std::size_t i) const { return coeffs_[i]; }

  /// Coefficient of a mask, 0 when absent.
  double coeff(CombMask mask) const;

  /// Same terms in an algebra with different reserved positions. Throws
  /// ConfigError if an existing mask does not fit the new configuration.
  Multivector with_config(const AlgebraConfig& cfg) const;

  /// Exact structural equality: same configuration, same terms bit-for-bit.
  bool operator==(const Multivector& other) const = default;

 private:
  friend Multivector canonicalize(const AlgebraConfig&, std::vector<CombMask>&&,
                                  std::vector<double>&&);

  AlgebraConfig cfg_;
  std::vector<CombMask> masks_;
  std::vector<double> coeffs_;
};

/// Bilinear extension of the signed-XOR product rule on combs. Rejects
/// mismatched algebra configurations.
Multivector geometric_product(const Multivector& a, const Multivector& b);

Multivector add(const Multivector& a, const Multivector& b);
Multivector sub(const Multivector& a, const Multivector& b);
Multivector scale(const Multivector& a, double s);

/// The complex structure map: flips the complex flag (position 0) and negates
/// the coefficient when the flag was set. Squares to -1. Requires the
/// complex bit to be reserved.
Multivector complex_i(const Multivector& z);

/// cos(phi) * z + sin(phi) * i z.
Multivector phase_rotate(const Multivector& z, double phi);

/// Reversion anti-automorphism: per blade (-1)^(g(g-1)/2) with g the grade.
Multivector reverse(const Multivector& a);

/// Coefficient of the empty mask (grade-0 projection).
double scalar_part(const Multivector& a);

/// scalar_part(reverse(a) * b); orthonormality of combs makes this the
/// Euclidean inner product of the coefficient vectors.
double scalar_product(const Multivector& a, const Multivector& b);

/// Splits alpha * c_AB + beta * c_AC into (prefix, suffix) with
/// prefix = the shared comb on positions <= split_k and
/// suffix = alpha * c_B + beta * c_C on positions > split_k, such that
/// geometric_product(prefix, suffix) recomposes the input exactly (the
/// prefix bits all lie strictly below the suffix bits, so no sign appears).
/// Throws FactorError when the two combs disagree at or below the split.
std::pair<Multivector, Multivector> factor_prefix(const AlgebraConfig& cfg, double alpha,
                                                  CombMask comb_ab, double beta, CombMask comb_ac,
                                                  int split_k);

/// Drops terms with |coefficient| <= tol. Core operations never prune; this
/// is the one explicit place numerical noise can be removed.
Multivector prune(const Multivector& a, double tol);

/// Largest |coefficient difference| over the union of term masks.
double max_abs_diff(const Multivector& a, const Multivector& b);

bool approx_equal(const Multivector& a, const Multivector& b, double tol);

/// One-line rendering like "0.5 c010 + -1 c110" (for logs and the CLI).
std::string to_string(const Multivector& m);

}  // namespace gacomb
