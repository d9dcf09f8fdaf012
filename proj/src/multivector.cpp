// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "gacomb/multivector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gacomb/kernels.hpp"

namespace gacomb {

namespace {

void require_same_config(const Multivector& a, const Multivector& b, const char* op) {
  if (a.config() != b.config()) {
    throw WidthMismatchError(std::string(op) + ": operands use different algebra configurations");
  }
}

void require_mask(const AlgebraConfig& cfg, CombMask mask) {
  if (!mask_valid(cfg, mask)) {
    throw ConfigError("mask " + std::to_string(mask) + " uses positions outside the algebra");
  }
}

}  // namespace

/// Shared canonicalization: stable sort by mask, fold duplicates in encounter
/// order, drop exact zeros. Determinism of every operation reduces to this.
Multivector canonicalize(const AlgebraConfig& cfg, std::vector<CombMask>&& masks,
                         std::vector<double>&& coeffs) {
  Multivector out(cfg);
  const std::size_t n = masks.size();
  if (n == 0) return out;

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t i, std::uint32_t j) { return masks[i] < masks[j]; });

  out.masks_.reserve(n);
  out.coeffs_.reserve(n);
  std::size_t i = 0;
  while (i < n) {
    const CombMask mask = masks[order[i]];
    double sum = coeffs[order[i]];
    for (++i; i < n && masks[order[i]] == mask; ++i) sum += coeffs[order[i]];
    if (sum != 0.0) {
      out.masks_.push_back(mask);
      out.coeffs_.push_back(sum);
    }
  }
  return out;
}

Multivector Multivector::comb(const AlgebraConfig& cfg, CombMask mask, double coeff) {
  require_mask(cfg, mask);
  Multivector out(cfg);
  if (coeff != 0.0) {
    out.masks_.push_back(mask);
    out.coeffs_.push_back(coeff);
  }
  return out;
}

Multivector Multivector::from_terms(const AlgebraConfig& cfg, std::vector<Term> terms) {
  std::vector<CombMask> masks;
  std::vector<double> coeffs;
  masks.reserve(terms.size());
  coeffs.reserve(terms.size());
  for (const Term& t : terms) {
    require_mask(cfg, t.mask);
    masks.push_back(t.mask);
    coeffs.push_back(t.coeff);
  }
  return canonicalize(cfg, std::move(masks), std::move(coeffs));
}

double Multivector::coeff(CombMask mask) const {
  auto it = std::lower_bound(masks_.begin(), masks_.end(), mask);
  if (it == masks_.end() || *it != mask) return 0.0;
  return coeffs_[static_cast<std::size_t>(it - masks_.begin())];
}

Multivector Multivector::with_config(const AlgebraConfig& cfg) const {
  Multivector out(cfg);
  for (CombMask mask : masks_) require_mask(cfg, mask);
  out.masks_ = masks_;
  out.coeffs_ = coeffs_;
  return out;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  require_same_config(a, b, "geometric_product");
  const std::size_t na = a.term_count();
  const std::size_t nb = b.term_count();
  std::vector<CombMask> masks(na * nb);
  std::vector<double> coeffs(na * nb);
  const auto& ops = kernels::active_ops();
  for (std::size_t i = 0; i < na; ++i) {
    ops.product_row(a.mask_at(i), a.coeff_at(i), b.masks().data(), b.coeffs().data(), nb,
                    masks.data() + i * nb, coeffs.data() + i * nb);
  }
  return canonicalize(a.config(), std::move(masks), std::move(coeffs));
}

Multivector add(const Multivector& a, const Multivector& b) {
  require_same_config(a, b, "add");
  // Both inputs are sorted; a single merge keeps the result canonical.
  std::vector<CombMask> masks;
  std::vector<double> coeffs;
  masks.reserve(a.term_count() + b.term_count());
  coeffs.reserve(a.term_count() + b.term_count());
  std::size_t i = 0, j = 0;
  while (i < a.term_count() || j < b.term_count()) {
    if (j == b.term_count() || (i < a.term_count() && a.mask_at(i) < b.mask_at(j))) {
      masks.push_back(a.mask_at(i));
      coeffs.push_back(a.coeff_at(i));
      ++i;
    } else if (i == a.term_count() || b.mask_at(j) < a.mask_at(i)) {
      masks.push_back(b.mask_at(j));
      coeffs.push_back(b.coeff_at(j));
      ++j;
    } else {
      double sum = a.coeff_at(i) + b.coeff_at(j);
      if (sum != 0.0) {
        masks.push_back(a.mask_at(i));
        coeffs.push_back(sum);
      }
      ++i;
      ++j;
    }
  }
  return canonicalize(a.config(), std::move(masks), std::move(coeffs));
}

Multivector sub(const Multivector& a, const Multivector& b) { return add(a, scale(b, -1.0)); }

Multivector scale(const Multivector& a, double s) {
  if (s == 0.0) return Multivector(a.config());
  std::vector<CombMask> masks(a.masks().begin(), a.masks().end());
  std::vector<double> coeffs(a.term_count());
  for (std::size_t i = 0; i < a.term_count(); ++i) coeffs[i] = a.coeff_at(i) * s;
  return canonicalize(a.config(), std::move(masks), std::move(coeffs));
}

Multivector complex_i(const Multivector& z) {
  if (!z.config().complex_bit) {
    throw ConfigError("complex_i: the algebra has no complex flag position");
  }
  std::vector<CombMask> masks(z.term_count());
  std::vector<double> coeffs(z.term_count());
  for (std::size_t i = 0; i < z.term_count(); ++i) {
    const CombMask m = z.mask_at(i);
    masks[i] = m ^ CombMask{1};
    coeffs[i] = (m & 1) ? -z.coeff_at(i) : z.coeff_at(i);
  }
  return canonicalize(z.config(), std::move(masks), std::move(coeffs));
}

Multivector phase_rotate(const Multivector& z, double phi) {
  return add(scale(z, std::cos(phi)), scale(complex_i(z), std::sin(phi)));
}

Multivector reverse(const Multivector& a) {
  // Reordering g generators back to front costs g(g-1)/2 adjacent swaps.
  std::vector<CombMask> masks(a.masks().begin(), a.masks().end());
  std::vector<double> coeffs(a.term_count());
  for (std::size_t i = 0; i < a.term_count(); ++i) {
    const int g = grade(a.mask_at(i));
    coeffs[i] = ((g * (g - 1) / 2) & 1) ? -a.coeff_at(i) : a.coeff_at(i);
  }
  return canonicalize(a.config(), std::move(masks), std::move(coeffs));
}

double scalar_part(const Multivector& a) {
  if (!a.empty() && a.mask_at(0) == 0) return a.coeff_at(0);
  return 0.0;
}

double scalar_product(const Multivector& a, const Multivector& b) {
  require_same_config(a, b, "scalar_product");
  return scalar_part(geometric_product(reverse(a), b));
}

std::pair<Multivector, Multivector> factor_prefix(const AlgebraConfig& cfg, double alpha,
                                                  CombMask comb_ab, double beta, CombMask comb_ac,
                                                  int split_k) {
  if (split_k < 1 || split_k > cfg.n) {
    throw IndexError("factor_prefix: split index " + std::to_string(split_k) +
                     " outside 1.." + std::to_string(cfg.n));
  }
  if (!mask_valid(cfg, comb_ab) || !mask_valid(cfg, comb_ac)) {
    throw ConfigError("factor_prefix: comb uses positions outside the algebra");
  }
  // The shared region covers every position at or below the split, including
  // the complex flag; that keeps all prefix bits strictly below all suffix
  // bits, which is what makes the recomposition sign-free.
  const CombMask low = (CombMask{1} << (split_k + 1)) - 1;
  if ((comb_ab ^ comb_ac) & low) {
    throw FactorError("factor_prefix: combs disagree on positions at or below the split");
  }
  Multivector prefix = Multivector::comb(cfg, comb_ab & low, 1.0);
  Multivector suffix = Multivector::from_terms(
      cfg, {{comb_ab & ~low, alpha}, {comb_ac & ~low, beta}});
  return {std::move(prefix), std::move(suffix)};
}

Multivector prune(const Multivector& a, double tol) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < a.term_count(); ++i) {
    if (std::abs(a.coeff_at(i)) > tol) terms.push_back({a.mask_at(i), a.coeff_at(i)});
  }
  return Multivector::from_terms(a.config(), std::move(terms));
}

double max_abs_diff(const Multivector& a, const Multivector& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.term_count(); ++i) {
    worst = std::max(worst, std::abs(a.coeff_at(i) - b.coeff(a.mask_at(i))));
  }
  for (std::size_t i = 0; i < b.term_count(); ++i) {
    worst = std::max(worst, std::abs(b.coeff_at(i) - a.coeff(b.mask_at(i))));
  }
  return worst;
}

bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  return a.config() == b.config() && max_abs_diff(a, b) <= tol;
}

std::string to_string(const Multivector& m) {
  if (m.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < m.term_count(); ++i) {
    if (i) out += " + ";
    out += format_coeff(m.coeff_at(i));
    out += " c";
    out += format_mask(m.config(), m.mask_at(i));
  }
  return out;
}

}  // namespace gacomb
