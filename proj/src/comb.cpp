// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "gacomb/comb.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace gacomb {

AlgebraConfig::AlgebraConfig(int n_, bool complex_bit_, bool aux_bit_)
    : n(n_), complex_bit(complex_bit_), aux_bit(aux_bit_) {
  if (n < 1) {
    throw ConfigError("algebra needs at least one data bit, got n=" + std::to_string(n));
  }
  if (total_dims() > kMaxTotalDims) {
    throw ConfigError("total dimension " + std::to_string(total_dims()) + " exceeds the " +
                      std::to_string(kMaxTotalDims) + "-bit mask limit");
  }
}

CombMask AlgebraConfig::allowed_mask() const {
  CombMask data = ((CombMask{1} << n) - 1) << 1;
  CombMask mask = data;
  if (complex_bit) mask |= CombMask{1};
  if (aux_bit) mask |= CombMask{1} << aux_position();
  return mask;
}

std::string format_mask(const AlgebraConfig& cfg, CombMask mask) {
  std::string out;
  out.reserve(static_cast<std::size_t>(cfg.total_dims()));
  if (cfg.complex_bit) out.push_back((mask & 1) ? '1' : '0');
  for (int k = 1; k <= cfg.n; ++k) out.push_back(((mask >> k) & 1) ? '1' : '0');
  if (cfg.aux_bit) out.push_back(((mask >> cfg.aux_position()) & 1) ? '1' : '0');
  return out;
}

CombMask parse_mask(const AlgebraConfig& cfg, std::string_view bits) {
  if (static_cast<int>(bits.size()) != cfg.total_dims()) {
    throw FormatError("bitstring has " + std::to_string(bits.size()) + " characters, expected " +
                      std::to_string(cfg.total_dims()));
  }
  CombMask mask = 0;
  int position = cfg.lowest_position();
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw FormatError(std::string("bitstring character '") + c + "' is not 0 or 1");
    }
    if (c == '1') mask |= CombMask{1} << position;
    ++position;
  }
  return mask;
}

std::string format_coeff(double value) {
  if (value == 0.0) return "0";
  if (value == std::floor(value) && std::abs(value) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.0f", value);
    return buf;
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace gacomb
