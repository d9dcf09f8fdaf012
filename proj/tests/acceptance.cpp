// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: gacomb_acceptance <path-to-gacomb-cli>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "gacomb/algorithms.hpp"
#include "gacomb/dsl.hpp"
#include "gacomb/gates.hpp"
#include "gacomb/mvtx.hpp"
#include "gacomb/oracle.hpp"
#include "gacomb/render.hpp"
#include "gacomb/verify.hpp"

using namespace gacomb;

namespace {

std::string g_cli_path;

struct Criterion {
  int number;
  std::string name;
  double time_limit_s;
  std::function<bool(std::string&)> run;
};

std::string run_cli(const std::string& args) {
  const std::string command = g_cli_path + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "";
  std::string output;
  char buf[512];
  while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) output.append(buf, got);
  pclose(pipe);
  return output;
}

CombMask data_bits(std::string_view s) {
  CombMask mask = 0;
  int position = 1;
  for (char c : s) {
    if (c == '1') mask |= CombMask{1} << position;
    ++position;
  }
  return mask;
}

constexpr double kInvSqrt2 = 0.70710678118654752440;

// 1. The worked sign example through the CLI, plus exhaustive products for
// n <= 6 against the transposition-parity oracle.
bool criterion_sign_rule(std::string& detail) {
  const std::string output = run_cli("eval \"c10011 * c01011\"");
  if (output.find("-1 c11000") == std::string::npos) {
    detail = "cli eval printed: " + output;
    return false;
  }
  const verify::SuiteResult signs = verify::check_product_signs({6, 2000, 2026});
  detail = "cli ok; " + signs.detail;
  return signs.pass;
}

// 2. Bit-level gates equal the literal sandwich formulas, every comb n <= 5.
bool criterion_sandwich(std::string& detail) {
  const verify::SuiteResult result = verify::check_sandwich_gates({5, 0, 0});
  detail = result.pass ? result.detail : result.detail + " (mismatch)";
  return result.pass;
}

// 3. 200 random circuits commute with the correspondence map within 1e-10.
bool criterion_correspondence(std::string& detail) {
  const verify::SuiteResult result = verify::check_correspondence({4, 1000, 424242});
  detail = result.detail;
  return result.pass;
}

// 4. n Hadamards on the vacuum give 2^(-n/2) * (sum of all combs) exactly,
// with operation count exactly 2n, for n <= 10.
bool criterion_hadamard_cost(std::string& detail) {
  for (int n = 1; n <= 10; ++n) {
    const AlgebraConfig cfg(n);
    Circuit c;
    c.width = n;
    for (int k = 1; k <= n; ++k) c.ops.push_back(GateOp::had(k));
    const auto [state, counter] = apply_circuit(Multivector::vacuum(cfg), c);

    if (counter.count != static_cast<std::uint64_t>(2 * n)) {
      detail = "n=" + std::to_string(n) + ": counter " + std::to_string(counter.count);
      return false;
    }
    double norm = 1.0;
    for (int k = 0; k < n; ++k) norm *= kInvSqrt2;
    std::vector<Term> terms;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) terms.push_back({m << 1, norm});
    const Multivector want = Multivector::from_terms(cfg, std::move(terms));
    if (!(state == want)) {
      detail = "n=" + std::to_string(n) + ": state differs from 2^(-n/2) sum of combs";
      return false;
    }
    if (!(state == hadamard_state(n))) {
      detail = "n=" + std::to_string(n) + ": gate ladder differs from the product build";
      return false;
    }
  }
  detail = "n=1..10 exact, counter 2n";
  return true;
}

// 5. Shor-15 periods for all coprime bases; base 2 gives 4 and factors 3,5
// with the 16-term oracle state.
bool criterion_shor(std::string& detail) {
  const Shor15Result base2 = shor15(2);
  if (base2.period != 4 || base2.factors != std::pair<int, int>(3, 5)) {
    detail = "base 2: period " + std::to_string(base2.period);
    return false;
  }
  if (base2.trace[0].term_count() != 16) {
    detail = "oracle state has " + std::to_string(base2.trace[0].term_count()) + " terms";
    return false;
  }
  if (base2.selected_x != std::vector<int>{0, 4, 8, 12}) {
    detail = "selection picked the wrong blades";
    return false;
  }
  for (int base : {2, 4, 7, 8, 11, 13, 14}) {
    int x = base % 15, order = 1;
    while (x != 1) {
      x = x * base % 15;
      ++order;
    }
    if (shor15(base).period != order) {
      detail = "base " + std::to_string(base) + ": period != multiplicative order";
      return false;
    }
  }
  detail = "all 7 coprime bases match the brute-force order";
  return true;
}

// 6. Bell and GHZ coefficients are exact; the Bell basis is orthonormal with
// zero tolerance.
bool criterion_named_states(std::string& detail) {
  const AlgebraConfig two(2);
  const AlgebraConfig three(3);
  const CombMask b1 = 1 << 1, b2 = 1 << 2;
  const bool coeffs_ok =
      bell(BellState::psi_plus) ==
          Multivector::from_terms(two, {{b1, kInvSqrt2}, {b2, kInvSqrt2}}) &&
      bell(BellState::psi_minus) ==
          Multivector::from_terms(two, {{b1, -kInvSqrt2}, {b2, kInvSqrt2}}) &&
      bell(BellState::phi_plus) ==
          Multivector::from_terms(two, {{0, kInvSqrt2}, {b1 | b2, kInvSqrt2}}) &&
      bell(BellState::phi_minus) ==
          Multivector::from_terms(two, {{0, kInvSqrt2}, {b1 | b2, -kInvSqrt2}}) &&
      ghz() == Multivector::from_terms(three, {{0, kInvSqrt2}, {0b1110, kInvSqrt2}});
  if (!coeffs_ok) {
    detail = "coefficients differ from the displayed states";
    return false;
  }
  // Zero-tolerance orthonormality on the +-1/0 entry route scaled by 1/2:
  // integer scalar products, exact halving. (fl(1/sqrt 2)^2 is one ulp off
  // 1/2, so squaring the normalized coefficients cannot be exact.)
  auto unnormalized = [&](BellState s) {
    switch (s) {
      case BellState::psi_plus: return Multivector::from_terms(two, {{b1, 1.0}, {b2, 1.0}});
      case BellState::psi_minus: return Multivector::from_terms(two, {{b1, -1.0}, {b2, 1.0}});
      case BellState::phi_plus: return Multivector::from_terms(two, {{0, 1.0}, {b1 | b2, 1.0}});
      default: return Multivector::from_terms(two, {{0, 1.0}, {b1 | b2, -1.0}});
    }
  };
  const BellState all[] = {BellState::psi_plus, BellState::psi_minus, BellState::phi_plus,
                           BellState::phi_minus};
  for (BellState a : all) {
    for (BellState b : all) {
      if (0.5 * scalar_product(unnormalized(a), unnormalized(b)) != (a == b ? 1.0 : 0.0)) {
        detail = "bell basis not orthonormal at zero tolerance";
        return false;
      }
      if (std::abs(scalar_product(bell(a), bell(b)) - (a == b ? 1.0 : 0.0)) > 1e-15) {
        detail = "normalized bell gram drifts beyond 1e-15";
        return false;
      }
    }
  }
  detail = "coefficient-exact, orthonormal";
  return true;
}

// 7. The eight-row reset table.
bool criterion_reset_table(std::string& detail) {
  const AlgebraConfig cfg(3);
  const std::pair<const char*, const char*> table[] = {
      {"000", "000"}, {"100", "100"}, {"010", "010"}, {"001", "000"},
      {"110", "110"}, {"101", "100"}, {"011", "010"}, {"111", "110"},
  };
  for (const auto& [in, out] : table) {
    if (!(reset_bit(Multivector::comb(cfg, data_bits(in)), 3) ==
          Multivector::comb(cfg, data_bits(out)))) {
      detail = std::string("row c_") + in + " failed";
      return false;
    }
  }
  detail = "all 8 rows exact";
  return true;
}

// 8. 500 random prefix factorizations recompose exactly.
bool criterion_separability(std::string& detail) {
  std::mt19937_64 rng(8);
  const AlgebraConfig cfg(10);
  std::uniform_int_distribution<std::uint64_t> mask_dist(0, (1 << 10) - 1);
  std::uniform_int_distribution<int> split_dist(1, 9);
  std::uniform_real_distribution<double> coeff(-3.0, 3.0);
  for (int t = 0; t < 500; ++t) {
    const int k = split_dist(rng);
    const CombMask low = (CombMask{1} << (k + 1)) - 1;
    const CombMask shared = (mask_dist(rng) << 1) & low & cfg.allowed_mask();
    const CombMask ab = shared | ((mask_dist(rng) << 1) & ~low & cfg.allowed_mask());
    const CombMask ac = shared | ((mask_dist(rng) << 1) & ~low & cfg.allowed_mask());
    const double alpha = coeff(rng), beta = coeff(rng);
    auto [prefix, suffix] = factor_prefix(cfg, alpha, ab, beta, ac, k);
    const Multivector want = Multivector::from_terms(cfg, {{ab, alpha}, {ac, beta}});
    if (!(geometric_product(prefix, suffix) == want)) {
      detail = "trial " + std::to_string(t) + " does not recompose";
      return false;
    }
  }
  detail = "500 instances recompose exactly";
  return true;
}

// 9. Parser round trip on 200 generated circuits and the two error fixtures.
bool criterion_parser(std::string& detail) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> width_dist(1, 8);
  std::uniform_int_distribution<int> depth_dist(0, 15);
  std::uniform_real_distribution<double> angle_dist(-6.5, 6.5);
  for (int t = 0; t < 200; ++t) {
    Circuit c;
    c.width = width_dist(rng);
    c.complex_bit = rng() & 1;
    std::uniform_int_distribution<int> bit_dist(1, c.width);
    const int depth = depth_dist(rng);
    for (int d = 0; d < depth; ++d) {
      switch (rng() % (c.width >= 2 ? 9 : 7)) {
        case 0: c.ops.push_back(GateOp::had(bit_dist(rng))); break;
        case 1: c.ops.push_back(GateOp::neg(bit_dist(rng))); break;
        case 2: c.ops.push_back(GateOp::pauli_z(bit_dist(rng))); break;
        case 3: c.ops.push_back(GateOp::phase(bit_dist(rng), angle_dist(rng))); break;
        case 4: c.ops.push_back(GateOp::reset(bit_dist(rng))); break;
        case 5: c.ops.push_back(GateOp::select(bit_dist(rng))); break;
        case 6: c.ops.push_back(GateOp::global_phase(angle_dist(rng))); break;
        default: {
          int a = static_cast<int>(rng() % c.width) + 1;
          int b = static_cast<int>(rng() % c.width) + 1;
          while (b == a) b = static_cast<int>(rng() % c.width) + 1;
          c.ops.push_back(GateOp::cnot(a, b));
          break;
        }
      }
    }
    const auto parsed = parse_circuit(print_circuit(c));
    if (!std::holds_alternative<Circuit>(parsed) || !(std::get<Circuit>(parsed) == c)) {
      detail = "round trip failed at circuit " + std::to_string(t);
      return false;
    }
  }

  const auto empty = parse_circuit("");
  const auto* e1 = std::get_if<ParseError>(&empty);
  if (!e1 || e1->line != 1 || e1->column != 1) {
    detail = "empty input did not report 1:1";
    return false;
  }
  const auto range = parse_circuit("circuit n=2\ncnot 1 3");
  const auto* e2 = std::get_if<ParseError>(&range);
  if (!e2 || e2->line != 2 || e2->column != 8) {
    detail = "out-of-range index did not report 2:8";
    return false;
  }
  detail = "200 round trips; fixtures report 1:1 and 2:8";
  return true;
}

// 10. Byte-identical SVG across runs, matching the frozen goldens, with the
// polyline and segment counts the scene invariants demand.
bool criterion_renderer(std::string& detail) {
  const AlgebraConfig six(6);
  const Multivector fig4 = Multivector::from_terms(six, {{0, 5.0},
                                                         {data_bits("100000"), 1.5},
                                                         {data_bits("010000"), -1.0},
                                                         {data_bits("100100"), 1.0},
                                                         {data_bits("000011"), 3.0},
                                                         {data_bits("100110"), 2.0}});
  const struct {
    const char* name;
    Multivector m;
  } cases[] = {
      {"bell_psi_plus.svg", bell(BellState::psi_plus)},
      {"ghz.svg", ghz()},
      {"fig4.svg", fig4},
      {"hadamard3.svg", hadamard_state(3)},
  };
  for (const auto& c : cases) {
    const std::string once = emit_svg(layout(c.m));
    if (once != emit_svg(layout(c.m))) {
      detail = std::string(c.name) + ": two runs differ";
      return false;
    }
    std::ifstream in(std::string(GACOMB_GOLDEN_DIR) + "/" + c.name, std::ios::binary);
    std::ostringstream golden;
    golden << in.rdbuf();
    if (!in || once != golden.str()) {
      detail = std::string(c.name) + ": differs from the frozen golden";
      return false;
    }

    const Scene scene = layout(c.m);
    std::size_t non_scalar = 0, segments = 0;
    for (std::size_t i = 0; i < c.m.term_count(); ++i) {
      if (c.m.mask_at(i) == 0) continue;
      ++non_scalar;
      segments += static_cast<std::size_t>(grade(c.m.mask_at(i)));
    }
    if (scene.polylines.size() != non_scalar) {
      detail = std::string(c.name) + ": polyline count";
      return false;
    }
    std::size_t drawn = 0;
    for (const Polyline& line : scene.polylines) drawn += line.points.size() - 1;
    if (drawn != segments) {
      detail = std::string(c.name) + ": segment count";
      return false;
    }
  }
  detail = "4 scenes byte-stable and golden-equal";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gacomb_acceptance <path-to-gacomb-cli>\n";
    return 2;
  }
  g_cli_path = argv[1];

  const std::vector<Criterion> criteria = {
      {1, "sign-rule fidelity", 10.0, criterion_sign_rule},
      {2, "gate-identity suite", 30.0, criterion_sandwich},
      {3, "correspondence commuting diagram", 60.0, criterion_correspondence},
      {4, "hadamard state and cost", 60.0, criterion_hadamard_cost},
      {5, "shor-15", 1.0, criterion_shor},
      {6, "named states", 60.0, criterion_named_states},
      {7, "reset table", 60.0, criterion_reset_table},
      {8, "partial separability", 60.0, criterion_separability},
      {9, "parser", 60.0, criterion_parser},
      {10, "renderer determinism", 60.0, criterion_renderer},
  };

  bool all_pass = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.time_limit_s) {
      pass = false;
      detail += " [over the " + std::to_string(c.time_limit_s) + "s limit]";
    }
    char line[512];
    std::snprintf(line, sizeof(line), "%s  %2d %-34s %6.2fs  %s", pass ? "PASS" : "FAIL",
                  c.number, c.name.c_str(), elapsed, detail.c_str());
    std::cout << line << "\n";
    all_pass = all_pass && pass;
  }
  return all_pass ? 0 : 1;
}
