// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "gacomb/algorithms.hpp"
#include "gacomb/dsl.hpp"
#include "gacomb/gates.hpp"
#include "gacomb/kernels.hpp"
#include "gacomb/mvtx.hpp"
#include "gacomb/render.hpp"
#include "gacomb/verify.hpp"

namespace {

using namespace gacomb;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_command(const std::string& circuit_path, const std::string& state_path,
                const std::string& out_path, bool count_ops) {
  const std::string text = read_file(circuit_path);
  auto parsed = parse_circuit(text);
  if (auto* err = std::get_if<ParseError>(&parsed)) {
    std::cerr << circuit_path << ":" << to_string(*err) << "\n";
    return kExitUsage;
  }
  const Circuit& circuit = std::get<Circuit>(parsed);

  Multivector state = state_path.empty()
                          ? Multivector::vacuum(AlgebraConfig(circuit.width, circuit.complex_bit))
                          : read_mvtx_file(state_path);
  auto [final_state, counter] = apply_circuit(state, circuit);

  if (out_path.empty()) {
    std::cout << to_mvtx(final_state);
  } else {
    write_mvtx_file(out_path, final_state);
  }
  if (count_ops) std::cout << "ops=" << counter.count << "\n";
  return kExitOk;
}

int render_command(const std::string& in_path, const std::string& out_path) {
  const Multivector m = read_mvtx_file(in_path);
  const std::string svg = emit_svg(layout(m));
  std::ofstream out(out_path);
  if (!out) throw FormatError("cannot write '" + out_path + "'");
  out << svg;
  return kExitOk;
}

int verify_command(int max_n, int trials, std::uint64_t seed) {
  std::cout << "kernel backend: " << kernels::backend_name(kernels::active_backend()) << "\n";
  verify::Options opt;
  opt.max_n = max_n;
  opt.trials = trials;
  opt.seed = seed;
  bool all_pass = true;
  for (const verify::SuiteResult& suite : verify::run_all(opt)) {
    std::cout << (suite.pass ? "PASS" : "FAIL") << " " << suite.name;
    if (!suite.detail.empty()) std::cout << " (" << suite.detail << ")";
    std::cout << "\n";
    all_pass = all_pass && suite.pass;
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int shor_command(int base) {
  const Shor15Result result = shor15(base);
  std::cout << "oracle state (" << result.trace[0].term_count() << " blades):\n";
  for (std::size_t i = 0; i < result.trace[0].term_count(); ++i) {
    std::cout << "  " << format_coeff(result.trace[0].coeff_at(i)) << " c"
              << format_mask(result.trace[0].config(), result.trace[0].mask_at(i)) << "\n";
  }
  std::cout << "after value-register selection (" << result.trace[1].term_count()
            << " blades):\n";
  for (std::size_t i = 0; i < result.trace[1].term_count(); ++i) {
    std::cout << "  " << format_coeff(result.trace[1].coeff_at(i)) << " c"
              << format_mask(result.trace[1].config(), result.trace[1].mask_at(i)) << "\n";
  }
  std::cout << "selected x:";
  for (int x : result.selected_x) std::cout << " " << x;
  std::cout << "\n";
  std::cout << "period=" << result.period << " factors=" << result.factors.first << ","
            << result.factors.second << "\n";
  return kExitOk;
}

// Tiny expression form: whitespace-separated signed combs and scalars joined
// by * + -, e.g. "c10011 * c01011" or "2c10 + c01 * c10". All comb tokens
// must have the same number of bits.
int eval_command(const std::string& expr) {
  std::istringstream in(expr);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  if (tokens.empty()) throw FormatError("eval: empty expression");

  int width = 0;
  for (const std::string& t : tokens) {
    const std::size_t c = t.find('c');
    if (c == std::string::npos) continue;
    const int bits = static_cast<int>(t.size() - c - 1);
    if (width != 0 && bits != width) throw FormatError("eval: combs of different width");
    width = bits;
  }
  if (width == 0) throw FormatError("eval: no comb token found");
  const AlgebraConfig cfg(width);

  auto parse_term = [&](const std::string& t) {
    std::string body = t;
    double sign = 1.0;
    while (!body.empty() && (body.front() == '+' || body.front() == '-')) {
      if (body.front() == '-') sign = -sign;
      body.erase(body.begin());
    }
    const std::size_t c = body.find('c');
    double coeff = 1.0;
    if (c != 0 && c != std::string::npos) {
      coeff = std::stod(body.substr(0, c));
    } else if (c == std::string::npos) {
      coeff = std::stod(body);
    }
    if (c == std::string::npos) return Multivector::scalar(cfg, sign * coeff);
    const CombMask mask = parse_mask(cfg, body.substr(c + 1));
    return Multivector::comb(cfg, mask, sign * coeff);
  };

  Multivector acc = parse_term(tokens[0]);
  for (std::size_t i = 1; i + 1 < tokens.size(); i += 2) {
    const std::string& op = tokens[i];
    const Multivector rhs = parse_term(tokens[i + 1]);
    if (op == "*") {
      acc = geometric_product(acc, rhs);
    } else if (op == "+") {
      acc = add(acc, rhs);
    } else if (op == "-") {
      acc = sub(acc, rhs);
    } else {
      throw FormatError("eval: unknown operator '" + op + "'");
    }
  }
  if (tokens.size() % 2 == 0) throw FormatError("eval: dangling operator");

  if (acc.empty()) {
    std::cout << "0\n";
  } else {
    for (std::size_t i = 0; i < acc.term_count(); ++i) {
      std::cout << format_coeff(acc.coeff_at(i)) << " c" << format_mask(cfg, acc.mask_at(i))
                << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geometric-algebra bit coding engine"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "apply a .gac circuit to a state");
  std::string circuit_path, state_path, run_out;
  bool count_ops = false;
  run->add_option("circuit", circuit_path, "circuit file")->required();
  run->add_option("--state", state_path, "initial state (MVTX); default is the vacuum");
  run->add_option("--out", run_out, "write the final state here instead of stdout");
  run->add_flag("--count-ops", count_ops, "print the primitive operation count");

  auto* render = app.add_subcommand("render", "render an MVTX state to SVG");
  std::string render_in, render_out;
  render->add_option("input", render_in, "MVTX file")->required();
  render->add_option("--out", render_out, "SVG output path")->required();

  auto* verify = app.add_subcommand("verify", "run the differential oracle suites");
  int max_n = 6, trials = 1000;
  std::uint64_t seed = 42;
  verify->add_option("--n", max_n, "exhaustive width cap");
  verify->add_option("--trials", trials, "randomized trials per suite");
  verify->add_option("--seed", seed, "random seed");

  auto* shor = app.add_subcommand("shor15", "period finding for a^x mod 15");
  int base = 2;
  shor->add_option("--base", base, "base coprime to 15");

  auto* eval = app.add_subcommand("eval", "evaluate a comb expression");
  std::string expr;
  eval->add_option("expr", expr, "expression, e.g. \"c10011 * c01011\"")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return run_command(circuit_path, state_path, run_out, count_ops);
    if (render->parsed()) return render_command(render_in, render_out);
    if (verify->parsed()) return verify_command(max_n, trials, seed);
    if (shor->parsed()) return shor_command(base);
    if (eval->parsed()) return eval_command(expr);
  } catch (const gacomb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
