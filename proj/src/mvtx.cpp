// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "gacomb/mvtx.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace gacomb {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw FormatError("mvtx line " + std::to_string(line) + ": " + what);
}

bool parse_flag(std::string_view token, std::string_view key, bool& out) {
  if (token.size() != key.size() + 2 || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    return false;
  }
  char v = token.back();
  if (v != '0' && v != '1') return false;
  out = v == '1';
  return true;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Multivector read_mvtx(std::istream& in) {
  std::string line;
  int lineno = 0;

  if (!std::getline(in, line)) fail(1, "missing header");
  ++lineno;
  auto header = split_ws(line);
  bool complex_bit = false;
  bool aux_bit = false;
  int n = 0;
  bool ok = header.size() == 4 && header[0] == "mv" && header[1].size() > 2 &&
            header[1].substr(0, 2) == "n=";
  if (ok) {
    auto [ptr, ec] = std::from_chars(header[1].data() + 2, header[1].data() + header[1].size(), n);
    ok = ec == std::errc{} && ptr == header[1].data() + header[1].size();
  }
  ok = ok && parse_flag(header[2], "complex", complex_bit) && parse_flag(header[3], "aux", aux_bit);
  if (!ok) fail(1, "expected 'mv n=<dim> complex=<0|1> aux=<0|1>'");

  AlgebraConfig cfg;
  try {
    cfg = AlgebraConfig(n, complex_bit, aux_bit);
  } catch (const Error& e) {
    fail(1, e.what());
  }

  std::vector<Term> terms;
  std::set<CombMask> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) fail(lineno, "expected '<coefficient> <bitstring>'");

    double coeff = 0.0;
    auto [ptr, ec] = std::from_chars(tokens[0].data(), tokens[0].data() + tokens[0].size(), coeff);
    if (ec != std::errc{} || ptr != tokens[0].data() + tokens[0].size()) {
      fail(lineno, "bad coefficient '" + tokens[0] + "'");
    }

    CombMask mask = 0;
    try {
      mask = parse_mask(cfg, tokens[1]);
    } catch (const FormatError& e) {
      fail(lineno, e.what());
    }
    if (!seen.insert(mask).second) fail(lineno, "duplicate bitstring '" + tokens[1] + "'");
    terms.push_back({mask, coeff});
  }
  return Multivector::from_terms(cfg, std::move(terms));
}

void write_mvtx(std::ostream& out, const Multivector& m) {
  const AlgebraConfig& cfg = m.config();
  out << "mv n=" << cfg.n << " complex=" << (cfg.complex_bit ? 1 : 0)
      << " aux=" << (cfg.aux_bit ? 1 : 0) << "\n";
  for (std::size_t i = 0; i < m.term_count(); ++i) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), m.coeff_at(i));
    (void)ec;
    out.write(buf, ptr - buf);
    out << ' ' << format_mask(cfg, m.mask_at(i)) << "\n";
  }
}

Multivector read_mvtx_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_mvtx(in);
}

void write_mvtx_file(const std::string& path, const Multivector& m) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  write_mvtx(out, m);
}

std::string to_mvtx(const Multivector& m) {
  std::ostringstream out;
  write_mvtx(out, m);
  return out.str();
}

}  // namespace gacomb
