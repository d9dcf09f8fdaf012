// Copyright 2026 The gacomb Authors
// SPDX-License-Identifier: Apache-2.0

#include "gacomb/dsl.hpp"

#include <charconv>
#include <cstdio>
#include <numbers>
#include <optional>
#include <vector>

namespace gacomb {

namespace {

struct Token {
  std::string_view text;
  int column = 1;  // 1-based column of the first character
};

std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#') {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

struct GateSpec {
  std::string_view mnemonic;
  GateKind kind;
  int indices;
  bool angle;
};

constexpr GateSpec kGateTable[] = {
    {"h", GateKind::had, 1, false},        {"x", GateKind::neg, 1, false},
    {"z", GateKind::pauli_z, 1, false},    {"y", GateKind::pauli_y, 1, false},
    {"phase", GateKind::phase, 1, true},   {"t", GateKind::t, 1, false},
    {"cnot", GateKind::cnot, 2, false},    {"toffoli", GateKind::toffoli, 3, false},
    {"reset", GateKind::reset, 1, false},  {"select", GateKind::select, 1, false},
    {"i", GateKind::global_i, 0, false},   {"gphase", GateKind::global_phase, 0, true},
};

const GateSpec* find_gate(std::string_view mnemonic) {
  for (const GateSpec& g : kGateTable) {
    if (g.mnemonic == mnemonic) return &g;
  }
  return nullptr;
}

std::optional<int> parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::optional<double> parse_angle(std::string_view text) {
  bool negate = false;
  if (!text.empty() && text.front() == '-') {
    negate = true;
    text.remove_prefix(1);
  }
  double value = 0.0;
  if (text == "pi") {
    value = std::numbers::pi;
  } else if (text == "pi/2") {
    value = std::numbers::pi / 2;
  } else if (text == "pi/4") {
    value = std::numbers::pi / 4;
  } else {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  }
  return negate ? -value : value;
}

ParseError error_at(int line, const Token& tok, std::string message) {
  return ParseError{line, tok.column, std::move(message), std::string(tok.text)};
}

ParseError error_missing(int line, std::string_view full_line, std::string message) {
  return ParseError{line, static_cast<int>(full_line.size()) + 1, std::move(message), ""};
}

}  // namespace

std::variant<Circuit, ParseError> parse_circuit(std::string_view text) {
  Circuit circuit;
  bool header_seen = false;
  int lineno = 0;
  std::size_t pos = 0;

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;

    auto tokens = tokenize_line(line);
    if (tokens.empty()) continue;

    if (tokens[0].text == "circuit") {
      if (header_seen) return error_at(lineno, tokens[0], "duplicate circuit header");
      if (tokens.size() < 2 || tokens[1].text.substr(0, 2) != "n=") {
        if (tokens.size() < 2) return error_missing(lineno, line, "expected n=<width>");
        return error_at(lineno, tokens[1], "expected n=<width>");
      }
      auto width = parse_int(tokens[1].text.substr(2));
      if (!width || *width < 1) return error_at(lineno, tokens[1], "bad circuit width");
      circuit.width = *width;
      if (tokens.size() >= 3) {
        if (tokens[2].text != "complex") {
          return error_at(lineno, tokens[2], "unexpected token after width");
        }
        circuit.complex_bit = true;
        if (tokens.size() > 3) {
          return error_at(lineno, tokens[3], "unexpected token after header");
        }
      }
      header_seen = true;
      continue;
    }

    if (!header_seen) {
      return ParseError{lineno, tokens[0].column, "missing circuit header",
                        std::string(tokens[0].text)};
    }

    const GateSpec* spec = find_gate(tokens[0].text);
    if (!spec) return error_at(lineno, tokens[0], "unknown mnemonic");

    const std::size_t want = static_cast<std::size_t>(spec->indices) + (spec->angle ? 1 : 0);
    if (tokens.size() < want + 1) {
      return error_missing(lineno, line,
                           "'" + std::string(spec->mnemonic) + "' needs " +
                               std::to_string(want) + " argument(s)");
    }
    if (tokens.size() > want + 1) {
      return error_at(lineno, tokens[want + 1], "unexpected extra argument");
    }

    GateOp op;
    op.kind = spec->kind;
    for (int i = 0; i < spec->indices; ++i) {
      const Token& tok = tokens[static_cast<std::size_t>(i) + 1];
      auto index = parse_int(tok.text);
      if (!index) return error_at(lineno, tok, "bad bit index");
      if (*index < 1 || *index > circuit.width) {
        return error_at(lineno, tok, "index out of range");
      }
      for (int j = 0; j < i; ++j) {
        if (op.bits[j] == *index) return error_at(lineno, tok, "duplicate bit index");
      }
      op.bits[static_cast<std::size_t>(i)] = *index;
    }
    if (spec->angle) {
      const Token& tok = tokens[static_cast<std::size_t>(spec->indices) + 1];
      auto angle = parse_angle(tok.text);
      if (!angle) return error_at(lineno, tok, "bad angle");
      op.angle = *angle;
    }
    circuit.ops.push_back(op);
    circuit.source_spans.push_back({lineno, tokens[0].column});
  }

  if (!header_seen) return ParseError{1, 1, "missing circuit header", ""};
  return circuit;
}

std::string print_circuit(const Circuit& c) {
  std::string out = "circuit n=" + std::to_string(c.width);
  if (c.complex_bit) out += " complex";
  out += "\n";
  for (const GateOp& op : c.ops) {
    out += gate_mnemonic(op.kind);
    const int arity = gate_arity(op.kind);
    for (int i = 0; i < arity; ++i) out += " " + std::to_string(op.bits[static_cast<std::size_t>(i)]);
    if (gate_has_angle(op.kind)) {
      char buf[48];
      std::snprintf(buf, sizeof(buf), "%.17g", op.angle);
      out += " ";
      out += buf;
    }
    out += "\n";
  }
  return out;
}

std::string to_string(const ParseError& e) {
  return std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + e.message;
}

}  // namespace gacomb
