// Copyright 2026 The ksym Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ksym/io.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include "ksym/error.hpp"

namespace ksym {

namespace {

Error LineError(int line, const std::string& what) {
  return Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

bool ReadInt(std::istringstream& fields, long& out) {
  std::string token;
  if (!(fields >> token)) return false;
  size_t used = 0;
  try {
    out = std::stol(token, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == token.size();
}

}  // namespace

Graph ParseGraph(std::istream& in) {
  std::string raw;
  int line = 0;
  long order = -1;
  std::vector<Edge> edges;
  std::vector<std::vector<char>> seen;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::string first;
    if (!(fields >> first)) continue;
    if (order < 0) {
      long value = 0;
      std::string rest;
      if (first != "n" || !ReadInt(fields, value) || (fields >> rest)) {
        throw LineError(line, "expected header 'n <order>'");
      }
      if (value < 1 || value > 100000) throw LineError(line, "order must be at least 1");
      order = value;
      seen.assign(static_cast<size_t>(order), std::vector<char>(static_cast<size_t>(order), 0));
      continue;
    }
    std::istringstream pair(raw);
    long u = 0, v = 0;
    std::string rest;
    if (!ReadInt(pair, u) || !ReadInt(pair, v) || (pair >> rest)) {
      throw LineError(line, "expected 'u v'");
    }
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw LineError(line, "endpoint out of range for order " + std::to_string(order));
    }
    if (u == v) throw LineError(line, "loop at vertex " + std::to_string(u));
    if (seen[u][v]) {
      throw LineError(line, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    seen[u][v] = seen[v][u] = 1;
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (order < 0) throw LineError(line + 1, "missing header 'n <order>'");
  return Graph(static_cast<int>(order), edges);
}

Graph ParseGraph(const std::string& text) {
  std::istringstream in(text);
  return ParseGraph(in);
}

std::string EmitGraph(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Permutation ParseCycles(const std::string& text, int n) {
  std::vector<std::vector<Vertex>> cycles;
  std::vector<Vertex>* current = nullptr;
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || (c == ',' && current)) {
      ++i;
    } else if (c == '(') {
      if (current) throw Error(ErrorCode::kParse, "nested '(' in cycle notation");
      cycles.emplace_back();
      current = &cycles.back();
      ++i;
    } else if (c == ')') {
      if (!current) throw Error(ErrorCode::kParse, "unmatched ')' in cycle notation");
      current = nullptr;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c)) && current) {
      size_t end = i;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      const long v = std::stol(text.substr(i, end - i));
      if (v >= n) {
        throw Error(ErrorCode::kParse, "vertex " + std::to_string(v) + " out of range");
      }
      current->push_back(static_cast<Vertex>(v));
      i = end;
    } else {
      throw Error(ErrorCode::kParse, std::string("unexpected '") + c + "' in cycle notation");
    }
  }
  if (current) throw Error(ErrorCode::kParse, "unterminated cycle");
  try {
    return FromCycles(cycles, n);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

std::string CycleString(const Permutation& sigma) {
  std::string out;
  for (const auto& cycle : Cycles(sigma)) {
    out += "(";
    for (size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(cycle[i]);
    }
    out += ")";
  }
  return out;
}

std::vector<Vertex> ParseVertexList(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream fields(cleaned);
  std::vector<Vertex> out;
  std::string token;
  while (fields >> token) {
    std::istringstream one(token);
    long v = 0;
    if (!ReadInt(one, v) || v < 0) throw Error(ErrorCode::kParse, "bad vertex list '" + text + "'");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

Json ToJson(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

Json ToJson(const Spectrum& s) {
  Json integer = Json::array();
  for (const auto& root : s.integer_eigenvalues) {
    integer.push_back(Json::array({root.value.get_str(), root.multiplicity}));
  }
  return Json{{"n", s.order}, {"integer", integer}, {"residual", ToJson(s.residual)}};
}

Json ToJson(const CyclicAction& a) { return Json{{"k", a.k()}, {"sigma", a.sigma()}}; }

Json ToJson(const VerificationReport& r) {
  Json results = Json::array();
  for (const auto& x : r.results) {
    results.push_back(
        {{"params", x.params}, {"expected", x.expected}, {"computed", x.computed}, {"pass", x.pass}});
  }
  return Json{{"suite", r.suite}, {"grid", r.grid}, {"results", results}};
}

Json ToJson(const SearchResult& r) {
  static const char* const kNames[] = {"found", "not_found", "budget_exhausted"};
  Json out{{"status", kNames[static_cast<int>(r.status)]},
           {"expansions", std::to_string(r.expansions)}};
  if (r.action) out["action"] = ToJson(*r.action);
  return out;
}

Json SearchPairsJson(int max_n, int max_m, const std::vector<std::pair<int, int>>& pairs) {
  Json list = Json::array();
  for (const auto& [n, m] : pairs) list.push_back(Json::array({n, m}));
  return Json{{"max_n", max_n}, {"max_m", max_m}, {"pairs", list}};
}

std::string SpectrumText(const Spectrum& s) {
  std::string out;
  for (const auto& root : s.integer_eigenvalues) {
    if (!out.empty()) out += ", ";
    out += root.value.get_str();
    if (root.multiplicity > 1) out += "^" + std::to_string(root.multiplicity);
  }
  if (!s.integral()) {
    std::ostringstream approx;
    approx << std::setprecision(9);
    for (double v : ApproximateRealRoots(s.residual, 1e-12)) {
      if (!out.empty() || approx.tellp() > 0) approx << ", ";
      approx << "~" << v;
    }
    out += approx.str();
  }
  return out;
}

std::string ReportTable(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& x : r.results) {
    out << (x.pass ? "PASS" : "FAIL") << "  " << r.suite << "  " << x.params << "  expected "
        << x.expected << "  computed " << x.computed << "\n";
  }
  out << r.suite << ": " << (r.results.size() - static_cast<size_t>(r.failures())) << "/"
      << r.results.size() << " passed\n";
  return out.str();
}

}  // namespace ksym
