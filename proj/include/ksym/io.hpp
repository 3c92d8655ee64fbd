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

#ifndef KSYM_IO_HPP_
#define KSYM_IO_HPP_

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ksym/graph.hpp"
#include "ksym/polynomial.hpp"
#include "ksym/spectra.hpp"
#include "ksym/symmetry.hpp"
#include "ksym/verify.hpp"

namespace ksym {

using Json = nlohmann::ordered_json;

// Edge-list format: "n <order>" then one "u v" per line; '#' starts a comment.
Graph ParseGraph(std::istream& in);
Graph ParseGraph(const std::string& text);
std::string EmitGraph(const Graph& g);

// "(0 1 2)(3 4 5)"; vertices not mentioned are fixed.
Permutation ParseCycles(const std::string& text, int n);
std::string CycleString(const Permutation& sigma);

// Comma or whitespace separated vertex list.
std::vector<Vertex> ParseVertexList(const std::string& text);

Json ToJson(const IntPolynomial& p);
Json ToJson(const Spectrum& s);
Json ToJson(const CyclicAction& a);
Json ToJson(const VerificationReport& r);
Json ToJson(const SearchResult& r);
Json SearchPairsJson(int max_n, int max_m, const std::vector<std::pair<int, int>>& pairs);

std::string SpectrumText(const Spectrum& s);
std::string ReportTable(const VerificationReport& r);

}  // namespace ksym

#endif  // KSYM_IO_HPP_
