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

#ifndef KSYM_CATALOG_HPP_
#define KSYM_CATALOG_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ksym/graph.hpp"

namespace ksym {

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Fixed list of small named graphs used by the verification suites.
std::vector<NamedGraph> Catalog();

// One representative per isomorphism class of graphs on n vertices
// (n <= 6), in order of first appearance by edge bitmask.
std::vector<Graph> AllGraphs(int n);
// Same, restricted to connected graphs.
std::vector<Graph> AllConnectedGraphs(int n);

// One representative per isomorphism class of trees on n vertices, from
// Prufer sequences deduplicated by a rooted-centre canonical string.
std::vector<Graph> AllTrees(int n);

// Erdos-Renyi G(n, p) driven by a seeded 64-bit Mersenne Twister.
std::vector<Graph> RandomGraphs(int count, std::uint64_t seed, int min_order, int max_order);

}  // namespace ksym

#endif  // KSYM_CATALOG_HPP_
