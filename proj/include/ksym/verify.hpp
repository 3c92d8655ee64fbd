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

#ifndef KSYM_VERIFY_HPP_
#define KSYM_VERIFY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ksym/graph.hpp"
#include "ksym/polynomial.hpp"

namespace ksym {

struct InstanceResult {
  std::string params;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::string grid;
  std::vector<InstanceResult> results;

  bool passed() const;
  int failures() const;
};

// Parameter bounds such as "n<=4,m<=4", "k=2,l>=2" or "seed=7". Each key
// holds an inclusive range; "=" pins both ends.
class Grid {
 public:
  Grid() = default;
  static Grid Parse(const std::string& spec);

  std::pair<int, int> Range(const std::string& key, int lo, int hi) const;
  int Value(const std::string& key, int fallback) const;
  std::string ToString() const;

 private:
  std::map<std::string, std::pair<std::optional<int>, std::optional<int>>> bounds_;
};

const std::vector<std::string>& SuiteNames();

// Runs one named suite over the grid. Throws kInvalidArgument for an unknown
// suite name.
VerificationReport VerifySuite(const std::string& name, const Grid& grid = {});

// Spanning trees by trying every (n-1)-edge subset; an oracle for small graphs.
Integer EnumerateSpanningTrees(const Graph& g);

}  // namespace ksym

#endif  // KSYM_VERIFY_HPP_
