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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "afa/types.hpp"

namespace afa::io {

/// Malformed document: bad JSON, missing field, bad number string. The
/// message names the offending field.
class ParseError : public Error {
  using Error::Error;
};

/// Well-formed document describing an invalid automaton.
class ValidationError : public Error {
 public:
  ValidationError(std::string message, std::vector<std::string> violations);

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// The afa-v1 document: JSON with fields format, kind, alphabet, states,
// initial, accepting, transitions. Matrices are row-major grids of number
// strings (integer, "p/q", or finite decimal); entry [i][j] is the weight
// flowing from state j into state i. Large sparse matrices may instead be
// written as {"entries": [[i, j, "value"], ...]}; parse accepts both.

/// Parses and validates; rejects invalid automata with ValidationError.
Afa parseAfa(const std::string& text);

/// Serializes with reduced "p/q" entries (bare integers when q = 1).
/// parse(serialize(a)) reconstructs a field for field.
std::string serializeAfa(const Afa& a);

Afa loadAfa(const std::filesystem::path& path);
void saveAfa(const Afa& a, const std::filesystem::path& path);

}  // namespace afa::io
