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

#include "afa/types.hpp"

#include <algorithm>

namespace afa {

Projection::Projection(Index size, std::vector<Index> indices)
    : size(size), accepting(std::move(indices)) {
  if (size < 0) throw std::invalid_argument("projection size must be nonnegative");
  std::sort(accepting.begin(), accepting.end());
  accepting.erase(std::unique(accepting.begin(), accepting.end()), accepting.end());
  for (Index i : accepting) {
    if (i < 0 || i >= size) {
      throw std::invalid_argument("accepting index " + std::to_string(i) +
                                  " outside [0, " + std::to_string(size) + ")");
    }
  }
}

bool Projection::contains(Index state) const {
  return std::binary_search(accepting.begin(), accepting.end(), state);
}

std::vector<bool> Projection::mask() const {
  std::vector<bool> m(static_cast<size_t>(size), false);
  for (Index i : accepting) m[static_cast<size_t>(i)] = true;
  return m;
}

Index Afa::symbolIndex(char symbol) const {
  auto pos = alphabet.find(symbol);
  return pos == std::string::npos ? -1 : static_cast<Index>(pos);
}

const TransitionMatrix& Afa::matrixFor(char symbol) const {
  Index i = symbolIndex(symbol);
  if (i < 0) {
    throw UnknownSymbolError(std::string("symbol '") + symbol + "' not in alphabet '" +
                             alphabet + "'");
  }
  return transitions[static_cast<size_t>(i)];
}

CutpointSpec::CutpointSpec(Rational lambdaIn, std::optional<Rational> isolationIn,
                           std::optional<Rational> errorBoundIn)
    : lambda(std::move(lambdaIn)),
      isolation(std::move(isolationIn)),
      errorBound(std::move(errorBoundIn)) {
  if (lambda < 0 || lambda > 1) throw std::invalid_argument("cutpoint outside [0,1]");
  if (isolation) {
    if (*isolation <= 0) throw std::invalid_argument("isolation radius must be positive");
    if (lambda - *isolation < 0 || lambda + *isolation > 1) {
      throw std::invalid_argument("isolation interval leaves [0,1]");
    }
  }
  if (errorBound && (*errorBound < 0 || *errorBound >= makeRational(1, 2))) {
    throw std::invalid_argument("error bound outside [0, 1/2)");
  }
}

}  // namespace afa
