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

#include <string>
#include <string_view>
#include <vector>

#include "afa/types.hpp"

namespace afa {

/// Empty iff all Afa invariants hold. Each violation names the offending
/// symbol, column, or entry. Never throws.
std::vector<std::string> validate(const Afa& a);

/// Exact matrix-vector product. Throws DimensionError on mismatch.
StateVector apply(const TransitionMatrix& m, const StateVector& v);

/// Final state after reading the word left to right; run(a, "") = v0.
StateVector run(const Afa& a, std::string_view word);

/// Sum of absolute values; at least 1 for any affine vector.
Rational l1Norm(const StateVector& v);

/// L1 mass on the accepting states of p.
Rational projectedL1(const Projection& p, const StateVector& v);

/// |P M_w v0| / |M_w v0|, always in [0,1]. For stochastic automata this
/// collapses to the plain accepting probability.
Rational acceptValue(const Afa& a, std::string_view word);

/// Strict comparison against the cutpoint; value exactly at lambda rejects.
bool member(const Afa& a, std::string_view word, const Rational& lambda);
bool member(const Afa& a, std::string_view word, const CutpointSpec& spec);

Projection projComplement(const Projection& p);

/// Row-major tensor indexing: index i*k_b + j accepts iff i accepts in a
/// and j accepts in b.
Projection projTensor(const Projection& a, const Projection& b);

/// Throws std::invalid_argument when the index sets intersect.
Projection projUnionDisjoint(const Projection& a, const Projection& b);

/// Kronecker product in row-major block order; affine inputs give an
/// affine result.
TransitionMatrix matTensor(const TransitionMatrix& a, const TransitionMatrix& b);

StateVector vecTensor(const StateVector& a, const StateVector& b);

TransitionMatrix identityMatrix(Index size);

/// Every word over the alphabet up to the given length, shortest first,
/// starting with the empty word.
std::vector<std::string> allWords(std::string_view alphabet, int maxLength);

}  // namespace afa
