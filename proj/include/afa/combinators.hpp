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

#include "afa/types.hpp"

namespace afa {

/// Convex mixing weights, alpha + beta = 1, both nonnegative.
struct MixWeights {
  Rational alpha;
  Rational beta;

  MixWeights(Rational alpha, Rational beta);
};

/// Acceptance function of the result is the product f_a * f_b.
/// Throws AlphabetMismatchError unless alphabets agree.
Afa tensorProduct(const Afa& a, const Afa& b);

/// 2-state PFA with value alpha on every word.
Afa constant(const Rational& alpha, std::string alphabet);

/// Value alpha * f_a, realized as constant(alpha) tensor a.
Afa scale(const Afa& a, const Rational& alpha);

/// Two copies of a tensor b in parallel blocks; value alpha*f_a + beta*f_b.
Afa convexSum(const Afa& a, const Afa& b, const MixWeights& weights);

/// Same automaton with the complemented accepting set; value 1 - f_a.
Afa complement(const Afa& a);

/// Majority vote over three parallel copies; value f^2(3 - 2f).
Afa amplify(const Afa& a);

/// x^2(3 - 2x), the value map of one amplification round.
Rational amplifyPolynomial(const Rational& x);

inline constexpr Index kDefaultStateLimit = 1'000'000;

/// amplify iterated; the state count is k^(3^rounds), so the construction
/// refuses (StateLimitError) once the projected count exceeds stateLimit.
Afa amplifyRounds(const Afa& a, int rounds, Index stateLimit = kDefaultStateLimit);

/// Automaton b with f_a(w) > lambda1 iff f_b(w) > lambda2 and likewise for
/// equality. Increasing shifts mix with constant(1); decreasing shifts route
/// through the complement on both sides; lambda1 = 1 degenerates to scaling.
/// The pairs (lambda2 = 0, lambda1 > 0) and (lambda2 = 1, lambda1 < 1) are
/// mathematically unsatisfiable and keep only the one-directional guarantee
/// the degenerate formula provides.
Afa shiftCutpoint(const Afa& a, const Rational& lambda1, const Rational& lambda2);

/// Convex sum with alpha = beta = 1/2. With both inputs at error <= 1/4 the
/// result separates L_a union L_b at >= 3/8 vs <= 1/4.
Afa unionAut(const Afa& a, const Afa& b);

/// Tensor product. With both inputs at error <= 1/4 the result separates
/// L_a intersect L_b at >= 9/16 vs <= 1/4.
Afa intersectAut(const Afa& a, const Afa& b);

enum class BooleanOp { Union, Intersect };

/// Convenience pipeline: amplifies both inputs twice when the declared
/// error exceeds 1/4, then applies the boolean construction.
Afa booleanWithAmplify(BooleanOp op, const Afa& a, const Afa& b,
                       const Rational& declaredError);

}  // namespace afa
