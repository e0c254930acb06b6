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

#include <string_view>
#include <utility>
#include <vector>

#include "afa/types.hpp"

namespace afa::gallery {

/// Thin re-export of combinators::constant; value alpha on every word.
Afa constantPfa(const Rational& alpha, std::string alphabet);

/// 3-state counter automaton over the given alphabet: plus adds `weight` to
/// a signed counter d, minus subtracts it, every other symbol leaves it
/// alone. The state after w is (1, w*d, -w*d) and the acceptance value is
/// 1/(1 + 2*weight*|d|).
Afa counterAfa(std::string alphabet, char plus, char minus, long weight = 1);

/// Unit-weight counter over {a,b}: value 1 exactly on words with equally
/// many a's and b's, at most 1/3 otherwise.
Afa eqAfa();

/// Unary restriction of eqAfa: alphabet {a}, value 1/(1+2n) on a^n.
Afa eqUnaryAfa();

/// Bounded-error witness for EQ3 = { w in {a,b,c}* : |w|_a = |w|_b = |w|_c }:
/// the intersection of two weight-2 counters (a vs b, a vs c), 9 states.
/// Members get value 1, non-members at most 1/5, so both factors already sit
/// below the 1/4 error the boolean constructions ask for.
Afa eq3Afa();

/// The two weight-2 counter factors of eq3Afa, for component-level checks.
std::pair<Afa, Afa> eq3Components();

/// Complete DFA: next[symbol][state] is the successor state.
struct Dfa {
  std::string alphabet;
  Index states = 0;
  Index start = 0;
  std::vector<std::vector<Index>> next;
  std::vector<Index> accepting;
};

/// Stochastic Afa with 0/1 matrices recognizing L(dfa) at any cutpoint in
/// (0,1); values are exactly 0 or 1. Throws PreconditionError when the
/// transition function is incomplete.
Afa dfaEmbed(const Dfa& dfa);

/// Two-state DFA for "even number of a's" over {a,b}, embedded.
Afa dfaParity();

/// Lookup for the CLI: "constant", "eq", "eq3", "dfa-parity".
/// alpha feeds the constant automaton only.
Afa byName(std::string_view name, const Rational& alpha);

}  // namespace afa::gallery
