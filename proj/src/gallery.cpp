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

#include "afa/gallery.hpp"

#include <utility>

#include "afa/combinators.hpp"
#include "afa/core.hpp"

namespace afa::gallery {

namespace {

/// Columns (1, s, -s), (0, 1, 0), (0, 0, 1): adds s to the (d, -d) counter.
TransitionMatrix counterStep(long step) {
  std::vector<Eigen::Triplet<Rational>> triplets;
  triplets.emplace_back(0, 0, 1);
  if (step != 0) {
    triplets.emplace_back(1, 0, Rational(step));
    triplets.emplace_back(2, 0, Rational(-step));
  }
  triplets.emplace_back(1, 1, 1);
  triplets.emplace_back(2, 2, 1);
  TransitionMatrix m(3, 3);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

}  // namespace

Afa constantPfa(const Rational& alpha, std::string alphabet) {
  return constant(alpha, std::move(alphabet));
}

Afa counterAfa(std::string alphabet, char plus, char minus, long weight) {
  Afa out;
  out.alphabet = std::move(alphabet);
  out.initial = StateVector::Zero(3);
  out.initial(0) = 1;
  out.transitions.reserve(out.alphabet.size());
  for (char symbol : out.alphabet) {
    long step = symbol == plus ? weight : (symbol == minus ? -weight : 0);
    out.transitions.push_back(counterStep(step));
  }
  out.accepting = Projection(3, {0});
  out.kind = Kind::Affine;
  return out;
}

Afa eqAfa() { return counterAfa("ab", 'a', 'b'); }

Afa eqUnaryAfa() { return counterAfa("a", 'a', 'b'); }

std::pair<Afa, Afa> eq3Components() {
  return {counterAfa("abc", 'a', 'b', 2), counterAfa("abc", 'a', 'c', 2)};
}

Afa eq3Afa() {
  auto [ab, ac] = eq3Components();
  return intersectAut(ab, ac);
}

Afa dfaEmbed(const Dfa& dfa) {
  if (dfa.states < 1) throw PreconditionError("DFA needs at least one state");
  if (dfa.start < 0 || dfa.start >= dfa.states) {
    throw PreconditionError("DFA start state out of range");
  }
  if (dfa.next.size() != dfa.alphabet.size()) {
    throw PreconditionError("DFA transition table covers " + std::to_string(dfa.next.size()) +
                            " symbols, alphabet has " + std::to_string(dfa.alphabet.size()));
  }

  Afa out;
  out.alphabet = dfa.alphabet;
  out.initial = StateVector::Zero(dfa.states);
  out.initial(dfa.start) = 1;
  out.transitions.reserve(dfa.alphabet.size());
  for (size_t s = 0; s < dfa.next.size(); ++s) {
    const std::vector<Index>& row = dfa.next[s];
    if (row.size() != static_cast<size_t>(dfa.states)) {
      throw PreconditionError(std::string("DFA transition row for '") + dfa.alphabet[s] +
                              "' covers " + std::to_string(row.size()) + " of " +
                              std::to_string(dfa.states) + " states");
    }
    std::vector<Eigen::Triplet<Rational>> triplets;
    triplets.reserve(row.size());
    for (Index j = 0; j < dfa.states; ++j) {
      Index target = row[static_cast<size_t>(j)];
      if (target < 0 || target >= dfa.states) {
        throw PreconditionError(std::string("DFA successor of state ") + std::to_string(j) +
                                " on '" + dfa.alphabet[s] + "' is out of range");
      }
      triplets.emplace_back(target, j, 1);
    }
    TransitionMatrix m(dfa.states, dfa.states);
    m.setFromTriplets(triplets.begin(), triplets.end());
    out.transitions.push_back(std::move(m));
  }
  out.accepting = Projection(dfa.states, dfa.accepting);
  out.kind = Kind::Stochastic;
  return out;
}

Afa dfaParity() {
  Dfa dfa;
  dfa.alphabet = "ab";
  dfa.states = 2;
  dfa.start = 0;
  dfa.next = {{1, 0}, {0, 1}};  // 'a' flips parity, 'b' keeps it
  dfa.accepting = {0};
  return dfaEmbed(dfa);
}

Afa byName(std::string_view name, const Rational& alpha) {
  if (name == "constant") return constantPfa(alpha, "ab");
  if (name == "eq") return eqAfa();
  if (name == "eq3") return eq3Afa();
  if (name == "dfa-parity") return dfaParity();
  throw std::invalid_argument("unknown gallery automaton '" + std::string(name) +
                              "' (known: constant, eq, eq3, dfa-parity)");
}

}  // namespace afa::gallery
