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

#include <random>
#include <string>
#include <vector>

#include "afa/core.hpp"
#include "afa/types.hpp"

// Brute-force evaluation over plain nested vectors: an oracle that shares no
// code with the Eigen-based path it cross-checks.
namespace oracle {

struct NaiveAfa {
  std::string alphabet;
  std::vector<afa::Rational> initial;
  // mats[s][i][j]: weight from state j into state i on symbol s
  std::vector<std::vector<std::vector<afa::Rational>>> mats;
  std::vector<bool> accepting;
};

inline NaiveAfa lower(const afa::Afa& a) {
  NaiveAfa n;
  n.alphabet = a.alphabet;
  const afa::Index k = a.states();
  n.initial.resize(static_cast<size_t>(k));
  for (afa::Index i = 0; i < k; ++i) n.initial[static_cast<size_t>(i)] = a.initial(i);
  n.mats.resize(a.transitions.size());
  for (size_t s = 0; s < a.transitions.size(); ++s) {
    n.mats[s].assign(static_cast<size_t>(k),
                     std::vector<afa::Rational>(static_cast<size_t>(k), afa::Rational(0)));
    const afa::TransitionMatrix& m = a.transitions[s];
    for (afa::Index j = 0; j < m.outerSize(); ++j) {
      for (afa::TransitionMatrix::InnerIterator it(m, j); it; ++it) {
        n.mats[s][static_cast<size_t>(it.row())][static_cast<size_t>(it.col())] = it.value();
      }
    }
  }
  n.accepting = a.accepting.mask();
  return n;
}

inline std::vector<afa::Rational> step(const NaiveAfa& a, size_t symbol,
                                       const std::vector<afa::Rational>& state) {
  const size_t k = state.size();
  std::vector<afa::Rational> next(k, afa::Rational(0));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) next[i] += a.mats[symbol][i][j] * state[j];
  }
  return next;
}

inline afa::Rational value(const NaiveAfa& a, const std::string& word) {
  std::vector<afa::Rational> state = a.initial;
  for (char symbol : word) {
    state = step(a, a.alphabet.find(symbol), state);
  }
  afa::Rational total = 0;
  afa::Rational mass = 0;
  for (size_t i = 0; i < state.size(); ++i) {
    afa::Rational magnitude = abs(state[i]);
    total += magnitude;
    if (a.accepting[i]) mass += magnitude;
  }
  return mass / total;
}

inline afa::Rational value(const afa::Afa& a, const std::string& word) {
  return value(lower(a), word);
}

}  // namespace oracle

namespace testgen {

/// Exact affine vector with a common denominator <= maxDenominator.
inline afa::StateVector randomAffineVector(std::mt19937& rng, afa::Index size,
                                           int maxDenominator) {
  std::uniform_int_distribution<int> denDist(1, maxDenominator);
  const int den = denDist(rng);
  std::uniform_int_distribution<int> numDist(-den, den);
  afa::StateVector v(size);
  int sum = 0;
  for (afa::Index i = 0; i + 1 < size; ++i) {
    int num = numDist(rng);
    v(i) = afa::makeRational(num, den);
    sum += num;
  }
  v(size - 1) = afa::makeRational(den - sum, den);
  return v;
}

/// Random valid AfA: every column of every matrix and the initial vector
/// sums to 1 exactly, entry denominators bounded by maxDenominator.
inline afa::Afa randomAfa(std::mt19937& rng, std::string alphabet, afa::Index states,
                          int maxDenominator = 8) {
  afa::Afa a;
  a.alphabet = std::move(alphabet);
  a.initial = randomAffineVector(rng, states, maxDenominator);
  a.transitions.reserve(a.alphabet.size());
  for (size_t s = 0; s < a.alphabet.size(); ++s) {
    std::vector<Eigen::Triplet<afa::Rational>> triplets;
    for (afa::Index j = 0; j < states; ++j) {
      afa::StateVector column = randomAffineVector(rng, states, maxDenominator);
      for (afa::Index i = 0; i < states; ++i) {
        if (column(i) != 0) triplets.emplace_back(i, j, column(i));
      }
    }
    afa::TransitionMatrix m(states, states);
    m.setFromTriplets(triplets.begin(), triplets.end());
    a.transitions.push_back(std::move(m));
  }

  std::uniform_int_distribution<afa::Index> indexDist(0, states - 1);
  std::vector<afa::Index> accepting{indexDist(rng)};
  if (states > 1 && indexDist(rng) % 2 == 0) accepting.push_back(indexDist(rng));
  a.accepting = afa::Projection(states, std::move(accepting));
  a.kind = afa::Kind::Affine;
  return a;
}

}  // namespace testgen
