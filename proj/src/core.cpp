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

#include "afa/core.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <set>

namespace afa {

namespace {

Rational columnSum(const TransitionMatrix& m, Index column) {
  Rational sum = 0;
  for (TransitionMatrix::InnerIterator it(m, column); it; ++it) sum += it.value();
  return sum;
}

}  // namespace

std::vector<std::string> validate(const Afa& a) {
  std::vector<std::string> violations;

  std::set<char> seen(a.alphabet.begin(), a.alphabet.end());
  if (seen.size() != a.alphabet.size()) {
    violations.push_back("alphabet contains repeated symbols");
  }
  if (a.transitions.size() != a.alphabet.size()) {
    violations.push_back("expected " + std::to_string(a.alphabet.size()) +
                         " transition matrices, found " + std::to_string(a.transitions.size()));
  }

  const Index k = a.states();
  if (k < 1) violations.push_back("automaton must have at least one state");

  Rational initialSum = 0;
  for (Index i = 0; i < k; ++i) initialSum += a.initial(i);
  if (k >= 1 && initialSum != 1) {
    violations.push_back("initial sums to " + toString(initialSum));
  }

  for (size_t s = 0; s < a.transitions.size() && s < a.alphabet.size(); ++s) {
    const TransitionMatrix& m = a.transitions[s];
    const char symbol = a.alphabet[s];
    if (m.rows() != k || m.cols() != k) {
      violations.push_back(std::string("matrix for '") + symbol + "' is " +
                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                           ", expected " + std::to_string(k) + "x" + std::to_string(k));
      continue;
    }
    for (Index j = 0; j < k; ++j) {
      Rational sum = columnSum(m, j);
      if (sum != 1) {
        violations.push_back(std::string("matrix for '") + symbol + "', column " +
                             std::to_string(j) + " sums to " + toString(sum));
      }
    }
  }

  if (a.accepting.size != k) {
    violations.push_back("accepting set sized for " + std::to_string(a.accepting.size) +
                         " states, automaton has " + std::to_string(k));
  }

  if (a.kind == Kind::Stochastic) {
    for (Index i = 0; i < k; ++i) {
      if (a.initial(i) < 0 || a.initial(i) > 1) {
        violations.push_back("stochastic initial entry " + std::to_string(i) + " is " +
                             toString(a.initial(i)) + ", outside [0,1]");
      }
    }
    for (size_t s = 0; s < a.transitions.size() && s < a.alphabet.size(); ++s) {
      const TransitionMatrix& m = a.transitions[s];
      for (Index j = 0; j < m.outerSize(); ++j) {
        for (TransitionMatrix::InnerIterator it(m, j); it; ++it) {
          if (it.value() < 0 || it.value() > 1) {
            violations.push_back(std::string("stochastic matrix for '") + a.alphabet[s] +
                                 "', entry (" + std::to_string(it.row()) + "," +
                                 std::to_string(it.col()) + ") is " + toString(it.value()) +
                                 ", outside [0,1]");
          }
        }
      }
    }
  }

  return violations;
}

StateVector apply(const TransitionMatrix& m, const StateVector& v) {
  if (m.cols() != v.size()) {
    throw DimensionError("cannot apply " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix to vector of length " +
                         std::to_string(v.size()));
  }
  return m * v;
}

StateVector run(const Afa& a, std::string_view word) {
  StateVector state = a.initial;
  for (char symbol : word) state = apply(a.matrixFor(symbol), state);
  return state;
}

Rational l1Norm(const StateVector& v) {
  Rational sum = 0;
  for (Index i = 0; i < v.size(); ++i) sum += abs(v(i));
  return sum;
}

Rational projectedL1(const Projection& p, const StateVector& v) {
  if (p.size != v.size()) {
    throw DimensionError("projection of size " + std::to_string(p.size) +
                         " against vector of length " + std::to_string(v.size()));
  }
  Rational sum = 0;
  for (Index i : p.accepting) sum += abs(v(i));
  return sum;
}

Rational acceptValue(const Afa& a, std::string_view word) {
  StateVector final = run(a, word);
  return projectedL1(a.accepting, final) / l1Norm(final);
}

bool member(const Afa& a, std::string_view word, const Rational& lambda) {
  return acceptValue(a, word) > lambda;
}

bool member(const Afa& a, std::string_view word, const CutpointSpec& spec) {
  return member(a, word, spec.lambda);
}

Projection projComplement(const Projection& p) {
  std::vector<Index> indices;
  indices.reserve(static_cast<size_t>(p.size) - p.accepting.size());
  for (Index i = 0; i < p.size; ++i) {
    if (!p.contains(i)) indices.push_back(i);
  }
  return Projection(p.size, std::move(indices));
}

Projection projTensor(const Projection& a, const Projection& b) {
  std::vector<Index> indices;
  indices.reserve(a.accepting.size() * b.accepting.size());
  for (Index i : a.accepting) {
    for (Index j : b.accepting) indices.push_back(i * b.size + j);
  }
  return Projection(a.size * b.size, std::move(indices));
}

Projection projUnionDisjoint(const Projection& a, const Projection& b) {
  if (a.size != b.size) {
    throw DimensionError("projection sizes differ: " + std::to_string(a.size) + " vs " +
                         std::to_string(b.size));
  }
  std::vector<Index> common;
  std::set_intersection(a.accepting.begin(), a.accepting.end(), b.accepting.begin(),
                        b.accepting.end(), std::back_inserter(common));
  if (!common.empty()) {
    throw std::invalid_argument("projections share index " + std::to_string(common.front()));
  }
  std::vector<Index> indices = a.accepting;
  indices.insert(indices.end(), b.accepting.begin(), b.accepting.end());
  return Projection(a.size, std::move(indices));
}

TransitionMatrix matTensor(const TransitionMatrix& a, const TransitionMatrix& b) {
  TransitionMatrix result = Eigen::kroneckerProduct(a, b);
  result.makeCompressed();
  return result;
}

StateVector vecTensor(const StateVector& a, const StateVector& b) {
  StateVector result(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) {
    for (Index j = 0; j < b.size(); ++j) result(i * b.size() + j) = a(i) * b(j);
  }
  return result;
}

TransitionMatrix identityMatrix(Index size) {
  TransitionMatrix m(size, size);
  m.setIdentity();
  return m;
}

std::vector<std::string> allWords(std::string_view alphabet, int maxLength) {
  std::vector<std::string> words{""};
  size_t levelBegin = 0;
  for (int length = 1; length <= maxLength; ++length) {
    size_t levelEnd = words.size();
    for (size_t i = levelBegin; i < levelEnd; ++i) {
      for (char symbol : alphabet) words.push_back(words[i] + symbol);
    }
    levelBegin = levelEnd;
  }
  return words;
}

}  // namespace afa
