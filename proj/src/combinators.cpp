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

#include "afa/combinators.hpp"

#include <utility>

#include "afa/core.hpp"

namespace afa {

namespace {

void requireSameAlphabet(const Afa& a, const Afa& b) {
  if (a.alphabet != b.alphabet) {
    throw AlphabetMismatchError("alphabets differ: '" + a.alphabet + "' vs '" + b.alphabet +
                                "'");
  }
}

Kind combinedKind(const Afa& a, const Afa& b) {
  return (a.kind == Kind::Stochastic && b.kind == Kind::Stochastic) ? Kind::Stochastic
                                                                    : Kind::Affine;
}

/// diag(m, m), as triplets.
TransitionMatrix duplicateBlocks(const TransitionMatrix& m) {
  const Index n = m.rows();
  std::vector<Eigen::Triplet<Rational>> triplets;
  triplets.reserve(static_cast<size_t>(2 * m.nonZeros()));
  for (Index j = 0; j < m.outerSize(); ++j) {
    for (TransitionMatrix::InnerIterator it(m, j); it; ++it) {
      triplets.emplace_back(it.row(), it.col(), it.value());
      triplets.emplace_back(n + it.row(), n + it.col(), it.value());
    }
  }
  TransitionMatrix out(2 * n, 2 * n);
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

}  // namespace

MixWeights::MixWeights(Rational alphaIn, Rational betaIn)
    : alpha(std::move(alphaIn)), beta(std::move(betaIn)) {
  if (alpha < 0 || beta < 0) throw std::invalid_argument("mix weights must be nonnegative");
  if (alpha + beta != 1) throw std::invalid_argument("mix weights must sum to 1");
}

Afa tensorProduct(const Afa& a, const Afa& b) {
  requireSameAlphabet(a, b);
  Afa out;
  out.alphabet = a.alphabet;
  out.initial = vecTensor(a.initial, b.initial);
  out.transitions.reserve(a.transitions.size());
  for (size_t s = 0; s < a.transitions.size(); ++s) {
    out.transitions.push_back(matTensor(a.transitions[s], b.transitions[s]));
  }
  out.accepting = projTensor(a.accepting, b.accepting);
  out.kind = combinedKind(a, b);
  return out;
}

Afa constant(const Rational& alpha, std::string alphabet) {
  if (alpha < 0 || alpha > 1) throw std::invalid_argument("constant value outside [0,1]");
  Afa out;
  out.alphabet = std::move(alphabet);
  out.initial = StateVector(2);
  out.initial << alpha, 1 - alpha;
  out.transitions.assign(out.alphabet.size(), identityMatrix(2));
  out.accepting = Projection(2, {0});
  out.kind = Kind::Stochastic;
  return out;
}

Afa scale(const Afa& a, const Rational& alpha) {
  return tensorProduct(constant(alpha, a.alphabet), a);
}

Afa convexSum(const Afa& a, const Afa& b, const MixWeights& weights) {
  requireSameAlphabet(a, b);
  const Index na = a.states();
  const Index nb = b.states();
  const Index block = na * nb;

  Afa out;
  out.alphabet = a.alphabet;

  StateVector seed = vecTensor(a.initial, b.initial);
  out.initial = StateVector(2 * block);
  for (Index i = 0; i < block; ++i) {
    out.initial(i) = weights.alpha * seed(i);
    out.initial(block + i) = weights.beta * seed(i);
  }

  out.transitions.reserve(a.transitions.size());
  for (size_t s = 0; s < a.transitions.size(); ++s) {
    out.transitions.push_back(duplicateBlocks(matTensor(a.transitions[s], b.transitions[s])));
  }

  // First block accepts through P_a tensor I, second through I tensor P_b.
  std::vector<Index> accepting;
  for (Index i : a.accepting.accepting) {
    for (Index j = 0; j < nb; ++j) accepting.push_back(i * nb + j);
  }
  for (Index i = 0; i < na; ++i) {
    for (Index j : b.accepting.accepting) accepting.push_back(block + i * nb + j);
  }
  out.accepting = Projection(2 * block, std::move(accepting));
  out.kind = combinedKind(a, b);
  return out;
}

Afa complement(const Afa& a) {
  Afa out = a;
  out.accepting = projComplement(a.accepting);
  return out;
}

Afa amplify(const Afa& a) {
  const Index k = a.states();
  Afa out;
  out.alphabet = a.alphabet;
  out.initial = vecTensor(vecTensor(a.initial, a.initial), a.initial);
  out.transitions.reserve(a.transitions.size());
  for (const TransitionMatrix& m : a.transitions) {
    out.transitions.push_back(matTensor(matTensor(m, m), m));
  }

  // Accept when at least two of the three copies accept: the disjoint union
  // (Ea,Ea,Ea) + (-Ea,Ea,Ea) + (Ea,-Ea,Ea) + (Ea,Ea,-Ea).
  std::vector<bool> accepts = a.accepting.mask();
  std::vector<Index> accepting;
  for (Index t = 0; t < k * k * k; ++t) {
    const Index first = t / (k * k);
    const Index second = (t / k) % k;
    const Index third = t % k;
    int votes = static_cast<int>(accepts[static_cast<size_t>(first)]) +
                static_cast<int>(accepts[static_cast<size_t>(second)]) +
                static_cast<int>(accepts[static_cast<size_t>(third)]);
    if (votes >= 2) accepting.push_back(t);
  }
  out.accepting = Projection(k * k * k, std::move(accepting));
  out.kind = a.kind;
  return out;
}

Rational amplifyPolynomial(const Rational& x) { return x * x * (3 - 2 * x); }

Afa amplifyRounds(const Afa& a, int rounds, Index stateLimit) {
  if (rounds < 0) throw std::invalid_argument("rounds must be nonnegative");
  Afa out = a;
  for (int r = 0; r < rounds; ++r) {
    const Index k = out.states();
    if (k > stateLimit / (k * k)) {
      throw StateLimitError("amplification round " + std::to_string(r + 1) + " would need " +
                            std::to_string(k) + "^3 states, over the limit of " +
                            std::to_string(stateLimit));
    }
    out = amplify(out);
  }
  return out;
}

Afa shiftCutpoint(const Afa& a, const Rational& lambda1, const Rational& lambda2) {
  if (lambda1 < 0 || lambda1 > 1 || lambda2 < 0 || lambda2 > 1) {
    throw std::invalid_argument("cutpoints must lie in [0,1]");
  }
  if (lambda1 == 1) return scale(a, lambda2);
  if (lambda2 >= lambda1) {
    Rational alpha = (1 - lambda2) / (1 - lambda1);
    return convexSum(a, constant(1, a.alphabet), MixWeights(alpha, 1 - alpha));
  }
  // Decreasing shift: complement, shift 1-lambda1 -> 1-lambda2, complement.
  return complement(shiftCutpoint(complement(a), 1 - lambda1, 1 - lambda2));
}

Afa unionAut(const Afa& a, const Afa& b) {
  return convexSum(a, b, MixWeights(makeRational(1, 2), makeRational(1, 2)));
}

Afa intersectAut(const Afa& a, const Afa& b) { return tensorProduct(a, b); }

Afa booleanWithAmplify(BooleanOp op, const Afa& a, const Afa& b,
                       const Rational& declaredError) {
  const Rational target = makeRational(1, 4);
  const Afa& left = declaredError > target ? amplifyRounds(a, 2) : a;
  const Afa& right = declaredError > target ? amplifyRounds(b, 2) : b;
  return op == BooleanOp::Union ? unionAut(left, right) : intersectAut(left, right);
}

}  // namespace afa
