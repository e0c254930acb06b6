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

#include "afa/normal_forms.hpp"

#include <vector>

#include "afa/combinators.hpp"
#include "afa/core.hpp"

namespace afa {

namespace {

bool hasCanonicalInitial(const Afa& a) {
  if (a.states() < 1 || a.initial(0) != 1) return false;
  for (Index i = 1; i < a.states(); ++i) {
    if (a.initial(i) != 0) return false;
  }
  return true;
}

}  // namespace

Afa canonicalInitial(const Afa& a) {
  const Index k = a.states();

  Afa out;
  out.alphabet = a.alphabet;
  out.initial = StateVector::Zero(k + 1);
  out.initial(0) = 1;
  out.kind = a.kind;

  out.transitions.reserve(a.transitions.size());
  for (const TransitionMatrix& m : a.transitions) {
    StateVector injected = apply(m, a.initial);  // A_x v0
    std::vector<Eigen::Triplet<Rational>> triplets;
    triplets.reserve(static_cast<size_t>(m.nonZeros() + k));
    for (Index i = 0; i < k; ++i) {
      if (injected(i) != 0) triplets.emplace_back(i + 1, 0, injected(i));
    }
    for (Index j = 0; j < m.outerSize(); ++j) {
      for (TransitionMatrix::InnerIterator it(m, j); it; ++it) {
        triplets.emplace_back(it.row() + 1, it.col() + 1, it.value());
      }
    }
    TransitionMatrix b(k + 1, k + 1);
    b.setFromTriplets(triplets.begin(), triplets.end());
    out.transitions.push_back(std::move(b));
  }

  std::vector<Index> accepting;
  accepting.reserve(a.accepting.accepting.size() + 1);
  if (acceptValue(a, "") == 1) accepting.push_back(0);
  for (Index i : a.accepting.accepting) accepting.push_back(i + 1);
  out.accepting = Projection(k + 1, std::move(accepting));
  return out;
}

Rational maxEntry(const Afa& a) {
  Rational best = 0;
  for (const TransitionMatrix& m : a.transitions) {
    for (Index j = 0; j < m.outerSize(); ++j) {
      for (TransitionMatrix::InnerIterator it(m, j); it; ++it) {
        Rational magnitude = abs(it.value());
        if (magnitude > best) best = magnitude;
      }
    }
  }
  return best;
}

Afa boundedForm(const Afa& a) {
  if (!hasCanonicalInitial(a)) {
    throw PreconditionError("bounded form requires the canonical initial state (1,0,...,0)");
  }
  const Index k = a.states();

  // Integer ceiling of the entry bound, at least 2, so kc > 1.
  Rational bound = maxEntry(a);
  mpz_class ceiling;
  mpz_cdiv_q(ceiling.get_mpz_t(), bound.get_num().get_mpz_t(), bound.get_den().get_mpz_t());
  if (ceiling < 2) ceiling = 2;
  const Rational kc = Rational(ceiling) * k;
  const Rational topScale = 1 / kc;
  const Rational bottomFill = (kc - 1) / (2 * kc);

  Afa out;
  out.alphabet = a.alphabet;
  out.initial = StateVector::Zero(k + 2);
  out.initial(0) = 1;
  out.kind = Kind::Affine;

  out.transitions.reserve(a.transitions.size());
  for (const TransitionMatrix& m : a.transitions) {
    std::vector<Eigen::Triplet<Rational>> triplets;
    triplets.reserve(static_cast<size_t>(m.nonZeros() + 2 * k + 2));
    for (Index j = 0; j < m.outerSize(); ++j) {
      for (TransitionMatrix::InnerIterator it(m, j); it; ++it) {
        triplets.emplace_back(it.row(), it.col(), topScale * it.value());
      }
    }
    for (Index j = 0; j < k; ++j) {
      triplets.emplace_back(k, j, bottomFill);
      triplets.emplace_back(k + 1, j, bottomFill);
    }
    triplets.emplace_back(k, k, 1);
    triplets.emplace_back(k + 1, k + 1, 1);
    TransitionMatrix b(k + 2, k + 2);
    b.setFromTriplets(triplets.begin(), triplets.end());
    out.transitions.push_back(std::move(b));
  }

  std::vector<Index> accepting = a.accepting.accepting;
  accepting.push_back(k);
  out.accepting = Projection(k + 2, std::move(accepting));
  return out;
}

Afa normalizePipeline(const Afa& a, const Rational& lambda) {
  return boundedForm(canonicalInitial(shiftCutpoint(a, lambda, makeRational(1, 2))));
}

}  // namespace afa
