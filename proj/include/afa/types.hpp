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

#include <Eigen/SparseCore>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "afa/rational.hpp"

namespace afa {

using Index = Eigen::Index;

/// Column state vector; entries of an affine state sum to 1.
using StateVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Column-affine transition matrix: entry (i,j) is the weight flowing from
/// state j into state i, every column sums to 1. Stored sparse because the
/// tensor constructions blow dense storage up long before they blow up nnz.
using TransitionMatrix = Eigen::SparseMatrix<Rational>;

class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
  using Error::Error;
};

class UnknownSymbolError : public Error {
  using Error::Error;
};

class AlphabetMismatchError : public Error {
  using Error::Error;
};

class StateLimitError : public Error {
  using Error::Error;
};

class PreconditionError : public Error {
  using Error::Error;
};

class NumericalError : public Error {
  using Error::Error;
};

/// Diagonal 0/1 projection, identified by its accepting index set.
struct Projection {
  Index size = 0;
  std::vector<Index> accepting;  // sorted, unique, each in [0, size)

  Projection() = default;
  Projection(Index size, std::vector<Index> indices);

  bool contains(Index state) const;
  std::vector<bool> mask() const;
};

enum class Kind { Affine, Stochastic };

/// The 5-tuple (E, Sigma, {M_x}, v0, E_a). A PFA is the Kind::Stochastic
/// case. Immutable by convention: every operation builds a fresh value.
struct Afa {
  std::string alphabet;                       // ordered, distinct symbols
  StateVector initial;                        // v0
  std::vector<TransitionMatrix> transitions;  // parallel to alphabet
  Projection accepting;
  Kind kind = Kind::Affine;

  Index states() const { return initial.size(); }

  /// Position of symbol in the alphabet, or -1.
  Index symbolIndex(char symbol) const;

  /// Throws UnknownSymbolError for symbols outside the alphabet.
  const TransitionMatrix& matrixFor(char symbol) const;
};

/// Cutpoint with optional isolation radius / error bound.
struct CutpointSpec {
  Rational lambda;
  std::optional<Rational> isolation;   // delta > 0, [lambda-delta, lambda+delta] within [0,1]
  std::optional<Rational> errorBound;  // epsilon in [0, 1/2)

  explicit CutpointSpec(Rational lambda, std::optional<Rational> isolation = std::nullopt,
                        std::optional<Rational> errorBound = std::nullopt);
};

}  // namespace afa
