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

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>
#include <string_view>

namespace afa {

/// Exact scalar of the whole algebraic core. GMP keeps values canonical
/// (reduced, positive denominator) through every arithmetic operation.
using Rational = mpq_class;

/// num/den as a canonical Rational. den must be nonzero.
Rational makeRational(long num, long den = 1);

/// Accepts an optionally signed integer, "p/q" with q > 0, or a finite
/// decimal such as "0.25" (converted exactly). Throws std::invalid_argument
/// on anything else.
Rational parseRational(std::string_view text);

/// Reduced "p/q", or a bare integer when the denominator is 1.
std::string toString(const Rational& value);

double toDouble(const Rational& value);

}  // namespace afa

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
