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

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "afa/types.hpp"

// Computable diagnostics behind the non-affineness criterion: density,
// equidistribution, unary value sequences, and spectral structure. The one
// module where floating point is allowed.
namespace afa::analysis {

struct DensityReport {
  double minRatio = 0.0;  // min over n <= N of |{a^k in L : k <= n}| / (n+1)
  double ratioAtEnd = 0.0;
};

/// Finite liminf proxy for the lower density of a unary language.
DensityReport lowerDensity(const std::function<bool(long)>& membership, long maxN);

/// Sieve of Eratosthenes; flags[i] is true iff i is prime.
std::vector<bool> primeSieve(long maxN);

/// Membership predicate for { a^{q(n)} : n in N, q(n) >= 0 }, q given by
/// integer coefficients (constant term first), degree >= 3, all nonnegative.
std::function<bool(long)> polyLanguage(const std::vector<long>& coefficients, long maxN);

/// Product of half-open intervals [a_j, b_j) inside [0,1).
struct IntervalBox {
  std::vector<std::pair<double, double>> dims;

  explicit IntervalBox(std::vector<std::pair<double, double>> dims);

  double volume() const;
  bool containsFractional(const Eigen::VectorXd& point) const;
};

/// Count of the first n points whose fractional parts land in the box.
long boxCount(const std::vector<Eigen::VectorXd>& seq, const IntervalBox& box, long n);

struct EquidistributionReport {
  double empirical = 0.0;  // C(I,n)/n
  double target = 0.0;     // volume of the box
  double deviation = 0.0;
};

EquidistributionReport equidistributionTest(const std::vector<Eigen::VectorXd>& seq,
                                            const IntervalBox& box, long n);

struct ScanSample {
  long n = 0;
  double value = 0.0;
  std::optional<Rational> exact;
};

/// F(n) = f(a^n) for a unary automaton, indexed contiguously.
struct UnaryScan {
  std::vector<ScanSample> samples;
};

/// F(0..maxN) by iterated application of the single transition matrix.
/// Float mode renormalizes the running state by its L1 norm each step (the
/// value is a ratio, invariant under positive rescaling); exact mode keeps
/// rationals and is capped by exactStepBudget since denominators grow fast.
UnaryScan unaryScan(const Afa& a, long maxN, bool exact = false,
                    long exactStepBudget = 100000);

struct ProgressionSpec {
  long h = 0;      // offset
  long q = 1;      // step, positive
  long count = 1;  // number of samples

  ProgressionSpec(long h, long q, long count);
};

/// F(h + i*q) for i = 0..count-1.
UnaryScan progressionScan(const Afa& a, const ProgressionSpec& spec, bool exact = false);

struct SpectrumEntry {
  std::complex<double> value;
  double modulus = 0.0;
  double angle = 0.0;  // in [0,1), value = modulus * e^{2 pi i angle}
};

/// Eigenvalues sorted by decreasing modulus. Every affine matrix carries the
/// all-ones left eigenvector, so an eigenvalue within 1e-9 of 1 is always
/// present. Throws NumericalError when the solver fails to converge.
std::vector<SpectrumEntry> spectrum(const TransitionMatrix& m);

/// Smallest-denominator p/q with q <= maxDenominator and |theta - p/q| <= tol.
std::optional<std::pair<long, long>> rationalAngleDetect(double theta, long maxDenominator,
                                                         double tol);

struct GapReport {
  std::optional<Rational> minAccepted;
  std::optional<Rational> maxRejected;
  std::optional<Rational> gap;  // present only when both sides were sampled
};

/// Partitions the sampled words by member(a, w, lambda). A missing side
/// leaves the gap absent, flagging a one-sided sample.
GapReport isolationGap(const Afa& a, const Rational& lambda,
                       const std::vector<std::string>& words);

/// CSV with columns n, F_float, F_exact_num, F_exact_den.
void writeScanCsv(std::ostream& out, const UnaryScan& scan);

}  // namespace afa::analysis
