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

#include "afa/analysis.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <numeric>
#include <ostream>

#include "afa/core.hpp"

namespace afa::analysis {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void requireUnary(const Afa& a) {
  if (a.alphabet.size() != 1) {
    throw PreconditionError("scan requires a unary alphabet, got '" + a.alphabet + "'");
  }
}

Eigen::MatrixXd toDense(const TransitionMatrix& m) {
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(m.rows(), m.cols());
  for (Index j = 0; j < m.outerSize(); ++j) {
    for (TransitionMatrix::InnerIterator it(m, j); it; ++it) {
      dense(it.row(), it.col()) = toDouble(it.value());
    }
  }
  return dense;
}

Eigen::VectorXd toDense(const StateVector& v) {
  Eigen::VectorXd dense(v.size());
  for (Index i = 0; i < v.size(); ++i) dense(i) = toDouble(v(i));
  return dense;
}

double fractionalPart(double x) { return x - std::floor(x); }

/// Shared stepper for unary scans: emits F at the requested indices.
UnaryScan scanAt(const Afa& a, const std::vector<long>& indices, bool exact,
                 long exactStepBudget) {
  requireUnary(a);
  UnaryScan scan;
  if (indices.empty()) return scan;
  const long last = indices.back();
  if (exact && last > exactStepBudget) {
    throw PreconditionError("exact scan to n=" + std::to_string(last) +
                            " exceeds the step budget of " + std::to_string(exactStepBudget));
  }

  if (exact) {
    const TransitionMatrix& m = a.transitions.front();
    StateVector state = a.initial;
    size_t want = 0;
    for (long n = 0; n <= last && want < indices.size(); ++n) {
      if (n > 0) state = apply(m, state);
      if (indices[want] == n) {
        Rational value = projectedL1(a.accepting, state) / l1Norm(state);
        scan.samples.push_back({n, toDouble(value), value});
        ++want;
      }
    }
    return scan;
  }

  const Eigen::MatrixXd m = toDense(a.transitions.front());
  std::vector<bool> accepts = a.accepting.mask();
  Eigen::VectorXd state = toDense(a.initial);
  size_t want = 0;
  for (long n = 0; n <= last && want < indices.size(); ++n) {
    if (n > 0) {
      state = m * state;
      state /= state.cwiseAbs().sum();  // value is scale-invariant
    }
    if (indices[want] == n) {
      double total = state.cwiseAbs().sum();
      double mass = 0.0;
      for (Index i = 0; i < state.size(); ++i) {
        if (accepts[static_cast<size_t>(i)]) mass += std::abs(state(i));
      }
      scan.samples.push_back({n, mass / total, std::nullopt});
      ++want;
    }
  }
  return scan;
}

}  // namespace

DensityReport lowerDensity(const std::function<bool(long)>& membership, long maxN) {
  if (maxN < 0) throw std::invalid_argument("maxN must be nonnegative");
  DensityReport report;
  report.minRatio = 1.0;
  long members = 0;
  for (long n = 0; n <= maxN; ++n) {
    if (membership(n)) ++members;
    double ratio = static_cast<double>(members) / static_cast<double>(n + 1);
    report.minRatio = std::min(report.minRatio, ratio);
    report.ratioAtEnd = ratio;
  }
  return report;
}

std::vector<bool> primeSieve(long maxN) {
  if (maxN < 0) throw std::invalid_argument("sieve bound must be nonnegative");
  std::vector<bool> flags(static_cast<size_t>(std::max<long>(maxN + 1, 2)), true);
  flags[0] = flags[1] = false;
  for (long p = 2; p * p <= maxN; ++p) {
    if (!flags[static_cast<size_t>(p)]) continue;
    for (long q = p * p; q <= maxN; q += p) flags[static_cast<size_t>(q)] = false;
  }
  flags.resize(static_cast<size_t>(maxN + 1));
  return flags;
}

std::function<bool(long)> polyLanguage(const std::vector<long>& coefficients, long maxN) {
  if (coefficients.size() < 4) {
    throw std::invalid_argument("polynomial must have degree at least 3");
  }
  for (long c : coefficients) {
    if (c < 0) throw std::invalid_argument("polynomial coefficients must be nonnegative");
  }
  if (coefficients.back() == 0) {
    throw std::invalid_argument("leading polynomial coefficient must be positive");
  }

  auto lengths = std::make_shared<std::vector<bool>>(static_cast<size_t>(maxN + 1), false);
  for (long n = 0;; ++n) {
    mpz_class value = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
      value = value * n + *it;
    }
    if (value > maxN) break;
    (*lengths)[value.get_ui()] = true;
  }
  return [lengths, maxN](long n) { return n >= 0 && n <= maxN && (*lengths)[static_cast<size_t>(n)]; };
}

IntervalBox::IntervalBox(std::vector<std::pair<double, double>> dimsIn) : dims(std::move(dimsIn)) {
  if (dims.empty()) throw std::invalid_argument("interval box needs at least one dimension");
  for (auto& [a, b] : dims) {
    if (!(a >= 0.0 && a < b && b <= 1.0)) {
      throw std::invalid_argument("interval box requires 0 <= a < b <= 1 per dimension");
    }
  }
}

double IntervalBox::volume() const {
  return std::accumulate(dims.begin(), dims.end(), 1.0,
                         [](double acc, const auto& d) { return acc * (d.second - d.first); });
}

bool IntervalBox::containsFractional(const Eigen::VectorXd& point) const {
  if (static_cast<size_t>(point.size()) != dims.size()) {
    throw DimensionError("point dimension does not match the box");
  }
  for (size_t j = 0; j < dims.size(); ++j) {
    double frac = fractionalPart(point(static_cast<Index>(j)));
    if (frac < dims[j].first || frac >= dims[j].second) return false;
  }
  return true;
}

long boxCount(const std::vector<Eigen::VectorXd>& seq, const IntervalBox& box, long n) {
  if (n < 0 || static_cast<size_t>(n) > seq.size()) {
    throw std::invalid_argument("count " + std::to_string(n) + " out of range for sequence of " +
                                std::to_string(seq.size()));
  }
  long count = 0;
  for (long i = 0; i < n; ++i) {
    if (box.containsFractional(seq[static_cast<size_t>(i)])) ++count;
  }
  return count;
}

EquidistributionReport equidistributionTest(const std::vector<Eigen::VectorXd>& seq,
                                            const IntervalBox& box, long n) {
  if (n <= 0) throw std::invalid_argument("equidistribution test needs n >= 1");
  EquidistributionReport report;
  report.empirical = static_cast<double>(boxCount(seq, box, n)) / static_cast<double>(n);
  report.target = box.volume();
  report.deviation = std::abs(report.empirical - report.target);
  return report;
}

UnaryScan unaryScan(const Afa& a, long maxN, bool exact, long exactStepBudget) {
  if (maxN < 0) throw std::invalid_argument("maxN must be nonnegative");
  std::vector<long> indices(static_cast<size_t>(maxN + 1));
  std::iota(indices.begin(), indices.end(), 0L);
  return scanAt(a, indices, exact, exactStepBudget);
}

ProgressionSpec::ProgressionSpec(long hIn, long qIn, long countIn) : h(hIn), q(qIn), count(countIn) {
  if (h < 0) throw std::invalid_argument("progression offset must be nonnegative");
  if (q < 1) throw std::invalid_argument("progression step must be positive");
  if (count < 1) throw std::invalid_argument("progression needs at least one sample");
}

UnaryScan progressionScan(const Afa& a, const ProgressionSpec& spec, bool exact) {
  std::vector<long> indices;
  indices.reserve(static_cast<size_t>(spec.count));
  for (long i = 0; i < spec.count; ++i) indices.push_back(spec.h + i * spec.q);
  return scanAt(a, indices, exact, indices.back());
}

std::vector<SpectrumEntry> spectrum(const TransitionMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("spectrum of a non-square matrix");
  Eigen::EigenSolver<Eigen::MatrixXd> solver(toDense(m), false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigenvalue solver failed to converge");
  }
  std::vector<SpectrumEntry> entries;
  entries.reserve(static_cast<size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i) {
    SpectrumEntry entry;
    entry.value = solver.eigenvalues()(i);
    entry.modulus = std::abs(entry.value);
    entry.angle = fractionalPart(std::arg(entry.value) / kTwoPi);
    entries.push_back(entry);
  }
  std::sort(entries.begin(), entries.end(), [](const SpectrumEntry& x, const SpectrumEntry& y) {
    return x.modulus != y.modulus ? x.modulus > y.modulus : x.angle < y.angle;
  });
  return entries;
}

std::optional<std::pair<long, long>> rationalAngleDetect(double theta, long maxDenominator,
                                                         double tol) {
  if (theta < 0.0 || theta >= 1.0) throw std::invalid_argument("angle must lie in [0,1)");
  if (maxDenominator < 1) throw std::invalid_argument("maxDenominator must be positive");
  for (long q = 1; q <= maxDenominator; ++q) {
    long p = std::lround(theta * static_cast<double>(q));
    if (std::abs(theta - static_cast<double>(p) / static_cast<double>(q)) <= tol) {
      long g = std::gcd(p, q);
      return std::make_pair(p / g, q / g);
    }
  }
  return std::nullopt;
}

GapReport isolationGap(const Afa& a, const Rational& lambda,
                       const std::vector<std::string>& words) {
  if (words.empty()) throw std::invalid_argument("isolation gap needs a nonempty word list");
  GapReport report;
  for (const std::string& word : words) {
    Rational value = acceptValue(a, word);
    if (value > lambda) {
      if (!report.minAccepted || value < *report.minAccepted) report.minAccepted = value;
    } else {
      if (!report.maxRejected || value > *report.maxRejected) report.maxRejected = value;
    }
  }
  if (report.minAccepted && report.maxRejected) {
    report.gap = *report.minAccepted - *report.maxRejected;
  }
  return report;
}

void writeScanCsv(std::ostream& out, const UnaryScan& scan) {
  out << "n,F_float,F_exact_num,F_exact_den\n";
  for (const ScanSample& sample : scan.samples) {
    out << sample.n << ',' << sample.value << ',';
    if (sample.exact) {
      out << sample.exact->get_num().get_str() << ',' << sample.exact->get_den().get_str();
    } else {
      out << ',';
    }
    out << '\n';
  }
}

}  // namespace afa::analysis
