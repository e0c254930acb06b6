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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "afa/analysis.hpp"
#include "afa/core.hpp"
#include "afa/gallery.hpp"

using namespace afa;
using namespace afa::analysis;

TEST_CASE("primeSieve counts pi(100000) = 9592") {
  std::vector<bool> flags = primeSieve(100000);
  long primes = 0;
  for (bool f : flags) primes += f;
  CHECK(primes == 9592);
  CHECK(flags[2]);
  CHECK(flags[99991]);
  CHECK_FALSE(flags[1]);
  CHECK_FALSE(flags[100000]);
}

TEST_CASE("lowerDensity of the primes up to 100000") {
  std::vector<bool> flags = primeSieve(100000);
  DensityReport report = lowerDensity([&](long n) { return flags[n]; }, 100000);
  CHECK(report.ratioAtEnd == doctest::Approx(9592.0 / 100001.0).epsilon(1e-12));
  // n = 0 contributes the ratio 0/1 before any prime appears
  CHECK(report.minRatio == 0.0);
}

TEST_CASE("lowerDensity of a full language is one") {
  DensityReport report = lowerDensity([](long) { return true; }, 1000);
  CHECK(report.minRatio == 1.0);
  CHECK(report.ratioAtEnd == 1.0);
}

TEST_CASE("polyLanguage matches direct evaluation of n^3") {
  auto inLanguage = polyLanguage({0, 0, 0, 1}, 100000);
  CHECK(inLanguage(0));
  CHECK(inLanguage(1));
  CHECK(inLanguage(8));
  CHECK(inLanguage(27));
  CHECK(inLanguage(97336));  // 46^3
  CHECK_FALSE(inLanguage(2));
  CHECK_FALSE(inLanguage(9));
  CHECK_FALSE(inLanguage(99999));
  DensityReport report = lowerDensity(inLanguage, 100000);
  CHECK(report.ratioAtEnd < 0.001);  // cube language is sparse
}

TEST_CASE("polyLanguage validates its coefficients") {
  CHECK_THROWS_AS(polyLanguage({1, 2}, 100), std::invalid_argument);       // degree < 3
  CHECK_THROWS_AS(polyLanguage({0, 0, 0, -1}, 100), std::invalid_argument);  // negative
}

TEST_CASE("interval boxes: volume, membership, validation") {
  IntervalBox box({{0.0, 0.5}, {0.25, 0.75}});
  CHECK(box.volume() == doctest::Approx(0.25));
  Eigen::VectorXd inside(2), outside(2);
  inside << 1.25, 3.30;   // fractional parts 0.25, 0.30
  outside << 0.75, 0.30;  // first coordinate misses
  CHECK(box.containsFractional(inside));
  CHECK_FALSE(box.containsFractional(outside));
  CHECK_THROWS_AS(IntervalBox({{0.5, 0.25}}), std::invalid_argument);
  CHECK_THROWS_AS(IntervalBox({{0.0, 1.5}}), std::invalid_argument);
}

TEST_CASE("equidistribution of n*sqrt(2) mod 1 approaches the box volume") {
  std::vector<Eigen::VectorXd> seq;
  for (long i = 1; i <= 5000; ++i) {
    Eigen::VectorXd p(1);
    p << i * std::sqrt(2.0);
    seq.push_back(p);
  }
  IntervalBox box({{0.125, 0.5}});
  EquidistributionReport report = equidistributionTest(seq, box, 5000);
  CHECK(report.target == doctest::Approx(0.375));
  CHECK(report.deviation < 0.01);
}

TEST_CASE("the rational rotation by 1/4 is visibly not equidistributed") {
  std::vector<Eigen::VectorXd> seq;
  for (long i = 1; i <= 4000; ++i) {
    Eigen::VectorXd p(1);
    p << i / 4.0;
    seq.push_back(p);
  }
  // orbit is {0, 1/4, 1/2, 3/4}; only 0 lands in [0, 1/8)
  EquidistributionReport report = equidistributionTest(seq, IntervalBox({{0.0, 0.125}}), 4000);
  CHECK(report.empirical == doctest::Approx(0.25));
  CHECK(report.deviation >= 0.1);
}

TEST_CASE("unaryScan reproduces the closed form 1/(1+2n)") {
  Afa unary = gallery::eqUnaryAfa();
  UnaryScan scan = unaryScan(unary, 50, /*exact=*/true);
  REQUIRE(scan.samples.size() == 51);
  for (long n = 0; n <= 50; ++n) {
    const ScanSample& s = scan.samples[static_cast<size_t>(n)];
    CHECK(s.n == n);
    REQUIRE(s.exact.has_value());
    CHECK(*s.exact == makeRational(1, 1 + 2 * n));
    CHECK(s.value == doctest::Approx(1.0 / (1 + 2 * n)).epsilon(1e-9));
  }
}

TEST_CASE("float and exact scans agree after renormalization") {
  Afa unary = gallery::eqUnaryAfa();
  UnaryScan floats = unaryScan(unary, 200, /*exact=*/false);
  UnaryScan exacts = unaryScan(unary, 200, /*exact=*/true);
  for (size_t i = 0; i < floats.samples.size(); ++i) {
    CHECK_FALSE(floats.samples[i].exact.has_value());
    CHECK(floats.samples[i].value ==
          doctest::Approx(toDouble(*exacts.samples[i].exact)).epsilon(1e-9));
  }
}

TEST_CASE("progressionScan samples h + i*q") {
  Afa unary = gallery::eqUnaryAfa();
  UnaryScan scan = progressionScan(unary, ProgressionSpec(2, 3, 3), /*exact=*/true);
  REQUIRE(scan.samples.size() == 3);
  CHECK(scan.samples[0].n == 2);
  CHECK(*scan.samples[0].exact == makeRational(1, 5));
  CHECK(scan.samples[1].n == 5);
  CHECK(*scan.samples[1].exact == makeRational(1, 11));
  CHECK(scan.samples[2].n == 8);
  CHECK(*scan.samples[2].exact == makeRational(1, 17));
  CHECK_THROWS_AS(ProgressionSpec(-1, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(ProgressionSpec(0, 0, 3), std::invalid_argument);
}

TEST_CASE("spectrum always contains the eigenvalue 1 and sorts by modulus") {
  Afa eq = gallery::eqAfa();
  auto entries = spectrum(eq.matrixFor('a'));
  REQUIRE(entries.size() == 3);
  bool hasOne = false;
  for (const auto& e : entries) {
    if (std::abs(e.value - std::complex<double>(1.0, 0.0)) < 1e-9) hasOne = true;
  }
  CHECK(hasOne);
  for (size_t i = 0; i + 1 < entries.size(); ++i) {
    CHECK(entries[i].modulus >= entries[i + 1].modulus - 1e-12);
  }
  for (const auto& e : entries) {
    CHECK(e.angle >= 0.0);
    CHECK(e.angle < 1.0);
    CHECK(std::abs(e.value) == doctest::Approx(e.modulus));
  }
}

TEST_CASE("spectrum of a rotation exposes the rational angle") {
  // 90-degree rotation embedded as a 3-state affine matrix: last column
  // keeps the column sums at 1.
  TransitionMatrix m(3, 3);
  std::vector<Eigen::Triplet<Rational>> t = {
      {0, 1, Rational(-1)}, {1, 0, Rational(1)},  {2, 0, Rational(0)},
      {2, 1, Rational(2)},  {2, 2, Rational(1)},
  };
  m.setFromTriplets(t.begin(), t.end());
  auto entries = spectrum(m);
  bool quarter = false;
  for (const auto& e : entries) {
    auto detected = rationalAngleDetect(e.angle, 8, 1e-9);
    if (detected && detected->first == 1 && detected->second == 4) quarter = true;
  }
  CHECK(quarter);
}

TEST_CASE("rationalAngleDetect finds small denominators and rejects noise") {
  auto third = rationalAngleDetect(1.0 / 3.0, 10, 1e-9);
  REQUIRE(third.has_value());
  CHECK(third->first == 1);
  CHECK(third->second == 3);
  auto zero = rationalAngleDetect(0.0, 10, 1e-9);
  REQUIRE(zero.has_value());
  CHECK(zero->first == 0);
  CHECK(zero->second == 1);
  CHECK_FALSE(rationalAngleDetect(std::sqrt(2.0) - 1.0, 50, 1e-9).has_value());
  auto reduced = rationalAngleDetect(0.5, 10, 1e-9);
  REQUIRE(reduced.has_value());
  CHECK(reduced->second == 2);  // 1/2, not 2/4
}

TEST_CASE("isolationGap reports the two-sided margin of the witness") {
  Afa eq = gallery::eqAfa();
  GapReport report = isolationGap(eq, makeRational(1, 2), allWords("ab", 6));
  REQUIRE(report.minAccepted.has_value());
  REQUIRE(report.maxRejected.has_value());
  REQUIRE(report.gap.has_value());
  CHECK(*report.minAccepted == 1);
  CHECK(*report.maxRejected == makeRational(1, 3));
  CHECK(*report.gap == makeRational(2, 3));  // minAccepted - maxRejected
}

TEST_CASE("isolationGap flags one-sided samples") {
  Afa c = gallery::constantPfa(makeRational(1, 4), "ab");
  GapReport report = isolationGap(c, makeRational(1, 2), allWords("ab", 3));
  CHECK_FALSE(report.minAccepted.has_value());
  REQUIRE(report.maxRejected.has_value());
  CHECK(*report.maxRejected == makeRational(1, 4));
  CHECK_FALSE(report.gap.has_value());
}

TEST_CASE("writeScanCsv emits the documented columns") {
  Afa unary = gallery::eqUnaryAfa();
  UnaryScan scan = unaryScan(unary, 2, /*exact=*/true);
  std::ostringstream out;
  writeScanCsv(out, scan);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,F_float,F_exact_num,F_exact_den");
  std::getline(in, line);
  CHECK(line.substr(0, 2) == "0,");
  CHECK(line.find(",1,1") != std::string::npos);
  std::getline(in, line);
  CHECK(line.substr(0, 2) == "1,");
  CHECK(line.find(",1,3") != std::string::npos);
}
