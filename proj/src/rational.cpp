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

#include "afa/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace afa {

namespace {

bool isInteger(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void fail(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational makeRational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parseRational(std::string_view text) {
  if (text.empty()) fail(text);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!isInteger(num) || !isInteger(den) || den.front() == '-' || den.front() == '+') fail(text);
    // explicit base 10: the default base 0 would read leading zeros as octal
    Rational r(std::string(num) + "/" + std::string(den), 10);
    if (r.get_den() == 0) fail(text);
    r.canonicalize();
    return r;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (!isInteger(whole) || frac.empty() || !isInteger(frac) ||
        !std::isdigit(static_cast<unsigned char>(frac.front()))) {
      fail(text);
    }
    bool negative = whole.front() == '-';
    if (whole.front() == '+' || whole.front() == '-') whole.remove_prefix(1);
    mpz_class scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class digits = mpz_class(std::string(whole) + std::string(frac), 10);
    Rational r(digits, scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  if (!isInteger(text)) fail(text);
  return Rational(mpz_class(std::string(text), 10));
}

std::string toString(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double toDouble(const Rational& value) { return value.get_d(); }

}  // namespace afa
