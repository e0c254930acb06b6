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

#include "afa/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "afa/core.hpp"

namespace afa::io {

using nlohmann::json;

namespace {

constexpr const char* kFormatTag = "afa-v1";
constexpr const char* kComment =
    "matrices are row-major grids; entry [i][j] is the weight flowing from state j into "
    "state i, so every column sums to 1";

// Dense grids stay the canonical encoding; matrices this large and this
// empty switch to the entry-list form to keep tensor-built automata on disk.
constexpr Index kSparseStateThreshold = 128;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError("field '" + where + "': " + what);
}

const json& field(const json& doc, const std::string& name) {
  auto it = doc.find(name);
  if (it == doc.end()) fail(name, "missing");
  return *it;
}

Rational number(const json& node, const std::string& where) {
  if (!node.is_string()) fail(where, "expected a number string");
  try {
    return parseRational(node.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

TransitionMatrix parseMatrix(const json& node, Index k, const std::string& where) {
  std::vector<Eigen::Triplet<Rational>> triplets;

  if (node.is_object()) {
    const json& entries = field(node, "entries");
    if (!entries.is_array()) fail(where + ".entries", "expected an array");
    triplets.reserve(entries.size());
    for (size_t e = 0; e < entries.size(); ++e) {
      const json& entry = entries[e];
      const std::string at = where + ".entries[" + std::to_string(e) + "]";
      if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
          !entry[1].is_number_integer()) {
        fail(at, "expected [row, column, value]");
      }
      Index i = entry[0].get<Index>();
      Index j = entry[1].get<Index>();
      if (i < 0 || i >= k || j < 0 || j >= k) fail(at, "index out of range");
      triplets.emplace_back(i, j, number(entry[2], at));
    }
  } else if (node.is_array()) {
    if (node.size() != static_cast<size_t>(k)) {
      fail(where, "expected " + std::to_string(k) + " rows, found " + std::to_string(node.size()));
    }
    for (Index i = 0; i < k; ++i) {
      const json& row = node[static_cast<size_t>(i)];
      const std::string at = where + "[" + std::to_string(i) + "]";
      if (!row.is_array() || row.size() != static_cast<size_t>(k)) {
        fail(at, "expected a row of " + std::to_string(k) + " entries");
      }
      for (Index j = 0; j < k; ++j) {
        Rational value = number(row[static_cast<size_t>(j)], at + "[" + std::to_string(j) + "]");
        if (value != 0) triplets.emplace_back(i, j, value);
      }
    }
  } else {
    fail(where, "expected a grid or an entry list");
  }

  TransitionMatrix m(k, k);
  m.setFromTriplets(triplets.begin(), triplets.end(),
                    [&where](const Rational&, const Rational&) -> Rational {
                      throw ParseError("field '" + where + "': duplicate entry");
                    });
  return m;
}

void writeMatrix(std::ostream& out, const TransitionMatrix& m) {
  const Index k = m.rows();
  if (k >= kSparseStateThreshold && 4 * m.nonZeros() < k * k) {
    out << "{\"entries\": [";
    bool first = true;
    for (Index j = 0; j < m.outerSize(); ++j) {
      for (TransitionMatrix::InnerIterator it(m, j); it; ++it) {
        if (!first) out << ", ";
        first = false;
        out << '[' << it.row() << ", " << it.col() << ", \"" << toString(it.value()) << "\"]";
      }
    }
    out << "]}";
    return;
  }

  // toDense would do, but a direct row walk avoids a k*k Rational buffer.
  std::vector<std::vector<std::string>> rows(static_cast<size_t>(k),
                                             std::vector<std::string>(static_cast<size_t>(k), "0"));
  for (Index j = 0; j < m.outerSize(); ++j) {
    for (TransitionMatrix::InnerIterator it(m, j); it; ++it) {
      rows[static_cast<size_t>(it.row())][static_cast<size_t>(it.col())] = toString(it.value());
    }
  }
  out << '[';
  for (Index i = 0; i < k; ++i) {
    if (i > 0) out << ",\n      ";
    out << '[';
    for (Index j = 0; j < k; ++j) {
      if (j > 0) out << ", ";
      out << '"' << rows[static_cast<size_t>(i)][static_cast<size_t>(j)] << '"';
    }
    out << ']';
  }
  out << ']';
}

}  // namespace

ValidationError::ValidationError(std::string message, std::vector<std::string> violationsIn)
    : Error(std::move(message)), violations_(std::move(violationsIn)) {}

Afa parseAfa(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be a JSON object");

  if (const json& format = field(doc, "format"); format != kFormatTag) {
    fail("format", "expected \"afa-v1\"");
  }

  Afa a;
  const json& kind = field(doc, "kind");
  if (kind == "affine") {
    a.kind = Kind::Affine;
  } else if (kind == "stochastic") {
    a.kind = Kind::Stochastic;
  } else {
    fail("kind", "expected \"affine\" or \"stochastic\"");
  }

  const json& alphabet = field(doc, "alphabet");
  if (!alphabet.is_array() || alphabet.empty()) fail("alphabet", "expected a nonempty array");
  for (const json& symbol : alphabet) {
    if (!symbol.is_string() || symbol.get<std::string>().size() != 1) {
      fail("alphabet", "symbols must be single-character strings");
    }
    char c = symbol.get<std::string>()[0];
    if (a.alphabet.find(c) != std::string::npos) {
      fail("alphabet", std::string("symbol '") + c + "' repeated");
    }
    a.alphabet.push_back(c);
  }

  const json& states = field(doc, "states");
  if (!states.is_number_integer() || states.get<Index>() < 1) {
    fail("states", "expected a positive integer");
  }
  const Index k = states.get<Index>();

  const json& initial = field(doc, "initial");
  if (!initial.is_array() || initial.size() != static_cast<size_t>(k)) {
    fail("initial", "expected " + std::to_string(k) + " entries");
  }
  a.initial = StateVector(k);
  for (Index i = 0; i < k; ++i) {
    a.initial(i) = number(initial[static_cast<size_t>(i)],
                          "initial[" + std::to_string(i) + "]");
  }

  const json& accepting = field(doc, "accepting");
  if (!accepting.is_array()) fail("accepting", "expected an array of state indices");
  std::vector<Index> indices;
  for (const json& index : accepting) {
    if (!index.is_number_integer()) fail("accepting", "indices must be integers");
    indices.push_back(index.get<Index>());
  }
  try {
    a.accepting = Projection(k, std::move(indices));
  } catch (const std::invalid_argument& e) {
    fail("accepting", e.what());
  }

  const json& transitions = field(doc, "transitions");
  if (!transitions.is_object()) fail("transitions", "expected an object keyed by symbol");
  for (char symbol : a.alphabet) {
    std::string key(1, symbol);
    auto it = transitions.find(key);
    if (it == transitions.end()) fail("transitions", "missing matrix for '" + key + "'");
    a.transitions.push_back(parseMatrix(*it, k, "transitions." + key));
  }
  if (transitions.size() != a.alphabet.size()) {
    fail("transitions", "matrices present for symbols outside the alphabet");
  }

  if (std::vector<std::string> violations = validate(a); !violations.empty()) {
    std::string message = "invalid automaton";
    for (const std::string& v : violations) message += "\n  " + v;
    throw ValidationError(message, std::move(violations));
  }
  return a;
}

std::string serializeAfa(const Afa& a) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"format\": \"" << kFormatTag << "\",\n";
  out << "  \"comment\": \"" << kComment << "\",\n";
  out << "  \"kind\": \"" << (a.kind == Kind::Stochastic ? "stochastic" : "affine") << "\",\n";

  out << "  \"alphabet\": [";
  for (size_t s = 0; s < a.alphabet.size(); ++s) {
    if (s > 0) out << ", ";
    out << '"' << a.alphabet[s] << '"';
  }
  out << "],\n";

  out << "  \"states\": " << a.states() << ",\n";

  out << "  \"initial\": [";
  for (Index i = 0; i < a.states(); ++i) {
    if (i > 0) out << ", ";
    out << '"' << toString(a.initial(i)) << '"';
  }
  out << "],\n";

  out << "  \"accepting\": [";
  for (size_t i = 0; i < a.accepting.accepting.size(); ++i) {
    if (i > 0) out << ", ";
    out << a.accepting.accepting[i];
  }
  out << "],\n";

  out << "  \"transitions\": {\n";
  for (size_t s = 0; s < a.alphabet.size(); ++s) {
    if (s > 0) out << ",\n";
    out << "    \"" << a.alphabet[s] << "\": ";
    writeMatrix(out, a.transitions[s]);
  }
  out << "\n  }\n}\n";
  return out.str();
}

Afa loadAfa(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseAfa(buffer.str());
}

void saveAfa(const Afa& a, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << serializeAfa(a);
  if (!out.flush()) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace afa::io
