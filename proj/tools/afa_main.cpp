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

#include <CLI11.hpp>

#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "afa/analysis.hpp"
#include "afa/combinators.hpp"
#include "afa/core.hpp"
#include "afa/gallery.hpp"
#include "afa/io.hpp"
#include "afa/normal_forms.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitRejected = 1;  // validation failure or member -> false
constexpr int kExitUsage = 2;

std::string decimal(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << value;
  return out.str();
}

std::string decimal(const afa::Rational& value) { return decimal(afa::toDouble(value)); }

void printScan(const afa::analysis::UnaryScan& scan, bool csv) {
  if (csv) {
    afa::analysis::writeScanCsv(std::cout, scan);
    return;
  }
  for (const auto& sample : scan.samples) {
    std::cout << "n=" << sample.n << " F=" << decimal(sample.value);
    if (sample.exact) std::cout << " exact=" << afa::toString(*sample.exact);
    std::cout << "\n";
  }
}

struct Options {
  std::string file;
  std::string fileB;
  std::string out;
  std::string word;
  std::string cutpoint = "1/2";
  std::string alpha = "1/2";
  std::string from;
  std::string to;
  std::string galleryName;
  std::string language;
  std::string symbol;
  std::vector<long> coefficients;
  int rounds = 1;
  long maxN = 0;
  long progH = 0;
  long progQ = 1;
  long progCount = 1;
  int maxLen = 6;
  long maxDenominator = 64;
  double tol = 1e-9;
  bool exact = false;
  bool csv = false;
};

int runValidate(const Options& opt) {
  afa::Afa a;
  try {
    a = afa::io::loadAfa(opt.file);
  } catch (const afa::io::ValidationError& e) {
    for (const std::string& violation : e.violations()) std::cout << violation << "\n";
    return kExitRejected;
  }
  std::cout << "valid\n";
  return kExitSuccess;
}

int runEval(const Options& opt) {
  afa::Rational value = afa::acceptValue(afa::io::loadAfa(opt.file), opt.word);
  std::cout << afa::toString(value) << " (" << decimal(value) << ")\n";
  return kExitSuccess;
}

int runMember(const Options& opt) {
  bool accepted = afa::member(afa::io::loadAfa(opt.file), opt.word,
                              afa::parseRational(opt.cutpoint));
  std::cout << (accepted ? "true" : "false") << "\n";
  return accepted ? kExitSuccess : kExitRejected;
}

int runAnalyzeDensity(const Options& opt) {
  std::function<bool(long)> membership;
  if (opt.language == "prime") {
    auto sieve = std::make_shared<std::vector<bool>>(afa::analysis::primeSieve(opt.maxN));
    membership = [sieve](long n) { return n >= 0 && (*sieve)[static_cast<size_t>(n)]; };
  } else if (opt.language == "poly") {
    membership = afa::analysis::polyLanguage(opt.coefficients, opt.maxN);
  } else {
    throw CLI::ValidationError("--lang", "expected prime or poly");
  }
  long members = 0;
  for (long n = 0; n <= opt.maxN; ++n) {
    if (membership(n)) ++members;
  }
  auto report = afa::analysis::lowerDensity(membership, opt.maxN);
  std::cout << "members=" << members << " total=" << (opt.maxN + 1) << " ratio="
            << decimal(report.ratioAtEnd) << " min_ratio=" << decimal(report.minRatio) << "\n";
  return kExitSuccess;
}

int runAnalyzeSpectrum(const Options& opt) {
  afa::Afa a = afa::io::loadAfa(opt.file);
  if (opt.symbol.size() != 1) throw CLI::ValidationError("--symbol", "expected one character");
  auto entries = afa::analysis::spectrum(a.matrixFor(opt.symbol[0]));
  for (const auto& entry : entries) {
    std::cout << "lambda=" << decimal(entry.value.real())
              << (entry.value.imag() < 0 ? "-" : "+") << decimal(std::abs(entry.value.imag()))
              << "i modulus=" << decimal(entry.modulus) << " angle=" << decimal(entry.angle);
    if (auto frac = afa::analysis::rationalAngleDetect(entry.angle, opt.maxDenominator, opt.tol)) {
      std::cout << " angle~=" << frac->first << "/" << frac->second;
    }
    std::cout << "\n";
  }
  return kExitSuccess;
}

int runAnalyzeGap(const Options& opt) {
  afa::Afa a = afa::io::loadAfa(opt.file);
  auto report = afa::analysis::isolationGap(a, afa::parseRational(opt.cutpoint),
                                            afa::allWords(a.alphabet, opt.maxLen));
  if (report.minAccepted) {
    std::cout << "min_accepted=" << afa::toString(*report.minAccepted) << "\n";
  } else {
    std::cout << "no accepted words in sample (one-sided)\n";
  }
  if (report.maxRejected) {
    std::cout << "max_rejected=" << afa::toString(*report.maxRejected) << "\n";
  } else {
    std::cout << "no rejected words in sample (one-sided)\n";
  }
  if (report.gap) {
    std::cout << "gap=" << afa::toString(*report.gap) << " (" << decimal(*report.gap) << ")\n";
  }
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic affine finite automata toolkit"};
  app.require_subcommand(1);
  Options opt;
  std::function<int()> action;

  auto* validateCmd = app.add_subcommand("validate", "Check an automaton file");
  validateCmd->add_option("file", opt.file, "automaton file")->required();
  validateCmd->callback([&] { action = [&] { return runValidate(opt); }; });

  auto* evalCmd = app.add_subcommand("eval", "Exact acceptance value of a word");
  evalCmd->add_option("file", opt.file)->required();
  evalCmd->add_option("--word", opt.word, "input word (default: empty)");
  evalCmd->callback([&] { action = [&] { return runEval(opt); }; });

  auto* memberCmd = app.add_subcommand("member", "Strict cutpoint membership");
  memberCmd->add_option("file", opt.file)->required();
  memberCmd->add_option("--word", opt.word);
  memberCmd->add_option("--cutpoint", opt.cutpoint, "cutpoint as P/Q (default 1/2)");
  memberCmd->callback([&] { action = [&] { return runMember(opt); }; });

  auto* composeCmd = app.add_subcommand("compose", "Build a new automaton from existing ones");
  composeCmd->require_subcommand(1);
  {
    auto binary = [&](const char* name, const char* help, auto make) {
      auto* cmd = composeCmd->add_subcommand(name, help);
      cmd->add_option("a", opt.file)->required();
      cmd->add_option("b", opt.fileB)->required();
      cmd->add_option("-o,--out", opt.out)->required();
      cmd->callback([&, make] {
        action = [&, make] {
          afa::io::saveAfa(make(afa::io::loadAfa(opt.file), afa::io::loadAfa(opt.fileB)), opt.out);
          return kExitSuccess;
        };
      });
      return cmd;
    };

    binary("tensor", "Tensor product: value f*g", [](const afa::Afa& a, const afa::Afa& b) {
      return afa::tensorProduct(a, b);
    });
    auto* convexCmd = binary("convex", "Convex sum: value alpha*f + (1-alpha)*g",
                             [&opt](const afa::Afa& a, const afa::Afa& b) {
                               afa::Rational alpha = afa::parseRational(opt.alpha);
                               return afa::convexSum(a, b, afa::MixWeights(alpha, 1 - alpha));
                             });
    convexCmd->add_option("--alpha", opt.alpha, "weight of the first automaton");
    binary("union", "Bounded-error union (inputs at error <= 1/4)",
           [](const afa::Afa& a, const afa::Afa& b) { return afa::unionAut(a, b); });
    binary("intersect", "Bounded-error intersection (inputs at error <= 1/4)",
           [](const afa::Afa& a, const afa::Afa& b) { return afa::intersectAut(a, b); });

    auto* complementCmd = composeCmd->add_subcommand("complement", "Value 1-f");
    complementCmd->add_option("a", opt.file)->required();
    complementCmd->add_option("-o,--out", opt.out)->required();
    complementCmd->callback([&] {
      action = [&] {
        afa::io::saveAfa(afa::complement(afa::io::loadAfa(opt.file)), opt.out);
        return kExitSuccess;
      };
    });

    auto* amplifyCmd = composeCmd->add_subcommand("amplify", "Iterated majority vote");
    amplifyCmd->add_option("a", opt.file)->required();
    amplifyCmd->add_option("--rounds", opt.rounds, "amplification rounds (default 1)");
    amplifyCmd->add_option("-o,--out", opt.out)->required();
    amplifyCmd->callback([&] {
      action = [&] {
        afa::io::saveAfa(afa::amplifyRounds(afa::io::loadAfa(opt.file), opt.rounds), opt.out);
        return kExitSuccess;
      };
    });

    auto* shiftCmd = composeCmd->add_subcommand("shift", "Move the cutpoint");
    shiftCmd->add_option("a", opt.file)->required();
    shiftCmd->add_option("--from", opt.from, "current cutpoint P/Q")->required();
    shiftCmd->add_option("--to", opt.to, "target cutpoint P/Q")->required();
    shiftCmd->add_option("-o,--out", opt.out)->required();
    shiftCmd->callback([&] {
      action = [&] {
        afa::io::saveAfa(afa::shiftCutpoint(afa::io::loadAfa(opt.file),
                                            afa::parseRational(opt.from),
                                            afa::parseRational(opt.to)),
                         opt.out);
        return kExitSuccess;
      };
    });
  }

  auto* normalizeCmd = app.add_subcommand("normalize", "Equivalent-form transformations");
  normalizeCmd->require_subcommand(1);
  for (const char* form : {"canonical", "bounded", "full"}) {
    auto* cmd = normalizeCmd->add_subcommand(
        form, form == std::string("canonical") ? "Initial state (1,0,...,0)"
              : form == std::string("bounded") ? "State entries in [-1,1] at cutpoint 1/2"
                                               : "Shift to 1/2, canonical, then bounded");
    cmd->add_option("file", opt.file)->required();
    cmd->add_option("--cutpoint", opt.cutpoint, "cutpoint P/Q (used by 'full')");
    cmd->add_option("-o,--out", opt.out)->required();
    std::string name = form;
    cmd->callback([&, name] {
      action = [&, name] {
        afa::Afa a = afa::io::loadAfa(opt.file);
        afa::Afa result = name == "canonical" ? afa::canonicalInitial(a)
                          : name == "bounded" ? afa::boundedForm(a)
                                              : afa::normalizePipeline(
                                                    a, afa::parseRational(opt.cutpoint));
        afa::io::saveAfa(result, opt.out);
        return kExitSuccess;
      };
    });
  }

  auto* galleryCmd = app.add_subcommand("gallery", "Export a named witness automaton");
  galleryCmd->add_option("name", opt.galleryName, "constant|eq|eq3|dfa-parity")->required();
  galleryCmd->add_option("--alpha", opt.alpha, "value of the constant automaton");
  galleryCmd->add_option("-o,--out", opt.out)->required();
  galleryCmd->callback([&] {
    action = [&] {
      afa::io::saveAfa(afa::gallery::byName(opt.galleryName, afa::parseRational(opt.alpha)),
                       opt.out);
      return kExitSuccess;
    };
  });

  auto* analyzeCmd = app.add_subcommand("analyze", "Non-affineness diagnostics");
  analyzeCmd->require_subcommand(1);
  {
    auto* densityCmd = analyzeCmd->add_subcommand("density", "Lower-density proxy of a unary language");
    densityCmd->add_option("--lang", opt.language, "prime|poly")->required();
    densityCmd->add_option("--coeffs", opt.coefficients,
                           "polynomial coefficients, constant term first");
    densityCmd->add_option("--max", opt.maxN, "largest word length")->required();
    densityCmd->callback([&] { action = [&] { return runAnalyzeDensity(opt); }; });

    auto* scanCmd = analyzeCmd->add_subcommand("scan", "Unary value sequence F(n)");
    scanCmd->add_option("file", opt.file)->required();
    scanCmd->add_option("--max-n", opt.maxN)->required();
    scanCmd->add_flag("--exact", opt.exact, "keep exact rationals");
    scanCmd->add_flag("--csv", opt.csv, "emit CSV instead of text");
    scanCmd->callback([&] {
      action = [&] {
        printScan(afa::analysis::unaryScan(afa::io::loadAfa(opt.file), opt.maxN, opt.exact),
                  opt.csv);
        return kExitSuccess;
      };
    });

    auto* progressionCmd = analyzeCmd->add_subcommand("progression", "F(h + i*Q) samples");
    // the default -h help shorthand collides with the --h offset option
    progressionCmd->set_help_flag("--help", "print help");
    progressionCmd->add_option("file", opt.file)->required();
    progressionCmd->add_option("--h", opt.progH, "offset (default 0)");
    progressionCmd->add_option("--q", opt.progQ, "step (default 1)");
    progressionCmd->add_option("--count", opt.progCount)->required();
    progressionCmd->add_flag("--exact", opt.exact);
    progressionCmd->add_flag("--csv", opt.csv);
    progressionCmd->callback([&] {
      action = [&] {
        afa::analysis::ProgressionSpec spec(opt.progH, opt.progQ, opt.progCount);
        printScan(afa::analysis::progressionScan(afa::io::loadAfa(opt.file), spec, opt.exact),
                  opt.csv);
        return kExitSuccess;
      };
    });

    auto* spectrumCmd = analyzeCmd->add_subcommand("spectrum", "Eigenvalues of one transition matrix");
    spectrumCmd->add_option("file", opt.file)->required();
    spectrumCmd->add_option("--symbol", opt.symbol)->required();
    spectrumCmd->add_option("--max-den", opt.maxDenominator, "rational-angle search bound");
    spectrumCmd->add_option("--tol", opt.tol, "rational-angle tolerance");
    spectrumCmd->callback([&] { action = [&] { return runAnalyzeSpectrum(opt); }; });

    auto* gapCmd = analyzeCmd->add_subcommand("gap", "Isolation gap over all short words");
    gapCmd->add_option("file", opt.file)->required();
    gapCmd->add_option("--cutpoint", opt.cutpoint);
    gapCmd->add_option("--max-len", opt.maxLen, "enumerate words up to this length");
    gapCmd->callback([&] { action = [&] { return runAnalyzeGap(opt); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const afa::io::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitRejected;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
