#pragma once

// Executable checks of the supporting lemmas, grouped by module. Each lemma
// reports how many cases it ran and how many failed; a case that throws
// counts as a failure.

#include <cstdint>
#include <string>
#include <vector>

namespace tmeasure {

struct LemmaResult {
  std::string suite;
  std::string name;
  unsigned long cases = 0;
  unsigned long failures = 0;
  double seconds = 0;
  std::string note;  // first failure, if any
  bool passed() const { return failures == 0 && cases > 0; }
};

struct SuiteOptions {
  unsigned long trials = 1000;  // randomized zero-lemma configurations
  std::uint64_t seed = 20240917;
};

/// numtheory, feldman, hermite_pade, interp, zerolemma, analytic, asymptotics.
const std::vector<std::string>& suite_names();

/// One suite by name, or every suite for "all". Throws std::invalid_argument
/// on an unknown name.
std::vector<LemmaResult> run_suite(const std::string& name, const SuiteOptions& options = {});

/// One fixed parameter set with eps < E^{-KL}, used by the analytic suite.
struct SmallEpsCase {
  std::string alpha;
  std::string beta;
  unsigned long K;
  unsigned long L;
  long E_num;
  long E_den;
};
const std::vector<SmallEpsCase>& small_eps_cases();

}  // namespace tmeasure
