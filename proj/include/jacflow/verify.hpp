#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "jacflow/io.hpp"

namespace jacflow::verify {

enum class Outcome { Pass, Fail, HypothesisUnmet, ScaleExceeded };

std::string to_string(Outcome o);

struct VerificationCase {
  std::string id;
  std::string inputs;     // what was built, including generator seeds
  std::string predicate;  // what was asserted
  Outcome outcome = Outcome::Fail;
  std::string diagnostics;
  io::Json details = io::Json::object();
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t count = 0;  // 0 selects the suite's default
  std::size_t scale_cap = kDefaultEnumerationEdgeCap;
};

struct SuiteResult {
  std::string suite;
  SuiteOptions options;
  std::vector<VerificationCase> cases;
  std::vector<std::string> notes;
  double seconds = 0.0;

  bool passed() const;
  std::size_t count(Outcome o) const;
};

/// p1, pfold, main, cayley-rank, example72, semiedge-null, local-group, covering.
const std::vector<std::string>& suite_names();
/// Default instance count for the randomised suites, 0 for fixed ones.
std::size_t default_count(const std::string& suite);

/// Throws Parse for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

/// Deterministic: contains no timings.
io::Json to_json(const SuiteResult& r);
std::string summary(const SuiteResult& r);

/// Brute-force count of invertible 2x2 matrices over Z_p.
std::size_t count_invertible_2x2(unsigned p);

}  // namespace jacflow::verify
