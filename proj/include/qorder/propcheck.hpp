#pragma once

#include <cstdint>

#include "qorder/base_change.hpp"
#include "qorder/enumerate.hpp"
#include "qorder/morita.hpp"

namespace qorder {

struct SuiteReport {
  std::string name;
  bool passed = true;
  int checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

/// The property suites behind `prop-check`. Each runs an exhaustive or
/// seeded sweep at desk scale and reports every violation it finds.
SuiteReport suite_lemma4();
SuiteReport suite_lemma13();
SuiteReport suite_prop15();
SuiteReport suite_prop16();
SuiteReport suite_prop17();
SuiteReport suite_prop18(std::uint64_t seed);
SuiteReport suite_prop19(std::uint64_t seed);
SuiteReport suite_prop23(std::uint64_t seed);

std::vector<std::string> suite_names();
/// Dispatch by suite id; throws input_error for unknown ids.
SuiteReport run_suite(const std::string& id, std::uint64_t seed);

/// Shared corpora: every totally regular structure with at most max_objects
/// objects over the named fixture, cached per base within a process.
const std::vector<EnrichedStructure>& trs_corpus(const std::string& base, int max_objects);

}  // namespace qorder
