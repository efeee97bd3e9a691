#pragma once

#include <string>
#include <vector>

#include "diffset/implication.hpp"

namespace diffset {

// Named property suites runnable from the command line. Structural names run
// the anchored-collection sampler; the remaining ones have dedicated drivers.
std::vector<std::string> lemma_suite_names();

LemmaReport run_lemma_suite(const std::string& name, int k, int samples, std::uint64_t seed,
                            int jobs = 1);

}  // namespace diffset
