#pragma once

#include <stdexcept>
#include <string>

namespace diffset {

enum class errc {
  identity_satisfied,
  index_out_of_range,
  dimension_mismatch,
  empty_index_set,
  too_many_subsets,
  empty_set,
  not_a_solution,
  retry_limit_exceeded,
  range_error,
  budget_exceeded,
  insufficient_density,
  not_found,
  degenerate_cube,
  divisibility_error,
  anchor_missing,
  not_independent,
  not_two_good,
  not_a_path,
  degenerate_input,
  not_valid,
  unknown_lemma,
  parse_error,
  internal_invariant,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw error(code, message);
}

inline void require(bool condition, errc code, const std::string& message) {
  if (!condition) raise(code, message);
}

}  // namespace diffset
