#pragma once

#include <stdexcept>
#include <string>

namespace dunwoody {

/// Parameter or input outside its documented domain.
struct domain_error : std::invalid_argument {
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A word whose letters fall outside 1..rank in absolute value.
struct malformed_word_error : domain_error {
  explicit malformed_word_error(const std::string& what) : domain_error(what) {}
};

/// A presentation with the wrong relator count for the requested operation.
struct shape_error : domain_error {
  explicit shape_error(const std::string& what) : domain_error(what) {}
};

/// Raised when an operation needs a genuine Heegaard diagram and the input is not one.
struct not_heegaard_error : std::runtime_error {
  explicit not_heegaard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dunwoody
