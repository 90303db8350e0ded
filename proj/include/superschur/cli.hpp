#pragma once

#include "superschur/qfield.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>

namespace superschur {

enum class Mode { Classical, Quantum };
enum class Format { Text, Json, Csv };

struct RunConfig {
  std::string command;
  int m = 1;
  int n = 1;
  int d = 1;
  Mode mode = Mode::Classical;
  std::string suite = "all";
  Format format = Format::Text;
  int max_power = 2;
  Rational q0 = 2;
  bool allow_large = false;
  std::string input;
  std::string gen;
};

/// Tensor spaces above this dimension need --allow-large.
inline constexpr std::size_t kDefaultSizeLimit = 4096;
/// dim computes the commutant only up to this tensor dimension.
inline constexpr std::size_t kCommutantLimit = 256;

/// Exit codes: 0 success, 1 mathematical failure (witness on `out`), 2 usage
/// error (message on `err`).
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace superschur
