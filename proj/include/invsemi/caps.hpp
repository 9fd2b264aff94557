#pragma once

#include <cstddef>
#include <string>

namespace invsemi {

/// Size guards for the exponential or open-ended searches.
struct Caps {
  std::size_t closure = 20000;     // partial-bijection closure size
  std::size_t ground_set = 64;     // partial-bijection ground set
  std::size_t cover = 16;          // |down(e)| for minimal-cover search
  std::size_t oracle = 12;         // congruence enumeration
  std::size_t arrows = 12;         // bisection-monoid enumeration
  std::size_t ideal_dim = 4096;    // ideal closure dimension
  std::size_t probe_budget = 256;  // hull singularity probes
  std::size_t depth = 6;           // word depth for self-similar searches

  /// Parses "key=value,key=value" (keys as the member names). Throws
  /// InvalidArgument on unknown keys or non-positive values.
  static Caps parse(const std::string& text);
  static Caps parse(const std::string& text, Caps base);

  /// Defaults overridden by the INVSEMI_CAPS environment variable, if set.
  static Caps from_environment();
};

}  // namespace invsemi
