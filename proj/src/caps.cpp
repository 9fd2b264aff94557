#include "invsemi/caps.hpp"

#include <cstdlib>
#include <sstream>

#include "invsemi/errors.hpp"

namespace invsemi {

Caps Caps::parse(const std::string& text, Caps base) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("cap entry without '=': " + item);
    std::string key = item.substr(0, eq);
    std::size_t value = 0;
    try {
      long long v = std::stoll(item.substr(eq + 1));
      if (v <= 0) throw InvalidArgument("cap '" + key + "' must be positive");
      value = static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
      throw InvalidArgument("cap '" + key + "' has a non-integer value");
    }
    if (key == "closure") base.closure = value;
    else if (key == "ground_set") base.ground_set = value;
    else if (key == "cover") base.cover = value;
    else if (key == "oracle") base.oracle = value;
    else if (key == "arrows") base.arrows = value;
    else if (key == "ideal_dim") base.ideal_dim = value;
    else if (key == "probe_budget") base.probe_budget = value;
    else if (key == "depth") base.depth = value;
    else throw InvalidArgument("unknown cap '" + key + "'");
  }
  return base;
}

Caps Caps::parse(const std::string& text) { return parse(text, Caps{}); }

Caps Caps::from_environment() {
  const char* env = std::getenv("INVSEMI_CAPS");
  return env ? parse(env) : Caps{};
}

}  // namespace invsemi
