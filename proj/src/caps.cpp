#include "heisenspec/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "heisenspec/errors.hpp"

namespace heisenspec {

namespace {

SizeCaps load_caps() {
  SizeCaps c;
  if (const char* env = std::getenv("HEISENSPEC_CAP")) {
    std::string_view text(env);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) {
      c.dense_dim = value;
    }
  }
  return c;
}

}  // namespace

const SizeCaps& caps() {
  static const SizeCaps instance = load_caps();
  return instance;
}

void require_within(std::uint64_t value, std::uint64_t limit, std::string_view what) {
  if (value > limit) {
    throw SizeCapError(std::string(what) + " of size " + std::to_string(value) +
                       " exceeds the cap of " + std::to_string(limit));
  }
}

}  // namespace heisenspec
