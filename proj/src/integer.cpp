#include "nashtoric/integer.hpp"

#include <cctype>

#include "nashtoric/error.hpp"

namespace nashtoric {

std::size_t digit_count(const Int& v) {
  if (v == 0) return 1;
  Int a = abs(v);
  return a.str().size();
}

Int parse_int(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) fail(errc::bad_input, "expected an integer");
  Int value = 0;
  for (; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (!std::isdigit(c)) {
      fail(errc::bad_input,
           "invalid integer '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Int(-value) : value;
}

std::string to_string(const Int& v) { return v.str(); }

}  // namespace nashtoric
