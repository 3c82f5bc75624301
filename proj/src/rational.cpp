#include "fracdom/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace fracdom {

std::string to_fraction_string(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

Rational fraction_from_string(const std::string& text) {
  auto fail = [&]() -> void {
    throw std::invalid_argument("not a fraction: '" + text + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) fail();
  std::string num = text.substr(0, i);
  std::string den = "1";
  if (i < text.size()) {
    if (text[i] != '/') fail();
    std::size_t den_begin = ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) fail();
    den = text.substr(den_begin);
  }
  BigInt d(den);
  if (d == 0) fail();
  return Rational(BigInt(num), d);
}

}  // namespace fracdom
