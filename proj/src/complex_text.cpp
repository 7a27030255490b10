#include "koebe/complex_text.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

#include "koebe/error.hpp"

namespace koebe {

namespace {

[[noreturn]] void bad(std::string_view text) {
  throw UsageError("cannot parse complex number '" + std::string(text) + "'");
}

double parse_real(std::string_view part, std::string_view whole) {
  bool negative = false;
  if (!part.empty() && (part.front() == '+' || part.front() == '-')) {
    negative = part.front() == '-';
    part.remove_prefix(1);
  }
  // from_chars would accept these; the wire format does not.
  if (part.empty() || part.front() == '+' || part.front() == '-' ||
      !(std::isdigit(static_cast<unsigned char>(part.front())) || part.front() == '.'))
    bad(whole);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
  if (ec != std::errc{} || ptr != part.data() + part.size() || !std::isfinite(v)) bad(whole);
  return negative ? -v : v;
}

// Coefficient in front of 'i': empty or a bare sign means 1.
double parse_imag(std::string_view part, std::string_view whole) {
  if (part.empty() || part == "+") return 1.0;
  if (part == "-") return -1.0;
  return parse_real(part, whole);
}

}  // namespace

Complex parse_complex(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) bad(text);
  if (text.back() != 'i') return {parse_real(text, text), 0.0};

  const std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_imag(body, text)};
  return {parse_real(body.substr(0, split), text), parse_imag(body.substr(split), text)};
}

std::string format_complex(Complex z) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, z.real());
  std::string out(buf, r.ptr);
  const double im = z.imag();
  out += std::signbit(im) ? '-' : '+';
  r = std::to_chars(buf, buf + sizeof buf, std::abs(im));
  out.append(buf, r.ptr);
  out += 'i';
  return out;
}

}  // namespace koebe
