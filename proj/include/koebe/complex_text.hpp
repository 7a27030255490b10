#pragma once

#include <string>
#include <string_view>

#include "koebe/poly.hpp"

namespace koebe {

/// Parses "a", "bi", "a+bi", "a-bi", "i", "-i", "1e-3-2.5e+2i". Locale
/// independent; no spaces inside the literal. Throws UsageError on anything
/// else, including non-finite parts.
Complex parse_complex(std::string_view text);

/// Shortest round-trip text in the same "a+bi" form.
std::string format_complex(Complex z);

}  // namespace koebe
