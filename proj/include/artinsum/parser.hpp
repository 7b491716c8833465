#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "artinsum/polynomial.hpp"

namespace artinsum {

/// A parsed presentation: the ring and the ideal generators (zeros dropped).
struct Presentation {
  RingPtr ring;
  std::vector<Polynomial> generators;
};

/// Grammar:
///   field QQ | GF(p) ;
///   vars name name ... ;
///   ideal poly, poly, ... ;
/// with '#' comments to end of line. Throws ParseError with line and column.
Presentation parse_presentation(std::string_view text);

/// Parses a single polynomial expression in the given ring.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

/// Canonical text form accepted by parse_presentation.
std::string format_presentation(const RingPtr& ring, const std::vector<Polynomial>& generators);

}  // namespace artinsum
