#pragma once
// Text format for expansion data:
//   field: Q            (or Fp:<p>)
//   free h=2 coeffs k=1: 0, 1/2
//   power h=3
//   terminal: divisorial            (or irrational cf=[1;(2)], or curve)
// Blank lines and full-line # comments are ignored on input; serialization is
// canonical and round-trips bit for bit.

#include <string>

#include "planeval/hn/expansion.hpp"

namespace planeval {

HNExpansion parse_hn(const std::string& text);
HNExpansion load_hn(const std::string& path);
std::string serialize_hn(const HNExpansion& hn);

}  // namespace planeval
