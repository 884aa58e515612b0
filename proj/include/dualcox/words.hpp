#pragma once

#include <string_view>

#include "dualcox/coxeter.hpp"

namespace dualcox {

// Word syntax shared by the CLI and tests. Letters are separated by spaces,
// '*' or '.':
//   3, s3          simple generator s_3
//   s, t, u, v     simple generators 0 to 3 (so "s t s t" in G2)
//   t7             reflection number 7
//   (s1 s2 s1)     the product of a parenthesized subword, itself one letter
// Errors are UsageError with the byte position of the offending token.

/// Product of all letters.
Element parse_element(const GroupPtr& g, std::string_view text);

/// One reflection per top-level letter; a parenthesized letter must multiply
/// out to a reflection.
ReflWord parse_reflection_word(const GroupPtr& g, std::string_view text);

}  // namespace dualcox
