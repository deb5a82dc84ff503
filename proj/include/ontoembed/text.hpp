#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ontoembed {

// Lowercase word tokens: the input is split on whitespace/punctuation, each
// chunk is split at camel-case boundaries, everything is lowercased, and any
// token still containing a non-letter character is dropped.
//   "MilkAndYogurt" -> [milk, and, yogurt]
//   "VitaminC_100"  -> [vitamin, c]
//   "Vitamin C12"   -> [vitamin]
std::vector<std::string> tokenize(std::string_view text);

// Camel-case split of a single chunk (no lowercasing, no filtering).
std::vector<std::string> camel_split(std::string_view word);

}  // namespace ontoembed
