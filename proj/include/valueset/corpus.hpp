#pragma once

#include <array>
#include <string_view>

namespace valueset {

struct CorpusEntry {
  std::string_view text;
  // Morse-ness is recorded by hand, not computed.
  bool morse;
};

// Polynomials every corpus-wide check runs over.
inline constexpr std::array<CorpusEntry, 7> kCorpus{{
    {"x", false},
    {"x^2", true},
    {"x^3", false},
    {"x^3+x", true},
    {"x^3-3x", true},
    {"x^4-2x^2", false},
    {"x^4+x", true},
}};

}  // namespace valueset
