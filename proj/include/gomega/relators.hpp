#pragma once

#include <cstdint>
#include <vector>

#include "gomega/omega.hpp"
#include "gomega/tree.hpp"

namespace gomega {

/// a^2, b^2, c^2, d^2, bcd.
std::vector<GeneratorWord> standard_relations();

/// The relator family U_k of the presentation of G_omega, with symbols
/// identified with letters 0 -> d, 1 -> c, 2 -> b. U_1 is read off the
/// prefix shape of omega; U_{k+1}(omega) is the image of U_k(omega') under the
/// substitution that fixes b, c, d and sends a to a y a, y being the type-y
/// letter of omega.
/// Throws AlmostConstant when omega (or a shift needed by the recursion) has
/// no prefix shape; ResourceLimit when the type-1 family would exceed
/// `max_letters` letters in total.
std::vector<GeneratorWord> relators_U(const OmegaWord& w, unsigned k,
                                      std::size_t max_letters = 50'000'000);

/// Image of a word in the abelianization Z2 x (Z2 x Z2) of
/// <a,b,c,d | a^2, b^2, c^2, d^2, bcd>: the parity of a together with the
/// Klein-group element of the b, c, d letters (b = 1, c = 2, d = b + c = 3,
/// added as bit vectors).
struct AbelianClass {
  std::uint8_t a_parity = 0;
  std::uint8_t klein = 0;

  bool in_commutator_subgroup() const { return a_parity == 0 && klein == 0; }
  friend AbelianClass operator+(AbelianClass lhs, AbelianClass rhs) {
    return {static_cast<std::uint8_t>(lhs.a_parity ^ rhs.a_parity),
            static_cast<std::uint8_t>(lhs.klein ^ rhs.klein)};
  }
  friend bool operator==(AbelianClass, AbelianClass) = default;
};

AbelianClass abelianization_class(const GeneratorWord& word);

}  // namespace gomega
