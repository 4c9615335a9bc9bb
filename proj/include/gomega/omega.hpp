#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gomega {

/// An eventually periodic sequence over {0,1,2}: a finite preperiod followed
/// by a nonempty period repeated forever. Symbols are indexed from 1.
class OmegaWord {
 public:
  /// The constant word 000...
  OmegaWord() : period_{0} {}
  OmegaWord(std::vector<std::uint8_t> preperiod,
            std::vector<std::uint8_t> period);

  /// Parses "PRE:PERIOD", e.g. ":012" or "0001:2".
  static OmegaWord parse(std::string_view text);

  std::uint8_t symbol(std::size_t n) const;

  /// At least two symbols occur infinitely often.
  bool in_omega2() const;

  /// The sequence with its first symbol removed.
  OmegaWord shifted() const;

  const std::vector<std::uint8_t>& preperiod() const { return preperiod_; }
  const std::vector<std::uint8_t>& period() const { return period_; }

  std::string to_string() const;

  friend bool operator==(const OmegaWord&, const OmegaWord&) = default;

 private:
  std::vector<std::uint8_t> preperiod_;
  std::vector<std::uint8_t> period_;
};

enum class OmegaTag { generic, almost_constant, constant };

/// Prefix shape of a non-constant word: 1) x..xy, 2) xy..yx, 3) xy..yz with
/// the shown prefix of length n > 2 and (x, y, z) a permutation of {0,1,2}.
struct OmegaForm {
  int type = 0;
  std::array<std::uint8_t, 3> xyz{};
  std::size_t n = 0;
};

struct OmegaClassification {
  bool in_omega2 = false;
  OmegaTag tag = OmegaTag::generic;
  /// Present whenever one of the three prefix shapes occurs (this includes
  /// some almost-constant words, e.g. 0001222...).
  std::optional<OmegaForm> form;
};

OmegaClassification classify_omega(const OmegaWord& w);

/// First `count` indices n for which the generator row is the swap: u for b
/// (symbol in {0,1}), v for c ({0,2}), delta for d ({1,2}). `complete` is
/// false when fewer than `count` indices exist within the scanned horizon
/// (the symbol never recurs in the period).
struct IndexSequence {
  std::vector<std::size_t> indices;
  bool complete = true;
};

struct SigmaSequences {
  IndexSequence u;
  IndexSequence v;
  IndexSequence delta;
  std::size_t horizon = 0;
};

SigmaSequences sigma_sequences(const OmegaWord& w, std::size_t count);

/// The generator letter identified with a symbol: 0 -> d, 1 -> c, 2 -> b.
char letter_of_symbol(std::uint8_t symbol);

}  // namespace gomega
