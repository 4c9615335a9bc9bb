#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gomega/kernels.hpp"
#include "gomega/omega.hpp"

namespace gomega {

enum class Generator : std::uint8_t { a, b, c, d };

constexpr std::array<Generator, 4> kGenerators{Generator::a, Generator::b,
                                               Generator::c, Generator::d};

char to_letter(Generator g);
Generator generator_from_letter(char letter);

/// A finite word over {a, b, c, d}. The empty word is the identity.
class GeneratorWord {
 public:
  GeneratorWord() = default;
  explicit GeneratorWord(std::vector<Generator> letters)
      : letters_(std::move(letters)) {}

  static GeneratorWord parse(std::string_view text);

  std::span<const Generator> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::string str() const;

  GeneratorWord power(std::size_t k) const;
  friend GeneratorWord operator+(const GeneratorWord& lhs,
                                 const GeneratorWord& rhs);
  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

 private:
  std::vector<Generator> letters_;
};

/// Level-truncated automorphism of the binary rooted tree. Vertices of level
/// k are indexed lexicographically (first letter in the most significant
/// bit); level(k)[x] is the image of vertex x. Levels 1..depth are stored
/// and are always prefix-coherent.
class TreeAutomorphism {
 public:
  static TreeAutomorphism identity(unsigned depth);

  /// Builds all lower levels by prefix projection of `top`. Throws
  /// InvalidArgument if `top` does not preserve the tree structure.
  static TreeAutomorphism from_top_level(std::vector<std::uint32_t> top,
                                         unsigned depth);

  unsigned depth() const { return depth_; }
  std::span<const std::uint32_t> level(unsigned k) const;
  std::uint32_t apply(std::uint32_t vertex, unsigned level) const {
    return levels_[level - 1][vertex];
  }

  /// (lhs * rhs)(x) = lhs(rhs(x)): rhs acts first.
  TreeAutomorphism compose(const TreeAutomorphism& rhs,
                           kernels::Policy policy) const;
  friend TreeAutomorphism operator*(const TreeAutomorphism& lhs,
                                    const TreeAutomorphism& rhs) {
    return lhs.compose(rhs, kernels::default_policy());
  }

  TreeAutomorphism inverse() const;
  bool is_identity() const;
  bool is_coherent() const;

  friend bool operator==(const TreeAutomorphism&,
                         const TreeAutomorphism&) = default;

 private:
  TreeAutomorphism(unsigned depth, std::vector<std::vector<std::uint32_t>> levels)
      : depth_(depth), levels_(std::move(levels)) {}

  unsigned depth_ = 0;
  std::vector<std::vector<std::uint32_t>> levels_;
};

/// Largest supported depth (level size 2^depth).
inline constexpr unsigned kMaxTreeDepth = 24;

/// Permutation of the level-`depth` vertices induced by a generator.
std::vector<std::uint32_t> generator_level_permutation(
    Generator g, const OmegaWord& w, unsigned depth,
    kernels::Policy policy = kernels::default_policy());

TreeAutomorphism generator_action(Generator g, const OmegaWord& w,
                                  unsigned depth);

/// The leftmost letter acts last: "s1 s2" applies s2, then s1.
TreeAutomorphism word_action(const GeneratorWord& word, const OmegaWord& w,
                             unsigned depth);

/// `trivial` means "acts as the identity on levels 1..depth" (evidence up to
/// that depth); `trivial == false` proves the word is a nontrivial element.
struct TrivialityVerdict {
  bool trivial = false;
  unsigned depth = 0;
};

TrivialityVerdict verify_trivial(const GeneratorWord& word, const OmegaWord& w,
                                 unsigned depth);

}  // namespace gomega
