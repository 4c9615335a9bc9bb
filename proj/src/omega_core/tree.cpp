#include "gomega/tree.hpp"

#include <numeric>

#include "gomega/error.hpp"

namespace gomega {

namespace {

void check_depth(unsigned depth) {
  if (depth < 1 || depth > kMaxTreeDepth)
    throw ResourceLimit("tree depth must lie in [1, " +
                        std::to_string(kMaxTreeDepth) + "], got " +
                        std::to_string(depth));
}

std::vector<std::uint32_t> identity_perm(std::size_t size) {
  std::vector<std::uint32_t> p(size);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

bool row_active(Generator g, std::uint8_t symbol) {
  switch (g) {
    case Generator::b: return symbol != 2;
    case Generator::c: return symbol != 1;
    case Generator::d: return symbol != 0;
    case Generator::a: break;
  }
  return false;
}

}  // namespace

char to_letter(Generator g) { return "abcd"[static_cast<int>(g)]; }

Generator generator_from_letter(char letter) {
  if (letter < 'a' || letter > 'd')
    throw InvalidArgument(std::string("generator letters are a, b, c, d; got '") +
                          letter + "'");
  return static_cast<Generator>(letter - 'a');
}

GeneratorWord GeneratorWord::parse(std::string_view text) {
  std::vector<Generator> letters;
  letters.reserve(text.size());
  for (char ch : text) letters.push_back(generator_from_letter(ch));
  return GeneratorWord(std::move(letters));
}

std::string GeneratorWord::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (auto g : letters_) s.push_back(to_letter(g));
  return s;
}

GeneratorWord GeneratorWord::power(std::size_t k) const {
  std::vector<Generator> out;
  out.reserve(letters_.size() * k);
  for (std::size_t i = 0; i < k; ++i)
    out.insert(out.end(), letters_.begin(), letters_.end());
  return GeneratorWord(std::move(out));
}

GeneratorWord operator+(const GeneratorWord& lhs, const GeneratorWord& rhs) {
  std::vector<Generator> out = lhs.letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return GeneratorWord(std::move(out));
}

TreeAutomorphism TreeAutomorphism::identity(unsigned depth) {
  check_depth(depth);
  std::vector<std::vector<std::uint32_t>> levels;
  for (unsigned k = 1; k <= depth; ++k)
    levels.push_back(identity_perm(std::size_t{1} << k));
  return TreeAutomorphism(depth, std::move(levels));
}

TreeAutomorphism TreeAutomorphism::from_top_level(std::vector<std::uint32_t> top,
                                                  unsigned depth) {
  check_depth(depth);
  if (top.size() != (std::size_t{1} << depth))
    throw InvalidArgument("top level permutation has the wrong size");
  std::vector<std::vector<std::uint32_t>> levels(depth);
  levels[depth - 1] = std::move(top);
  for (unsigned k = depth - 1; k >= 1; --k) {
    const auto& upper = levels[k];
    auto& lower = levels[k - 1];
    lower.assign(std::size_t{1} << k, 0);
    for (std::size_t x = 0; x < lower.size(); ++x) {
      const auto a = upper[2 * x] >> 1;
      const auto b = upper[2 * x + 1] >> 1;
      if (a != b)
        throw InvalidArgument("permutation does not preserve the tree at level " +
                              std::to_string(k));
      lower[x] = a;
    }
  }
  TreeAutomorphism t(depth, std::move(levels));
  if (!t.is_coherent())
    throw InvalidArgument("permutation is not a tree automorphism");
  return t;
}

std::span<const std::uint32_t> TreeAutomorphism::level(unsigned k) const {
  if (k < 1 || k > depth_) throw InvalidArgument("level out of range");
  return levels_[k - 1];
}

TreeAutomorphism TreeAutomorphism::compose(const TreeAutomorphism& rhs,
                                           kernels::Policy policy) const {
  if (rhs.depth_ != depth_)
    throw InvalidArgument("cannot compose automorphisms of different depth");
  std::vector<std::vector<std::uint32_t>> levels(depth_);
  for (unsigned k = 0; k < depth_; ++k) {
    levels[k].resize(levels_[k].size());
    kernels::compose(policy, levels_[k], rhs.levels_[k], levels[k]);
  }
  return TreeAutomorphism(depth_, std::move(levels));
}

TreeAutomorphism TreeAutomorphism::inverse() const {
  std::vector<std::vector<std::uint32_t>> levels(depth_);
  for (unsigned k = 0; k < depth_; ++k) {
    levels[k].resize(levels_[k].size());
    for (std::size_t x = 0; x < levels_[k].size(); ++x)
      levels[k][levels_[k][x]] = static_cast<std::uint32_t>(x);
  }
  return TreeAutomorphism(depth_, std::move(levels));
}

bool TreeAutomorphism::is_identity() const {
  // Coherence makes the top level decisive.
  const auto& top = levels_.back();
  for (std::size_t x = 0; x < top.size(); ++x)
    if (top[x] != x) return false;
  return true;
}

bool TreeAutomorphism::is_coherent() const {
  for (unsigned k = 0; k < depth_; ++k) {
    const auto& perm = levels_[k];
    if (perm.size() != (std::size_t{1} << (k + 1))) return false;
    std::vector<bool> seen(perm.size(), false);
    for (auto y : perm) {
      if (y >= perm.size() || seen[y]) return false;
      seen[y] = true;
    }
    if (k == 0) continue;
    const auto& lower = levels_[k - 1];
    for (std::size_t x = 0; x < perm.size(); ++x)
      if ((perm[x] >> 1) != lower[x >> 1]) return false;
  }
  return true;
}

std::vector<std::uint32_t> generator_level_permutation(Generator g,
                                                       const OmegaWord& w,
                                                       unsigned depth,
                                                       kernels::Policy policy) {
  check_depth(depth);
  // sigma[n] for n < depth; swaps with n >= depth are invisible at this depth.
  std::vector<std::uint8_t> sigma(depth, 0);
  if (g == Generator::a) {
    sigma[0] = 1;
  } else {
    for (unsigned n = 1; n < depth; ++n) sigma[n] = row_active(g, w.symbol(n));
  }
  std::vector<std::uint32_t> out(std::size_t{1} << depth);
  kernels::generator_images(policy, kernels::SigmaMask{sigma}, depth, out);
  return out;
}

TreeAutomorphism generator_action(Generator g, const OmegaWord& w,
                                  unsigned depth) {
  return TreeAutomorphism::from_top_level(
      generator_level_permutation(g, w, depth), depth);
}

TreeAutomorphism word_action(const GeneratorWord& word, const OmegaWord& w,
                             unsigned depth) {
  check_depth(depth);
  std::array<std::vector<std::uint32_t>, 4> gens;
  for (auto g : kGenerators)
    gens[static_cast<int>(g)] = generator_level_permutation(g, w, depth);

  const auto policy = kernels::default_policy();
  std::vector<std::uint32_t> acc = identity_perm(std::size_t{1} << depth);
  std::vector<std::uint32_t> scratch(acc.size());
  // Rightmost letter acts first, so fold from the right.
  const auto letters = word.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    kernels::compose(policy, gens[static_cast<int>(*it)], acc, scratch);
    acc.swap(scratch);
  }
  return TreeAutomorphism::from_top_level(std::move(acc), depth);
}

TrivialityVerdict verify_trivial(const GeneratorWord& word, const OmegaWord& w,
                                 unsigned depth) {
  return {word_action(word, w, depth).is_identity(), depth};
}

}  // namespace gomega
