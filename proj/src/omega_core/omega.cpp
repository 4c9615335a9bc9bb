#include "gomega/omega.hpp"

#include <algorithm>
#include <set>

#include "gomega/error.hpp"

namespace gomega {

namespace {

std::vector<std::uint8_t> parse_symbols(std::string_view text) {
  std::vector<std::uint8_t> out;
  out.reserve(text.size());
  for (char ch : text) {
    if (ch < '0' || ch > '2')
      throw InvalidArgument("omega symbols must be 0, 1 or 2, got '" +
                            std::string(1, ch) + "'");
    out.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return out;
}

bool row_active(char letter, std::uint8_t symbol) {
  switch (letter) {
    case 'b': return symbol == 0 || symbol == 1;
    case 'c': return symbol == 0 || symbol == 2;
    default: return symbol == 1 || symbol == 2;
  }
}

IndexSequence scan(const OmegaWord& w, char letter, std::size_t count,
                   std::size_t horizon) {
  IndexSequence seq;
  for (std::size_t n = 1; n <= horizon && seq.indices.size() < count; ++n)
    if (row_active(letter, w.symbol(n))) seq.indices.push_back(n);
  seq.complete = seq.indices.size() == count;
  return seq;
}

}  // namespace

OmegaWord::OmegaWord(std::vector<std::uint8_t> preperiod,
                     std::vector<std::uint8_t> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw InvalidArgument("omega period must be nonempty");
  auto bad = [](std::uint8_t s) { return s > 2; };
  if (std::ranges::any_of(preperiod_, bad) || std::ranges::any_of(period_, bad))
    throw InvalidArgument("omega symbols must be 0, 1 or 2");
}

OmegaWord OmegaWord::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || text.find(':', colon + 1) != std::string_view::npos)
    throw InvalidArgument("omega must be written PRE:PERIOD, got '" +
                          std::string(text) + "'");
  return OmegaWord(parse_symbols(text.substr(0, colon)),
                   parse_symbols(text.substr(colon + 1)));
}

std::uint8_t OmegaWord::symbol(std::size_t n) const {
  if (n == 0) throw InvalidArgument("omega symbols are indexed from 1");
  if (n <= preperiod_.size()) return preperiod_[n - 1];
  return period_[(n - 1 - preperiod_.size()) % period_.size()];
}

bool OmegaWord::in_omega2() const {
  std::set<std::uint8_t> distinct(period_.begin(), period_.end());
  return distinct.size() >= 2;
}

OmegaWord OmegaWord::shifted() const {
  if (!preperiod_.empty())
    return OmegaWord({preperiod_.begin() + 1, preperiod_.end()}, period_);
  std::vector<std::uint8_t> rotated(period_.begin() + 1, period_.end());
  rotated.push_back(period_.front());
  return OmegaWord({}, std::move(rotated));
}

std::string OmegaWord::to_string() const {
  std::string out;
  for (auto s : preperiod_) out.push_back(static_cast<char>('0' + s));
  out.push_back(':');
  for (auto s : period_) out.push_back(static_cast<char>('0' + s));
  return out;
}

OmegaClassification classify_omega(const OmegaWord& w) {
  OmegaClassification result;
  result.in_omega2 = w.in_omega2();

  const bool periodic_constant =
      std::ranges::all_of(w.period(), [&](auto s) { return s == w.period()[0]; });
  const bool fully_constant =
      periodic_constant &&
      std::ranges::all_of(w.preperiod(), [&](auto s) { return s == w.period()[0]; });
  if (fully_constant) {
    result.tag = OmegaTag::constant;
    return result;
  }
  result.tag = periodic_constant ? OmegaTag::almost_constant : OmegaTag::generic;

  // Every run in the shapes below either ends inside preperiod+period or
  // never ends, so this horizon decides them.
  const std::size_t horizon = w.preperiod().size() + 2 * w.period().size() + 3;
  const std::uint8_t x = w.symbol(1);
  std::size_t j = 2;
  while (j <= horizon && w.symbol(j) == x) ++j;
  if (j > horizon) return result;  // unreachable for non-constant words

  OmegaForm form;
  if (j > 2) {
    const std::uint8_t y = w.symbol(j);
    form = {1, {x, y, static_cast<std::uint8_t>(3 - x - y)}, j};
  } else {
    const std::uint8_t y = w.symbol(2);
    std::size_t m = 3;
    while (m <= horizon && w.symbol(m) == y) ++m;
    if (m > horizon) return result;  // x y y y ... : almost constant, no shape
    const std::uint8_t last = w.symbol(m);
    if (last == x)
      form = {2, {x, y, static_cast<std::uint8_t>(3 - x - y)}, m};
    else
      form = {3, {x, y, last}, m};
  }
  result.form = form;
  return result;
}

SigmaSequences sigma_sequences(const OmegaWord& w, std::size_t count) {
  if (count == 0) throw InvalidArgument("sigma_sequences: count must be >= 1");
  SigmaSequences out;
  out.horizon = w.preperiod().size() + count * w.period().size();
  out.u = scan(w, 'b', count, out.horizon);
  out.v = scan(w, 'c', count, out.horizon);
  out.delta = scan(w, 'd', count, out.horizon);
  return out;
}

char letter_of_symbol(std::uint8_t symbol) {
  switch (symbol) {
    case 0: return 'd';
    case 1: return 'c';
    case 2: return 'b';
  }
  throw InvalidArgument("symbol out of range");
}

}  // namespace gomega
