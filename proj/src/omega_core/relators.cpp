#include "gomega/relators.hpp"

#include "gomega/error.hpp"

namespace gomega {

namespace {

GeneratorWord letters(std::initializer_list<char> chars) {
  std::vector<Generator> out;
  for (char ch : chars) out.push_back(generator_from_letter(ch));
  return GeneratorWord(std::move(out));
}

OmegaForm form_of(const OmegaWord& w) {
  const auto cls = classify_omega(w);
  if (cls.tag != OmegaTag::generic || !cls.form)
    throw AlmostConstant("relators are defined only for non-almost-constant "
                         "omega; got " + w.to_string());
  return *cls.form;
}

std::vector<GeneratorWord> first_family(const OmegaWord& w,
                                        std::size_t max_letters) {
  const OmegaForm f = form_of(w);
  const char x = letter_of_symbol(f.xyz[0]);
  const char y = letter_of_symbol(f.xyz[1]);
  const char z = letter_of_symbol(f.xyz[2]);
  const GeneratorWord ya = letters({y, 'a'});
  const GeneratorWord xa = letters({x, 'a'});

  std::vector<GeneratorWord> out;
  switch (f.type) {
    case 1: {
      out.push_back((xa + ya).power(4));
      if (f.n > 40) throw ResourceLimit("type-1 relator family too large");
      const std::size_t top = std::size_t{1} << (f.n - 1);
      // sum over k of 4 * (2 + 4k) letters
      const std::size_t total = 8 * top + 8 * top * (top + 1);
      if (total > max_letters)
        throw ResourceLimit("type-1 relator family has " + std::to_string(total) +
                            " letters, above the cap");
      for (std::size_t k = 1; k <= top; ++k)
        out.push_back((xa + ya.power(2 * k)).power(4));
      break;
    }
    case 2:
      out.push_back((xa + ya + ya).power(4));
      if (f.n > 20) throw ResourceLimit("relator exponent 2^n too large");
      out.push_back((xa + ya).power(std::size_t{1} << f.n));
      break;
    default:
      out.push_back((xa + ya + ya).power(4));
      if (f.n > 20) throw ResourceLimit("relator exponent 2^n too large");
      out.push_back((letters({z, 'a'}) + ya).power(std::size_t{1} << f.n));
      break;
  }
  return out;
}

}  // namespace

std::vector<GeneratorWord> standard_relations() {
  return {GeneratorWord::parse("aa"), GeneratorWord::parse("bb"),
          GeneratorWord::parse("cc"), GeneratorWord::parse("dd"),
          GeneratorWord::parse("bcd")};
}

std::vector<GeneratorWord> relators_U(const OmegaWord& w, unsigned k,
                                      std::size_t max_letters) {
  if (k < 1) throw InvalidArgument("relators_U: k must be >= 1");
  if (k == 1) return first_family(w, max_letters);

  const OmegaForm f = form_of(w);
  const Generator y = generator_from_letter(letter_of_symbol(f.xyz[1]));
  const auto inner = relators_U(w.shifted(), k - 1, max_letters);

  std::vector<GeneratorWord> out;
  out.reserve(inner.size());
  for (const auto& word : inner) {
    std::vector<Generator> image;
    image.reserve(word.size() * 3);
    for (auto g : word.letters()) {
      if (g == Generator::a) {
        image.insert(image.end(), {Generator::a, y, Generator::a});
      } else {
        image.push_back(g);
      }
    }
    if (image.size() > max_letters)
      throw ResourceLimit("relator exceeds the letter cap");
    out.emplace_back(std::move(image));
  }
  return out;
}

AbelianClass abelianization_class(const GeneratorWord& word) {
  AbelianClass cls;
  for (auto g : word.letters()) {
    switch (g) {
      case Generator::a: cls.a_parity ^= 1; break;
      case Generator::b: cls.klein ^= 1; break;
      case Generator::c: cls.klein ^= 2; break;
      case Generator::d: cls.klein ^= 3; break;
    }
  }
  return cls;
}

}  // namespace gomega
