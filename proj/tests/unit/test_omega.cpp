#include "doctest.h"

#include "gomega/error.hpp"
#include "gomega/omega.hpp"

using namespace gomega;

TEST_CASE("parse and print eventually periodic words") {
  const auto w = OmegaWord::parse(":012");
  CHECK(w.preperiod().empty());
  CHECK(w.period() == std::vector<std::uint8_t>{0, 1, 2});
  CHECK(w.symbol(1) == 0);
  CHECK(w.symbol(2) == 1);
  CHECK(w.symbol(3) == 2);
  CHECK(w.symbol(4) == 0);
  CHECK(w.to_string() == ":012");

  const auto v = OmegaWord::parse("0001:2");
  CHECK(v.symbol(4) == 1);
  CHECK(v.symbol(5) == 2);
  CHECK(v.symbol(100) == 2);
  CHECK(OmegaWord::parse(v.to_string()) == v);

  CHECK_THROWS_AS(OmegaWord::parse("012"), InvalidArgument);
  CHECK_THROWS_AS(OmegaWord::parse("0:"), InvalidArgument);
  CHECK_THROWS_AS(OmegaWord::parse(":013"), InvalidArgument);
  CHECK(OmegaWord().symbol(5) == 0);
}

TEST_CASE("shift drops the first symbol") {
  const auto w = OmegaWord::parse("1:02");
  CHECK(w.shifted() == OmegaWord::parse(":02"));
  const auto s = OmegaWord::parse(":012").shifted();
  for (std::size_t n = 1; n < 10; ++n) CHECK(s.symbol(n) == OmegaWord::parse(":012").symbol(n + 1));
}

TEST_CASE("classification") {
  auto c = classify_omega(OmegaWord::parse(":012"));
  CHECK(c.in_omega2);
  CHECK(c.tag == OmegaTag::generic);
  REQUIRE(c.form);
  CHECK(c.form->type == 3);
  CHECK(c.form->xyz == std::array<std::uint8_t, 3>{0, 1, 2});
  CHECK(c.form->n == 3);

  c = classify_omega(OmegaWord::parse(":0"));
  CHECK_FALSE(c.in_omega2);
  CHECK(c.tag == OmegaTag::constant);
  CHECK_FALSE(c.form);

  c = classify_omega(OmegaWord::parse("0001:2"));
  CHECK_FALSE(c.in_omega2);
  CHECK(c.tag == OmegaTag::almost_constant);
  REQUIRE(c.form);
  CHECK(c.form->type == 1);
  CHECK(c.form->xyz[0] == 0);
  CHECK(c.form->xyz[1] == 1);
  CHECK(c.form->n == 4);

  c = classify_omega(OmegaWord::parse(":01"));
  CHECK(c.in_omega2);
  REQUIRE(c.form);
  CHECK(c.form->type == 2);
  CHECK(c.form->n == 3);

  c = classify_omega(OmegaWord::parse("0:12"));
  REQUIRE(c.form);
  CHECK(c.form->type == 3);
}

TEST_CASE("sigma index sequences") {
  auto s = sigma_sequences(OmegaWord::parse(":012"), 2);
  CHECK(s.u.indices == std::vector<std::size_t>{1, 2});
  CHECK(s.v.indices == std::vector<std::size_t>{1, 3});
  CHECK(s.delta.indices == std::vector<std::size_t>{2, 3});
  CHECK(s.u.complete);

  s = sigma_sequences(OmegaWord::parse(":0"), 3);
  CHECK(s.u.indices == std::vector<std::size_t>{1, 2, 3});
  CHECK(s.v.indices == std::vector<std::size_t>{1, 2, 3});
  CHECK(s.delta.indices.empty());
  CHECK_FALSE(s.delta.complete);

  s = sigma_sequences(OmegaWord::parse(":2"), 2);
  CHECK(s.u.indices.empty());
  CHECK_FALSE(s.u.complete);
  CHECK(s.v.indices == std::vector<std::size_t>{1, 2});
  CHECK(s.delta.indices == std::vector<std::size_t>{1, 2});
}

TEST_CASE("letters of symbols") {
  CHECK(letter_of_symbol(0) == 'd');
  CHECK(letter_of_symbol(1) == 'c');
  CHECK(letter_of_symbol(2) == 'b');
}
