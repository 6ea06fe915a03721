#include <catch2/catch_amalgamated.hpp>

#include "grouphom/fixtures.hpp"
#include "grouphom/rewrite.hpp"
#include "grouphom/smith.hpp"
#include "grouphom/tietze.hpp"

using namespace grouphom;

namespace {

std::size_t total_length(const Presentation& p) {
  std::size_t n = 0;
  for (const Word& r : p.relators) n += r.size();
  return n;
}

}  // namespace

TEST_CASE("empty relators are dropped") {
  Presentation p =
      parse_presentation("generators: a\nrelators:\n1\na^3\na a^-1\n");
  REQUIRE(p.n_relators() == 3);
  Presentation s = tietze_simplify(p);
  CHECK(s.n_relators() == 1);
  CHECK(s.relators[0] == parse_word("a^3", p));
}

TEST_CASE("duplicates up to inversion and rotation are dropped") {
  // [b,a] is the inverse of [a,b]; the conjugate b^-1 [a,b] b is a rotation
  Presentation p = parse_presentation(
      "generators: a, b\nrelators:\n[a,b]\n[b,a]\nb^-1 [a,b] b\na^2\n");
  Presentation s = tietze_simplify(p);
  CHECK(s.n_relators() == 2);
  CHECK(s.relators[0] == parse_word("[a,b]", p));
  CHECK(s.relators[1] == parse_word("a^2", p));
}

TEST_CASE("single-occurrence generators are eliminated") {
  // b appears once in b a^-2, so b = a^2 everywhere
  Presentation p =
      parse_presentation("generators: a, b\nrelators:\nb a^-2\na^5\nb^2\n");
  Presentation s = tietze_simplify(p);
  CHECK(s.n_generators() == 1);
  CHECK(s.generator_names == std::vector<std::string>{"a"});
  REQUIRE(s.n_relators() == 2);
  CHECK(s.relators[0] == parse_word("a^5", s));
  CHECK(s.relators[1] == parse_word("a^4", s));
}

TEST_CASE("elimination handles inverted and rotated occurrences") {
  // the single occurrence of b is inverted and buried mid-relator
  Presentation p =
      parse_presentation("generators: a, b\nrelators:\na b^-1 a\nb^3\n");
  Presentation s = tietze_simplify(p);
  CHECK(s.n_generators() == 1);
  REQUIRE(s.n_relators() == 1);
  // b = a^2, so b^3 becomes a^6
  CHECK(s.relators[0] == parse_word("a^6", s));
}

TEST_CASE("generator indices shift down after elimination") {
  // eliminating the middle generator must renumber c in every relator
  Presentation p = parse_presentation(
      "generators: a, b, c\nrelators:\nb c^-2\na c a^-1 c\n");
  Presentation s = tietze_simplify(p);
  CHECK(s.generator_names == std::vector<std::string>{"a", "c"});
  REQUIRE(s.n_relators() == 1);
  CHECK(s.relators[0] == parse_word("a c a^-1 c", s));
}

TEST_CASE("no elimination when the total would grow") {
  // c = (a b)^4 would inflate c^5 to length 40; leave everything alone
  Presentation p = parse_presentation(
      "generators: a, b, c\nrelators:\nc (a b)^-4\nc^5\nc^5 a\nc^5 b\n");
  Presentation s = tietze_simplify(p);
  CHECK(s.n_generators() == 3);
  CHECK(s.n_relators() == 4);
}

TEST_CASE("fixed points") {
  for (const char* name : {"z4", "s3", "z2z2", "sigma5", "zxz"}) {
    Presentation p = load_fixture(name);
    Presentation s = tietze_simplify(p);
    CHECK(serialize_presentation(s) == serialize_presentation(p));
  }
}

TEST_CASE("simplification is idempotent") {
  for (const auto& entry : fixture_table()) {
    Presentation s = tietze_simplify(load_fixture(entry.name));
    Presentation ss = tietze_simplify(s);
    CHECK(serialize_presentation(ss) == serialize_presentation(s));
  }
}

TEST_CASE("group invariants survive on every fixture") {
  for (const auto& entry : fixture_table()) {
    Presentation p = load_fixture(entry.name);
    Presentation s = tietze_simplify(p);
    INFO("fixture " << entry.name);
    CHECK(s.n_generators() <= p.n_generators());
    CHECK(total_length(s) <= total_length(p));
    CHECK(abelian_invariants(s) == abelian_invariants(p));
    CHECK_NOTHROW(s.validate());
  }
}

TEST_CASE("normal-form counts survive on the finite fixtures") {
  const std::pair<const char*, std::uint64_t> cases[] = {
      {"z4", 4}, {"s3", 6}, {"z2z2", 4}, {"sigma5", 120}};
  for (const auto& [name, order] : cases) {
    Presentation s = tietze_simplify(load_fixture(name));
    RewritingSystem rs(build_monoid_presentation(s));
    REQUIRE(rs.complete() == KbStatus::confluent);
    CHECK(rs.count_normal_forms(100000) == order);
  }
}

TEST_CASE("round cap halts even when more work remains") {
  Presentation p =
      parse_presentation("generators: a, b\nrelators:\nb a^-2\na^5\nb^2\n");
  // one round performs at most one elimination
  Presentation s = tietze_simplify(p, 1);
  CHECK(s.n_generators() == 1);
}
