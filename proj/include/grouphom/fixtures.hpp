#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "grouphom/parse.hpp"
#include "grouphom/presentation.hpp"

namespace grouphom {

// Bundled presentations, byte-identical to the fixtures/ directory.
namespace fixture_text_detail {

inline constexpr const char* sigma5 = R"PRES(# Symmetric group on five letters.
generators: a, b
relators:
a^5
b^2
(a^-1 b)^4
(a^2 b a^-2 b)^2
)PRES";

inline constexpr const char* z4 = R"PRES(# Cyclic group of order 4.
generators: a
relators:
a^4
)PRES";

inline constexpr const char* z6 = R"PRES(# Cyclic group of order 6.
generators: a
relators:
a^6
)PRES";

inline constexpr const char* z2z2 = R"PRES(# Klein four-group.
generators: a, b
relators:
a^2
b^2
[a, b]
)PRES";

inline constexpr const char* s3 = R"PRES(# Symmetric group on three letters.
generators: a, b
relators:
a^2
b^2
(a b)^3
)PRES";

inline constexpr const char* free1 = R"PRES(# Free group of rank 1.
generators: a
relators:
)PRES";

inline constexpr const char* free2 = R"PRES(# Free group of rank 2.
generators: a, b
relators:
)PRES";

inline constexpr const char* free3 = R"PRES(# Free group of rank 3.
generators: a, b, c
relators:
)PRES";

inline constexpr const char* zxz = R"PRES(# Free abelian group of rank 2.
generators: a, b
relators:
[a, b]
)PRES";

inline constexpr const char* z4_redundant = R"PRES(# Cyclic group of order 4, presented with a redundant second relator.
generators: a
relators:
a^4
a^8
)PRES";

inline constexpr const char* sl2_3 = R"PRES(# SL_2(Z[1/3, zeta_3]), indexed relator families expanded over s, t in {1, 2}.
generators: z, u1, a, b, b0, b1, b2, w
relators:
b1^-1 z^3 b z^3 a
b2^-1 z^6 b z^6 a
z^3
[z, u1]
[u1, u1]
a^4
[a^2, z]
[a^2, u1]
a^-1 z a z
a^-1 u1 a u1
[b1, b2]
b^-3 a^2
b^-3 b0 b1 b2
(b0 b1^-1 a^-1 u1)^3
a^-2 b^-1 u1 b z^-3 b^-1 b0^-1 z^3 b z^-1 u1
# The published relator list for this group also contains
#   w^-1 z^4 u1 u2 u3
# but u2 and u3 are not among the declared generators (a suspected typo in
# the source). The relator is preserved here as a comment rather than
# silently repaired; as a consequence w occurs in no active relator.
)PRES";

inline constexpr const char* sl2_5 = R"PRES(# SL_2(Z[1/5, zeta_5]), indexed relator families expanded over the published
# ranges i, j in {1, 2} and s, t in {1, 2, 3, 4}.
generators: z, u1, u2, a, b, b0, b1, b2, b3, b4, w
relators:
b1^-1 z^3 b z^3 a
b2^-1 z^6 b z^6 a
b3^-1 z^9 b z^9 a
b4^-1 z^12 b z^12 a
z^5
[z, u1]
[z, u2]
[u1, u2]
a^4
[a^2, z]
[a^2, u1]
[a^2, u2]
a^-1 z a z
a^-1 u1 a u1
a^-1 u2 a u2
[b1, b2]
[b1, b3]
[b1, b4]
[b2, b3]
[b2, b4]
[b3, b4]
b^-3 a^2
b^-3 b0 b1 b2 b3 b4
(b0 b1^-1 a^-1 u1)^3
(b0 b2^-1 a^-1 u2)^3
(b0 b1^-1 b2^-1 b3 a^-1 u1 u2)^3
a^-2 b^-1 u1 b z^-3 b^-1 b0^-1 z^3 b z^-1 u1
a^-2 b^-1 u2 b z^-6 b^-1 b0^-1 z^6 b z^-2 u2
# Four relators in the published list mention names that are not among the
# declared generators (u3, and in one case b5) -- suspected typos in the
# source. They are preserved here as comments rather than silently repaired:
#   w^-1 z^4 u1 u2 u3
#   (b0 b3^-1 a^-1 u3)^3
#   (b0 b1^-1 b3^-1 b4 a^-1 u1 u3)^3
#   (b0 b2^-1 b3^-1 b5 a^-1 u2 u3)^3
# As a consequence w occurs in no active relator.
)PRES";

inline constexpr const char* sl2_7 = R"PRES(# SL_2(Z[1/7, zeta_7]), indexed relator families expanded over
# i, j in {1, 2, 3} and the b-families over all of b0..b6. The published
# range annotation for s, t is {1..6}, which is inconsistent with the
# published size of this presentation (14 generators, 64 relators); the
# count forces index 0 to be included, and that reading is used here.
generators: z, u1, u2, u3, a, b, b0, b1, b2, b3, b4, b5, b6, w
relators:
b0^-1 b a
b1^-1 z^3 b z^3 a
b2^-1 z^6 b z^6 a
b3^-1 z^9 b z^9 a
b4^-1 z^12 b z^12 a
b5^-1 z^15 b z^15 a
b6^-1 z^18 b z^18 a
w^-1 z^4 u1 u2 u3
z^7
[z, u1]
[z, u2]
[z, u3]
[u1, u2]
[u1, u3]
[u2, u3]
a^4
[a^2, z]
[a^2, u1]
[a^2, u2]
[a^2, u3]
a^-1 z a z
a^-1 u1 a u1
a^-1 u2 a u2
a^-1 u3 a u3
[b0, b1]
[b0, b2]
[b0, b3]
[b0, b4]
[b0, b5]
[b0, b6]
[b1, b2]
[b1, b3]
[b1, b4]
[b1, b5]
[b1, b6]
[b2, b3]
[b2, b4]
[b2, b5]
[b2, b6]
[b3, b4]
[b3, b5]
[b3, b6]
[b4, b5]
[b4, b6]
[b5, b6]
b^-3 a^2
b^-3 b0 b1 b2 b3 b4 b5 b6
b0^-7 w^-1 b0^-1 w
b1^-7 w^-1 b1^-1 w
b2^-7 w^-1 b2^-1 w
b3^-7 w^-1 b3^-1 w
b4^-7 w^-1 b4^-1 w
b5^-7 w^-1 b5^-1 w
b6^-7 w^-1 b6^-1 w
(b0 b1^-1 a^-1 u1)^3
(b0 b2^-1 a^-1 u2)^3
(b0 b3^-1 a^-1 u3)^3
(b0 b1^-1 b2^-1 b3 a^-1 u1 u2)^3
(b0 b1^-1 b3^-1 b4 a^-1 u1 u3)^3
(b0 b2^-1 b3^-1 b5 a^-1 u2 u3)^3
(b0 b1^-1 b2^-1 b3 b4 b5 b6^-1 a^-1 u1 u2 u3)^3
a^-2 b^-1 u1 b z^-3 b^-1 b0^-1 z^3 b z^-1 u1
a^-2 b^-1 u2 b z^-6 b^-1 b0^-1 z^6 b z^-2 u2
a^-2 b^-1 u3 b z^-9 b^-1 b0^-1 z^9 b z^-3 u3
)PRES";

}  // namespace fixture_text_detail

struct FixtureEntry {
  const char* name;
  const char* text;
};

inline const std::array<FixtureEntry, 13>& fixture_table() {
  static const std::array<FixtureEntry, 13> table = {{
      {"sigma5", fixture_text_detail::sigma5},
      {"z4", fixture_text_detail::z4},
      {"z6", fixture_text_detail::z6},
      {"z2z2", fixture_text_detail::z2z2},
      {"s3", fixture_text_detail::s3},
      {"free1", fixture_text_detail::free1},
      {"free2", fixture_text_detail::free2},
      {"free3", fixture_text_detail::free3},
      {"zxz", fixture_text_detail::zxz},
      {"z4_redundant", fixture_text_detail::z4_redundant},
      {"sl2_3", fixture_text_detail::sl2_3},
      {"sl2_5", fixture_text_detail::sl2_5},
      {"sl2_7", fixture_text_detail::sl2_7},
  }};
  return table;
}

inline const char* fixture_text(const std::string& name) {
  for (const FixtureEntry& e : fixture_table()) {
    if (name == e.name) return e.text;
  }
  throw std::invalid_argument("unknown fixture: '" + name + "'");
}

inline Presentation load_fixture(const std::string& name) {
  return parse_presentation(fixture_text(name));
}

}  // namespace grouphom
