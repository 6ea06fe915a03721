#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grouphom/word.hpp"

namespace grouphom {

inline bool is_valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// A finite presentation: named generators and a list of relator words.
// Relator order is significant and preserved by every derived construction.
// Relators that reduce to the empty word may be stored; simplification
// removes them.
struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  std::size_t n_generators() const { return generator_names.size(); }
  std::size_t n_relators() const { return relators.size(); }

  std::optional<GeneratorId> generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generator_names.size(); ++i) {
      if (generator_names[i] == name) return static_cast<GeneratorId>(i);
    }
    return std::nullopt;
  }

  void validate() const {
    for (const auto& name : generator_names) {
      if (!is_valid_identifier(name)) {
        throw std::invalid_argument("invalid generator name: '" + name + "'");
      }
    }
    for (std::size_t i = 0; i < generator_names.size(); ++i) {
      for (std::size_t j = i + 1; j < generator_names.size(); ++j) {
        if (generator_names[i] == generator_names[j]) {
          throw std::invalid_argument("duplicate generator name: '" +
                                      generator_names[i] + "'");
        }
      }
    }
    for (const Word& r : relators) {
      for (const Letter& l : r) {
        if (l.gen >= generator_names.size()) {
          throw std::invalid_argument(
              "relator uses generator index out of range");
        }
      }
    }
  }
};

// A subset of relator positions, stored in a significant order.
struct RelatorSelection {
  std::vector<std::size_t> indices;

  static RelatorSelection all_of(const Presentation& p) {
    RelatorSelection s;
    s.indices.resize(p.n_relators());
    for (std::size_t i = 0; i < s.indices.size(); ++i) s.indices[i] = i;
    return s;
  }

  bool contains(std::size_t idx) const {
    return std::find(indices.begin(), indices.end(), idx) != indices.end();
  }

  void validate(const Presentation& p) const {
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (indices[i] >= p.n_relators()) {
        throw std::invalid_argument("relator selection index out of range");
      }
      for (std::size_t j = i + 1; j < indices.size(); ++j) {
        if (indices[i] == indices[j]) {
          throw std::invalid_argument("relator selection index repeated");
        }
      }
    }
  }

  friend bool operator==(const RelatorSelection&,
                         const RelatorSelection&) = default;
};

// [g, r] for every generator g and relator r, generator-major, so the
// entry for (g_i, r_j) sits at position i * n_relators + j. Commutators
// that reduce to the empty word are kept; size is always
// |generators| * |relators|.
inline std::vector<Word> generator_relator_commutators(const Presentation& p) {
  std::vector<Word> out;
  out.reserve(p.n_generators() * p.n_relators());
  for (GeneratorId g = 0; g < p.n_generators(); ++g) {
    const Word gw = Word::generator(g);
    for (const Word& r : p.relators) {
      out.push_back(commutator(gw, r));
    }
  }
  return out;
}

// Each relator raised to the k-th power, in relator order.
inline std::vector<Word> power_relators(const Presentation& p,
                                        unsigned long long k) {
  if (k < 1) throw std::invalid_argument("power_relators: k must be >= 1");
  std::vector<Word> out;
  out.reserve(p.n_relators());
  for (const Word& r : p.relators) {
    out.push_back(power(r, static_cast<long long>(k)));
  }
  return out;
}

}  // namespace grouphom
