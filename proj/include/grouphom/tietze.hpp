#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "grouphom/presentation.hpp"
#include "grouphom/word.hpp"

namespace grouphom {

namespace detail {

inline std::uint32_t letter_rank(Letter l) {
  return 2 * l.gen + (l.sign < 0 ? 1u : 0u);
}

// Strip cancelling first/last pairs; the result is a conjugate of w whose
// rotations are all freely reduced.
inline std::vector<Letter> cyclic_reduce(std::vector<Letter> v) {
  std::size_t lo = 0, hi = v.size();
  while (hi - lo >= 2 && cancels(v[lo], v[hi - 1])) {
    ++lo;
    --hi;
  }
  return std::vector<Letter>(v.begin() + static_cast<std::ptrdiff_t>(lo),
                             v.begin() + static_cast<std::ptrdiff_t>(hi));
}

inline std::vector<std::uint32_t> ranks_of(const std::vector<Letter>& v) {
  std::vector<std::uint32_t> r;
  r.reserve(v.size());
  for (Letter l : v) r.push_back(letter_rank(l));
  return r;
}

// Least rotation of the cyclic word or its inverse: a conjugation- and
// inversion-invariant key for duplicate detection.
inline std::vector<std::uint32_t> cyclic_canonical_key(const Word& w) {
  std::vector<Letter> core = cyclic_reduce(w.letters());
  std::vector<Letter> inv(core.size());
  std::transform(core.rbegin(), core.rend(), inv.begin(),
                 [](Letter l) { return inverse_of(l); });
  std::optional<std::vector<std::uint32_t>> best;
  for (const std::vector<Letter>* side : {&core, &inv}) {
    for (std::size_t s = 0; s < std::max<std::size_t>(side->size(), 1); ++s) {
      std::vector<Letter> rot(side->begin() + static_cast<std::ptrdiff_t>(s),
                              side->end());
      rot.insert(rot.end(), side->begin(),
                 side->begin() + static_cast<std::ptrdiff_t>(s));
      std::vector<std::uint32_t> key = ranks_of(rot);
      if (!best || key < *best) best = std::move(key);
    }
  }
  return *best;
}

// w with every occurrence of gen replaced by the given value (or its
// inverse), then every generator above gen shifted down one slot. value
// must not mention gen.
inline Word substitute_generator(const Word& w, GeneratorId gen,
                                 const Word& value) {
  std::vector<Letter> out;
  for (Letter l : w) {
    if (l.gen == gen) {
      if (l.sign > 0) {
        out.insert(out.end(), value.begin(), value.end());
      } else {
        for (auto it = value.letters().rbegin(); it != value.letters().rend();
             ++it) {
          out.push_back(inverse_of(*it));
        }
      }
    } else {
      out.push_back(l);
    }
  }
  for (Letter& l : out) {
    if (l.gen > gen) --l.gen;
  }
  return Word(std::move(out));
}

}  // namespace detail

// Presentation-level simplification: drop empty relators, drop duplicates
// up to inversion and cyclic rotation, and eliminate generators that occur
// exactly once in some relator, greedily picking the elimination that
// minimizes total relator length (ties: lowest generator index, then lowest
// relator index) and only when the total does not grow. Generator count and
// total relator length never increase.
inline Presentation tietze_simplify(const Presentation& p,
                                    std::size_t max_rounds = 10000) {
  Presentation cur = p;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    bool changed = false;

    // Empty relators, then duplicates.
    std::vector<Word> kept;
    std::vector<std::vector<std::uint32_t>> seen;
    for (const Word& r : cur.relators) {
      if (r.empty()) {
        changed = true;
        continue;
      }
      std::vector<std::uint32_t> key = detail::cyclic_canonical_key(r);
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
        changed = true;
        continue;
      }
      seen.push_back(std::move(key));
      kept.push_back(r);
    }
    cur.relators = std::move(kept);

    // Best generator elimination, if any shortens (or keeps) the total.
    std::size_t old_total = 0;
    for (const Word& r : cur.relators) old_total += r.size();

    struct Candidate {
      std::size_t new_total;
      GeneratorId gen;
      std::size_t relator;
      Word value;  // the eliminated generator equals this word
    };
    std::optional<Candidate> best;

    for (std::size_t ri = 0; ri < cur.relators.size(); ++ri) {
      std::vector<Letter> core =
          detail::cyclic_reduce(cur.relators[ri].letters());
      for (GeneratorId g = 0; g < cur.n_generators(); ++g) {
        std::size_t occurrences = 0, at = 0;
        for (std::size_t i = 0; i < core.size(); ++i) {
          if (core[i].gen == g) {
            ++occurrences;
            at = i;
          }
        }
        if (occurrences != 1) continue;
        // Rotate the single occurrence to the front; flip if inverted.
        std::vector<Letter> rot(core.begin() + static_cast<std::ptrdiff_t>(at),
                                core.end());
        rot.insert(rot.end(), core.begin(),
                   core.begin() + static_cast<std::ptrdiff_t>(at));
        Word rel(rot);
        if (rel.letters().front().sign < 0) rel = invert(rel);
        // rel is now g·w (possibly after inversion the occurrence moved to
        // the back; rotate once more in that case).
        if (rel.letters().front().gen != g) {
          std::vector<Letter> v = rel.letters();
          std::rotate(v.begin(), v.end() - 1, v.end());
          rel = Word(std::move(v));
        }
        Word w_tail(std::vector<Letter>(rel.begin() + 1, rel.end()));
        Word value = invert(w_tail);  // g = w^-1

        std::size_t new_total = 0;
        for (std::size_t rj = 0; rj < cur.relators.size(); ++rj) {
          if (rj == ri) continue;
          new_total +=
              detail::substitute_generator(cur.relators[rj], g, value).size();
        }
        if (new_total > old_total) continue;
        if (!best || new_total < best->new_total ||
            (new_total == best->new_total &&
             (g < best->gen || (g == best->gen && ri < best->relator)))) {
          best = Candidate{new_total, g, ri, value};
        }
      }
    }

    if (best) {
      Presentation next;
      for (std::size_t i = 0; i < cur.generator_names.size(); ++i) {
        if (i != best->gen) {
          next.generator_names.push_back(cur.generator_names[i]);
        }
      }
      for (std::size_t ri = 0; ri < cur.relators.size(); ++ri) {
        if (ri == best->relator) continue;
        next.relators.push_back(detail::substitute_generator(
            cur.relators[ri], best->gen, best->value));
      }
      cur = std::move(next);
      changed = true;
    }

    if (!changed) break;
  }
  return cur;
}

}  // namespace grouphom
