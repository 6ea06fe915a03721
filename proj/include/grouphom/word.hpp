#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace grouphom {

using GeneratorId = std::uint32_t;

// One signed occurrence of a generator.
struct Letter {
  GeneratorId gen = 0;
  std::int8_t sign = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

constexpr Letter inverse_of(Letter l) {
  return {l.gen, static_cast<std::int8_t>(-l.sign)};
}

constexpr bool cancels(Letter a, Letter b) {
  return a.gen == b.gen && a.sign == -b.sign;
}

// A word in a free group, kept freely reduced at all times: no adjacent
// pair g g^-1 or g^-1 g survives construction. The empty word is the
// identity. Value type; all operations below are pure.
class Word {
 public:
  Word() = default;

  // Reduces eagerly, so any letter sequence is a valid input.
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    reduce_in_place(letters_);
  }

  static Word generator(GeneratorId g, int sign = +1) {
    Word w;
    w.letters_.push_back({g, static_cast<std::int8_t>(sign < 0 ? -1 : 1)});
    return w;
  }

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;

  // Stack-based free reduction; linear in the input length.
  static void reduce_in_place(std::vector<Letter>& v) {
    std::size_t top = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (top > 0 && cancels(v[top - 1], v[i])) {
        --top;
      } else {
        v[top++] = v[i];
      }
    }
    v.resize(top);
  }

 private:
  std::vector<Letter> letters_;
};

inline Word free_reduce(const Word& w) { return w; }

inline Word free_reduce(std::vector<Letter> letters) {
  return Word(std::move(letters));
}

inline Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  // Both factors are reduced, so only the seam can cancel.
  for (const Letter& l : v) {
    if (!out.empty() && cancels(out.back(), l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  Word w;
  return Word(std::move(out));
}

inline Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(inverse_of(*it));
  }
  return Word(std::move(out));
}

// Bracket convention: [x, y] = x^-1 y^-1 x y.
inline Word commutator(const Word& x, const Word& y) {
  return multiply(multiply(invert(x), invert(y)), multiply(x, y));
}

inline Word power(const Word& w, long long n) {
  const Word& base = n < 0 ? invert(w) : w;
  unsigned long long k = n < 0 ? -static_cast<unsigned long long>(n) : n;
  Word out;
  for (unsigned long long i = 0; i < k; ++i) out = multiply(out, base);
  return out;
}

// Conjugation x^z = z^-1 x z.
inline Word conjugate(const Word& x, const Word& z) {
  return multiply(multiply(invert(z), x), z);
}

// Signed count of occurrences of each generator; the image of w under
// abelianization, as a row of the relation matrix.
inline std::vector<long long> exponent_vector(const Word& w,
                                              std::size_t n_gens) {
  std::vector<long long> e(n_gens, 0);
  for (const Letter& l : w) {
    if (l.gen >= n_gens) {
      throw std::out_of_range(
          "exponent_vector: generator index " + std::to_string(l.gen) +
          " out of range (word uses more generators than declared)");
    }
    e[l.gen] += l.sign;
  }
  return e;
}

}  // namespace grouphom
