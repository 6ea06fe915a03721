#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grouphom/parse.hpp"
#include "grouphom/presentation.hpp"
#include "grouphom/word.hpp"

namespace grouphom {

// Strings over the doubled alphabet: group generator i contributes the
// letters 2i (the generator) and 2i+1 (its formal inverse), ranked
// g1 < g1^-1 < g2 < g2^-1 < ...
using MonoidWord = std::vector<std::uint32_t>;

inline std::uint32_t monoid_letter(Letter l) {
  return 2 * l.gen + (l.sign < 0 ? 1u : 0u);
}

inline Letter group_letter(std::uint32_t m) {
  return Letter{m / 2, static_cast<std::int8_t>((m & 1) ? -1 : 1)};
}

inline MonoidWord to_monoid(const std::vector<Letter>& letters) {
  MonoidWord out;
  out.reserve(letters.size());
  for (Letter l : letters) out.push_back(monoid_letter(l));
  return out;
}

inline MonoidWord to_monoid(const Word& w) { return to_monoid(w.letters()); }

inline std::vector<Letter> from_monoid(const MonoidWord& m) {
  std::vector<Letter> out;
  out.reserve(m.size());
  for (std::uint32_t c : m) out.push_back(group_letter(c));
  return out;
}

// Length first, then lexicographic by letter rank.
inline bool shortlex_less(const MonoidWord& a, const MonoidWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct MonoidPresentation {
  std::size_t n_letters = 0;
  std::vector<std::pair<MonoidWord, MonoidWord>> equations;
};

// Free-inverse equations for every generator, then relator = empty, in
// presentation order.
inline MonoidPresentation build_monoid_presentation(const Presentation& p) {
  MonoidPresentation mp;
  mp.n_letters = 2 * p.n_generators();
  for (std::size_t i = 0; i < p.n_generators(); ++i) {
    std::uint32_t g = static_cast<std::uint32_t>(2 * i);
    std::uint32_t gi = g + 1;
    mp.equations.push_back({MonoidWord{g, gi}, MonoidWord{}});
    mp.equations.push_back({MonoidWord{gi, g}, MonoidWord{}});
  }
  for (const Word& r : p.relators) {
    mp.equations.push_back({to_monoid(r), MonoidWord{}});
  }
  return mp;
}

struct RewriteRule {
  MonoidWord lhs, rhs;  // lhs > rhs in shortlex
};

enum class KbStatus { confluent, capped, timed_out };

inline const char* to_string(KbStatus s) {
  switch (s) {
    case KbStatus::confluent: return "confluent";
    case KbStatus::capped: return "capped";
    case KbStatus::timed_out: return "timed_out";
  }
  return "unknown";
}

struct KbStats {
  std::uint64_t equations_processed = 0;
  std::size_t n_rules = 0;
};

class RewritingSystem;

struct KbConfig {
  std::uint64_t max_equations = 500000;
  std::uint64_t tidy_interval = 100;
  // Hard bound on queued critical pairs; overflow drops the newest pair and
  // downgrades the run to capped instead of exhausting memory.
  std::size_t max_pending = 500000;
  std::optional<double> max_seconds;
  std::optional<std::size_t> max_rule_length;
  std::atomic<bool>* cancel = nullptr;
  std::function<void(const KbStats&)> progress;
  std::function<void(const RewritingSystem&)> on_system_complete;
};

// Knuth-Bendix completion of a monoid presentation under shortlex, plus
// reduction with the (possibly partial) rule set. Once complete() has
// returned, the object is immutable and reduce() is safe to call from
// multiple threads.
class RewritingSystem {
 public:
  explicit RewritingSystem(MonoidPresentation mp) : mp_(std::move(mp)) {
    trie_.push_back(TrieNode(mp_.n_letters));
  }

  // Rebuilds a system from a dumped rule set; the defining equations are
  // taken to be the rules themselves.
  static RewritingSystem from_rules(std::size_t n_letters,
                                    std::vector<RewriteRule> rules,
                                    KbStatus status,
                                    std::uint64_t equations_processed = 0) {
    MonoidPresentation mp;
    mp.n_letters = n_letters;
    for (const RewriteRule& r : rules) mp.equations.push_back({r.lhs, r.rhs});
    RewritingSystem rs(std::move(mp));
    for (RewriteRule& r : rules) {
      if (!shortlex_less(r.rhs, r.lhs)) {
        throw std::invalid_argument(
            "rewrite rule does not decrease the shortlex order");
      }
      rs.rules_.push_back(StoredRule{std::move(r.lhs), std::move(r.rhs), true});
      rs.trie_add(rs.rules_.back().lhs,
                  static_cast<std::int32_t>(rs.rules_.size() - 1));
    }
    rs.status_ = status;
    rs.processed_ = equations_processed;
    rs.completed_ = true;
    return rs;
  }

  KbStatus complete(const KbConfig& cfg = {}) {
    if (cfg.max_equations < 1) {
      throw std::invalid_argument("KbConfig: max_equations must be >= 1");
    }
    if (cfg.tidy_interval < 1) {
      throw std::invalid_argument("KbConfig: tidy_interval must be >= 1");
    }
    if (cfg.max_pending < 1) {
      throw std::invalid_argument("KbConfig: max_pending must be >= 1");
    }
    if (completed_) return status_;
    pending_cap_ = cfg.max_pending;
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& [u, v] : mp_.equations) enqueue(u, v);

    bool skipped_long = false;
    for (;;) {
      if (cfg.cancel && cfg.cancel->load(std::memory_order_relaxed)) {
        status_ = KbStatus::timed_out;
        break;
      }
      if (cfg.max_seconds) {
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        if (dt.count() > *cfg.max_seconds) {
          status_ = KbStatus::timed_out;
          break;
        }
      }
      if (pending_.empty()) {
        tidy();  // may requeue a stale rule as an equation
        if (pending_.empty()) {
          status_ = (skipped_long || pending_overflow_) ? KbStatus::capped
                                                        : KbStatus::confluent;
          break;
        }
        continue;
      }
      if (processed_ >= cfg.max_equations) {
        status_ = KbStatus::capped;
        break;
      }

      PendingEq eq = pending_.top();
      pending_.pop();
      ++processed_;
      MonoidWord u = reduce(eq.u);
      MonoidWord v = reduce(eq.v);
      if (u != v) {
        if (shortlex_less(u, v)) std::swap(u, v);
        if (cfg.max_rule_length && u.size() > *cfg.max_rule_length) {
          skipped_long = true;
        } else {
          add_rule(std::move(u), std::move(v));
        }
      }
      if (processed_ % cfg.tidy_interval == 0) {
        tidy();
        if (cfg.progress) {
          cfg.progress(KbStats{processed_, count_active()});
        }
      }
    }
    tidy();
    completed_ = true;
    if (cfg.on_system_complete) cfg.on_system_complete(*this);
    return status_;
  }

  // Leftmost-innermost rewriting to a fixpoint. Terminates because every
  // rule strictly decreases the shortlex rank of the scanned prefix.
  MonoidWord reduce(const MonoidWord& w) const {
    MonoidWord out;
    out.reserve(w.size());
    MonoidWord in(w.rbegin(), w.rend());  // top of the stack = next letter
    while (!in.empty()) {
      out.push_back(in.back());
      in.pop_back();
      // Search for a rule lhs ending at the new last letter.
      std::int32_t node = 0;
      for (std::size_t k = 0; k < out.size(); ++k) {
        node = trie_[static_cast<std::size_t>(node)]
                   .child[out[out.size() - 1 - k]];
        if (node < 0) break;
        std::int32_t rid = trie_[static_cast<std::size_t>(node)].rule;
        if (rid >= 0) {
          const StoredRule& r = rules_[static_cast<std::size_t>(rid)];
          out.resize(out.size() - r.lhs.size());
          in.insert(in.end(), r.rhs.rbegin(), r.rhs.rend());
          break;
        }
      }
    }
    return out;
  }

  // Translate a group word in, reduce, translate back (freely reducing).
  Word reduce_group_word(const Word& w) const {
    return Word(from_monoid(reduce(to_monoid(w))));
  }

  KbStatus status() const { return status_; }
  bool confluent() const { return status_ == KbStatus::confluent; }
  std::uint64_t equations_processed() const { return processed_; }
  std::size_t n_letters() const { return mp_.n_letters; }
  const MonoidPresentation& presentation() const { return mp_; }

  // Active rules, sorted by shortlex of lhs (deterministic; lhs are
  // pairwise distinct).
  std::vector<RewriteRule> rules() const {
    std::vector<RewriteRule> out;
    for (const StoredRule& r : rules_) {
      if (r.active) out.push_back({r.lhs, r.rhs});
    }
    std::sort(out.begin(), out.end(),
              [](const RewriteRule& x, const RewriteRule& y) {
                return shortlex_less(x.lhs, y.lhs);
              });
    return out;
  }

  // Breadth-first list of irreducible strings; std::nullopt once more than
  // max_count have been found (the language is too large or infinite).
  std::optional<std::vector<MonoidWord>> enumerate_normal_forms(
      std::uint64_t max_count) const {
    std::vector<MonoidWord> found;
    std::vector<MonoidWord> level{MonoidWord{}};
    if (max_count < 1) return std::nullopt;
    found.push_back(MonoidWord{});
    while (!level.empty()) {
      std::vector<MonoidWord> next;
      for (const MonoidWord& w : level) {
        for (std::uint32_t c = 0; c < mp_.n_letters; ++c) {
          MonoidWord wc = w;
          wc.push_back(c);
          if (has_suffix_redex(wc)) continue;
          if (found.size() + next.size() + 1 > max_count) return std::nullopt;
          next.push_back(std::move(wc));
        }
      }
      for (const MonoidWord& w : next) found.push_back(w);
      level = std::move(next);
    }
    return found;
  }

  std::optional<std::uint64_t> count_normal_forms(
      std::uint64_t max_count) const {
    auto nf = enumerate_normal_forms(max_count);
    if (!nf) return std::nullopt;
    return nf->size();
  }

 private:
  struct StoredRule {
    MonoidWord lhs, rhs;
    bool active = true;
  };

  struct TrieNode {
    explicit TrieNode(std::size_t n_letters)
        : child(n_letters, -1) {}
    std::vector<std::int32_t> child;
    std::int32_t rule = -1;
  };

  struct PendingEq {
    std::size_t weight;
    std::uint64_t seq;
    MonoidWord u, v;
  };
  struct PendingOrder {
    bool operator()(const PendingEq& a, const PendingEq& b) const {
      if (a.weight != b.weight) return a.weight > b.weight;
      return a.seq > b.seq;  // min-heap: earliest first on ties
    }
  };

  // Normalize both sides immediately: pairs that already join never enter
  // the queue (they still count as processed), which keeps the queue from
  // flooding with consequences of long relators.
  void enqueue(const MonoidWord& u, const MonoidWord& v) {
    MonoidWord ru = reduce(u);
    MonoidWord rv = reduce(v);
    if (ru == rv) {
      ++processed_;
      return;
    }
    if (pending_.size() >= pending_cap_) {
      pending_overflow_ = true;
      return;
    }
    std::size_t w = ru.size() + rv.size();
    pending_.push(PendingEq{w, seq_++, std::move(ru), std::move(rv)});
  }

  // Walk the trie along the reversed lhs, creating nodes as needed.
  void trie_add(const MonoidWord& lhs, std::int32_t rule_id) {
    std::size_t node = 0;
    for (auto it = lhs.rbegin(); it != lhs.rend(); ++it) {
      std::int32_t& slot = trie_[node].child[*it];
      if (slot < 0) {
        slot = static_cast<std::int32_t>(trie_.size());
        trie_.push_back(TrieNode(mp_.n_letters));
      }
      node = static_cast<std::size_t>(slot);
    }
    trie_[node].rule = rule_id;
  }

  void trie_clear(const MonoidWord& lhs) {
    std::size_t node = 0;
    for (auto it = lhs.rbegin(); it != lhs.rend(); ++it) {
      std::int32_t slot = trie_[node].child[*it];
      if (slot < 0) return;
      node = static_cast<std::size_t>(slot);
    }
    trie_[node].rule = -1;
  }

  void rebuild_trie() {
    trie_.clear();
    trie_.push_back(TrieNode(mp_.n_letters));
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (rules_[i].active) {
        trie_add(rules_[i].lhs, static_cast<std::int32_t>(i));
      }
    }
  }

  // Does some active rule's lhs (other than exclude) occur in w?
  bool find_redex(const MonoidWord& w, std::int32_t exclude) const {
    for (std::size_t end = 1; end <= w.size(); ++end) {
      std::int32_t node = 0;
      for (std::size_t k = 0; k < end; ++k) {
        node = trie_[static_cast<std::size_t>(node)].child[w[end - 1 - k]];
        if (node < 0) break;
        std::int32_t rid = trie_[static_cast<std::size_t>(node)].rule;
        if (rid >= 0 && rid != exclude) return true;
      }
    }
    return false;
  }

  // Redex ending at the last letter (for incremental normal-form BFS).
  bool has_suffix_redex(const MonoidWord& w) const {
    std::int32_t node = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      node = trie_[static_cast<std::size_t>(node)].child[w[w.size() - 1 - k]];
      if (node < 0) return false;
      if (trie_[static_cast<std::size_t>(node)].rule >= 0) return true;
    }
    return false;
  }

  static bool contains(const MonoidWord& haystack, const MonoidWord& needle) {
    return std::search(haystack.begin(), haystack.end(), needle.begin(),
                       needle.end()) != haystack.end();
  }

  void add_rule(MonoidWord lhs, MonoidWord rhs) {
    std::int32_t id = static_cast<std::int32_t>(rules_.size());
    rules_.push_back(StoredRule{std::move(lhs), std::move(rhs), true});
    const MonoidWord& l = rules_.back().lhs;
    trie_add(l, id);

    // Knock out or renormalize older rules the new one touches. A stale
    // lhs is requeued as an equation, which also covers critical pairs
    // where the new lhs sits strictly inside an old one.
    for (std::size_t i = 0; i + 1 < rules_.size(); ++i) {
      StoredRule& o = rules_[i];
      if (!o.active) continue;
      if (contains(o.lhs, l)) {
        o.active = false;
        trie_clear(o.lhs);
        enqueue(o.lhs, o.rhs);
      } else if (contains(o.rhs, l)) {
        o.rhs = reduce(o.rhs);
      }
    }

    // Boundary overlaps of the new rule with every active rule, both ways.
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (!rules_[i].active) continue;
      overlap(rules_.back(), rules_[i], /*same=*/i + 1 == rules_.size());
      if (i + 1 != rules_.size()) overlap(rules_[i], rules_.back(), false);
    }
  }

  // Critical pairs from a suffix of a.lhs matching a prefix of b.lhs.
  void overlap(const StoredRule& a, const StoredRule& b, bool same) {
    const MonoidWord& la = a.lhs;
    const MonoidWord& lb = b.lhs;
    std::size_t kmax = std::min(la.size(), lb.size());
    for (std::size_t k = 1; k <= kmax; ++k) {
      if (same && k == la.size()) break;  // full self-overlap is trivial
      if (!std::equal(la.end() - static_cast<std::ptrdiff_t>(k), la.end(),
                      lb.begin())) {
        continue;
      }
      MonoidWord left = a.rhs;  // rewrite the la part of la·lb[k..]
      left.insert(left.end(), lb.begin() + static_cast<std::ptrdiff_t>(k),
                  lb.end());
      MonoidWord right(la.begin(),
                       la.end() - static_cast<std::ptrdiff_t>(k));
      right.insert(right.end(), b.rhs.begin(), b.rhs.end());
      enqueue(std::move(left), std::move(right));
    }
  }

  void tidy() {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      StoredRule& r = rules_[i];
      if (!r.active) continue;
      if (find_redex(r.lhs, static_cast<std::int32_t>(i))) {
        r.active = false;
        trie_clear(r.lhs);
        enqueue(r.lhs, r.rhs);
      } else {
        r.rhs = reduce(r.rhs);
      }
    }
    rebuild_trie();
  }

  std::size_t count_active() const {
    std::size_t n = 0;
    for (const StoredRule& r : rules_) n += r.active ? 1 : 0;
    return n;
  }

  MonoidPresentation mp_;
  std::vector<StoredRule> rules_;
  std::vector<TrieNode> trie_;
  std::priority_queue<PendingEq, std::vector<PendingEq>, PendingOrder> pending_;
  std::size_t pending_cap_ = 500000;
  bool pending_overflow_ = false;
  std::uint64_t seq_ = 0;
  std::uint64_t processed_ = 0;
  KbStatus status_ = KbStatus::capped;
  bool completed_ = false;
};

// --- rule-set dumps ---------------------------------------------------------
//
// One `lhs -> rhs` per line in the presentation's word grammar (raw letter
// sequences; `1` denotes the empty string), preceded by `# status:` and
// `# equations_processed:` comments.

inline void dump_rules(std::ostream& os, const RewritingSystem& rs,
                       const Presentation& pres) {
  os << "# status: " << to_string(rs.status()) << "\n";
  os << "# equations_processed: " << rs.equations_processed() << "\n";
  for (const RewriteRule& r : rs.rules()) {
    os << format_letters(from_monoid(r.lhs), pres.generator_names) << " -> "
       << format_letters(from_monoid(r.rhs), pres.generator_names) << "\n";
  }
}

inline std::string dump_rules(const RewritingSystem& rs,
                              const Presentation& pres) {
  std::ostringstream os;
  dump_rules(os, rs, pres);
  return os.str();
}

inline RewritingSystem load_rules(std::istream& in, const Presentation& pres) {
  KbStatus status = KbStatus::capped;
  std::uint64_t processed = 0;
  std::vector<RewriteRule> rules;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv = line;
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) {
      sv.remove_prefix(1);
    }
    if (sv.empty()) continue;
    if (sv.front() == '#') {
      constexpr std::string_view kStatus = "# status:";
      if (std::string_view(line).substr(0, kStatus.size()) == kStatus) {
        std::string v(std::string_view(line).substr(kStatus.size()));
        v.erase(0, v.find_first_not_of(" \t"));
        v.erase(v.find_last_not_of(" \t\r") + 1);
        if (v == "confluent") status = KbStatus::confluent;
        else if (v == "capped") status = KbStatus::capped;
        else if (v == "timed_out") status = KbStatus::timed_out;
        else throw ParseError(lineno, 1, "unknown status '" + v + "'");
      }
      constexpr std::string_view kProcessed = "# equations_processed:";
      if (std::string_view(line).substr(0, kProcessed.size()) == kProcessed) {
        std::string v(std::string_view(line).substr(kProcessed.size()));
        try {
          processed = std::stoull(v);
        } catch (const std::exception&) {
          throw ParseError(lineno, 1, "bad equations_processed count");
        }
      }
      continue;
    }
    std::size_t arrow = line.find("->");
    if (arrow == std::string::npos) {
      throw ParseError(lineno, 1, "rule line missing '->'");
    }
    std::vector<Letter> lhs = parse_letters(line.substr(0, arrow), pres);
    std::vector<Letter> rhs = parse_letters(line.substr(arrow + 2), pres);
    rules.push_back(RewriteRule{to_monoid(lhs), to_monoid(rhs)});
  }
  return RewritingSystem::from_rules(2 * pres.n_generators(),
                                     std::move(rules), status, processed);
}

inline RewritingSystem load_rules(const std::string& text,
                                  const Presentation& pres) {
  std::istringstream in(text);
  return load_rules(in, pres);
}

}  // namespace grouphom
