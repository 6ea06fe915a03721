#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "grouphom/abelian.hpp"
#include "grouphom/presentation.hpp"
#include "grouphom/rewrite.hpp"
#include "grouphom/word.hpp"

namespace grouphom {

// [g_i, g_j] for every ordered pair, row-major, i = j included.
inline std::vector<Word> generator_pair_commutators(const Presentation& p) {
  std::vector<Word> out;
  out.reserve(p.n_generators() * p.n_generators());
  for (GeneratorId i = 0; i < p.n_generators(); ++i) {
    for (GeneratorId j = 0; j < p.n_generators(); ++j) {
      out.push_back(commutator(Word::generator(i), Word::generator(j)));
    }
  }
  return out;
}

// The quotient F/[F,R]R^pR': same generators, relators = the
// generator-relator commutators, then the p-th powers of all relators,
// then the selected sublist, in that order.
struct HopfQuotient {
  Presentation base;
  PrimeField prime;
  RelatorSelection sublist;
  Presentation derived_presentation;
};

inline HopfQuotient build_hopf_quotient(const Presentation& base,
                                        const PrimeField& k,
                                        const RelatorSelection& sublist) {
  sublist.validate(base);
  Presentation derived;
  derived.generator_names = base.generator_names;
  for (Word& w : generator_relator_commutators(base)) {
    derived.relators.push_back(std::move(w));
  }
  for (Word& w : power_relators(base, k.p)) {
    derived.relators.push_back(std::move(w));
  }
  for (std::size_t idx : sublist.indices) {
    derived.relators.push_back(base.relators[idx]);
  }
  return HopfQuotient{base, k, sublist, std::move(derived)};
}

namespace detail {

// Completions already run in this computation, keyed by the sublist that
// defined the quotient. Statuses are recorded once per executed run.
struct KbRunContext {
  const Presentation* base = nullptr;
  const PrimeField* prime = nullptr;
  const KbConfig* cfg = nullptr;
  std::map<std::vector<std::size_t>, std::shared_ptr<const RewritingSystem>>
      cache;
  std::vector<KbStatus> statuses;

  const RewritingSystem& system_for(const RelatorSelection& sublist) {
    auto it = cache.find(sublist.indices);
    if (it != cache.end()) return *it->second;
    HopfQuotient q = build_hopf_quotient(*base, *prime, sublist);
    auto rs = std::make_shared<RewritingSystem>(
        build_monoid_presentation(q.derived_presentation));
    rs->complete(*cfg);
    statuses.push_back(rs->status());
    return *cache.emplace(sublist.indices, std::move(rs)).first->second;
  }

  bool all_confluent() const {
    for (KbStatus s : statuses) {
      if (s != KbStatus::confluent) return false;
    }
    return true;
  }
};

// One sweep of the candidate list; removals take effect immediately.
inline void find_basis_pass(KbRunContext& ctx, RelatorSelection& current) {
  std::vector<std::size_t> snapshot = current.indices;
  for (std::size_t x : snapshot) {
    RelatorSelection rest;
    for (std::size_t idx : current.indices) {
      if (idx != x) rest.indices.push_back(idx);
    }
    const RewritingSystem& rs = ctx.system_for(rest);
    Word reduced = rs.reduce_group_word(ctx.base->relators[x]);
    if (reduced.empty()) current = std::move(rest);
  }
}

}  // namespace detail

// Normal form of z in F/[F,R]R^pR', plus the completion status that
// produced it. A non-confluent status makes "nonempty" indeterminate.
inline std::pair<Word, KbStatus> reduce_word(const Presentation& base,
                                             const Word& z,
                                             const RelatorSelection& sublist,
                                             const PrimeField& k,
                                             const KbConfig& cfg = {}) {
  HopfQuotient q = build_hopf_quotient(base, k, sublist);
  RewritingSystem rs(build_monoid_presentation(q.derived_presentation));
  rs.complete(cfg);
  return {rs.reduce_group_word(z), rs.status()};
}

struct FindBasisResult {
  RelatorSelection surviving;
  std::size_t e = 0;
  bool all_confluent = true;
};

// One pass of the pruning loop: drop every selected relator that reduces
// to the identity in the quotient built from the other survivors. Dropping
// is sound regardless of confluence; keeping is indeterminate without it.
inline FindBasisResult find_basis(const Presentation& base,
                                  const PrimeField& k,
                                  const RelatorSelection& initial,
                                  const KbConfig& cfg = {}) {
  initial.validate(base);
  detail::KbRunContext ctx;
  ctx.base = &base;
  ctx.prime = &k;
  ctx.cfg = &cfg;
  RelatorSelection current = initial;
  detail::find_basis_pass(ctx, current);
  FindBasisResult out;
  out.e = current.indices.size();
  out.surviving = std::move(current);
  out.all_confluent = ctx.all_confluent();
  return out;
}

struct HopfReport {
  std::size_t a = 0, b = 0, c = 0, e = 0;
  long long d = 0;  // a + b - c + e
  bool exact = false;
  bool all_confluent = true;
  std::vector<std::size_t> pass_history;
  RelatorSelection survivors;
  std::vector<Word> survivor_words;
  std::vector<KbStatus> statuses;
  std::map<std::string, std::uint64_t> wall_times_ms;
};

// The full bound: a = dim Tor(H1, k); b, c the orders (as p-exponents) of
// the p-primary torsion of F/R[F,F] and F/R^p[F,F]; e from repeated
// pruning passes until the survivor set stabilizes or max_passes is hit.
// d = a + b - c + e bounds dim H2(G;k) from above, exactly when every
// completion was confluent and the final pass removed nothing.
inline HopfReport second_homology_bound(const Presentation& base,
                                        const PrimeField& k,
                                        const RelatorSelection& initial,
                                        const KbConfig& cfg = {},
                                        std::size_t max_passes = 8) {
  initial.validate(base);
  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point t0) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() -
                                                              t0)
            .count());
  };
  auto t_total = clock::now();
  HopfReport rep;

  auto t_abelian = clock::now();
  rep.a = tor_dimension(base, k);
  {
    Presentation pb = base;
    for (Word& w : generator_pair_commutators(base)) {
      pb.relators.push_back(std::move(w));
    }
    rep.b = static_cast<std::size_t>(prime_primary_rank(pb, k));
    Presentation pc;
    pc.generator_names = base.generator_names;
    pc.relators = power_relators(base, k.p);
    for (Word& w : generator_pair_commutators(base)) {
      pc.relators.push_back(std::move(w));
    }
    rep.c = static_cast<std::size_t>(prime_primary_rank(pc, k));
  }
  rep.wall_times_ms["abelian"] = ms_since(t_abelian);

  auto t_basis = clock::now();
  detail::KbRunContext ctx;
  ctx.base = &base;
  ctx.prime = &k;
  ctx.cfg = &cfg;
  RelatorSelection current = initial;
  bool stable = false;
  for (std::size_t pass = 0; pass < max_passes; ++pass) {
    std::vector<std::size_t> before = current.indices;
    detail::find_basis_pass(ctx, current);
    rep.pass_history.push_back(current.indices.size());
    if (current.indices == before) {
      stable = true;
      break;
    }
  }
  rep.wall_times_ms["find_basis"] = ms_since(t_basis);

  rep.e = current.indices.size();
  rep.d = static_cast<long long>(rep.a) + static_cast<long long>(rep.b) -
          static_cast<long long>(rep.c) + static_cast<long long>(rep.e);
  rep.statuses = ctx.statuses;
  rep.all_confluent = ctx.all_confluent();
  rep.exact = rep.all_confluent && stable;
  for (std::size_t idx : current.indices) {
    rep.survivor_words.push_back(base.relators[idx]);
  }
  rep.survivors = std::move(current);
  rep.wall_times_ms["total"] = ms_since(t_total);
  return rep;
}

}  // namespace grouphom
