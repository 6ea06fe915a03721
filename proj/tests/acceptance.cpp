// Acceptance gate: one line per criterion, nonzero exit if any fails.
//
//   1  symmetric-group pipeline end to end, under 60 s
//   2  universal-coefficients oracle suite, each case under 30 s
//   3  Smith normal form property suite (1000 random matrices)
//   4  normal-form counts of the finite fixtures
//   5  commutator identities on 10^4 random triples
//   6  abelianized soundness of every rule produced by criteria 1, 2, 4
//   7  pruning monotonicity and re-verification of removed relators
//   8  simplification preserves invariants and normal-form counts
//   9  SL2 fixtures parse, validate, and clear their abelian phases
//      (full bound computations are opt-in: GROUPHOM_LONG_TESTS=1)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "grouphom/fixtures.hpp"
#include "grouphom/hopf.hpp"
#include "grouphom/rewrite.hpp"
#include "grouphom/smith.hpp"
#include "grouphom/tietze.hpp"
#include "testing.hpp"

using namespace grouphom;

namespace {

int g_failures = 0;

struct Criterion {
  int number;
  std::string title;
  bool ok = true;
  std::string why;
  std::chrono::steady_clock::time_point t0 =
      std::chrono::steady_clock::now();

  Criterion(int n, std::string t) : number(n), title(std::move(t)) {}

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) why = what;
      ok = false;
    }
  }

  void finish() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (ok) {
      std::printf("PASS criterion %d: %s (%lld ms)\n", number, title.c_str(),
                  static_cast<long long>(ms));
    } else {
      std::printf("FAIL criterion %d: %s -- %s\n", number, title.c_str(),
                  why.c_str());
      ++g_failures;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fixture_path(const std::string& name) {
  return std::string(GROUPHOM_FIXTURE_DIR) + "/" + name + ".pres";
}

// Completed systems gathered while running criteria 1, 2, and 4, checked
// for abelianized soundness by criterion 6.
std::vector<RewritingSystem> g_systems;

KbConfig collecting_config() {
  KbConfig cfg;
  cfg.on_system_complete = [](const RewritingSystem& rs) {
    g_systems.push_back(rs);
  };
  return cfg;
}

// ---- criterion 3 helpers ---------------------------------------------------

IntMatrix random_matrix(testutil::Rng& rng, std::size_t rows,
                        std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.in_range(-9, 9);
  }
  return m;
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n,
                                                      std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Int minor_gcd(const IntMatrix& m, std::size_t k) {
  Int g = 0;
  for (const auto& ri : subsets_of_size(m.rows(), k)) {
    for (const auto& ci : subsets_of_size(m.cols(), k)) {
      IntMatrix s(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) s.at(i, j) = m.at(ri[i], ci[j]);
      }
      g = boost::multiprecision::gcd(g, determinant(s));
    }
  }
  return g;
}

bool snf_contract_holds(const IntMatrix& m, std::string& why) {
  const SnfResult snf = smith_normal_form(m);
  const std::size_t nmin = std::min(m.rows(), m.cols());
  const IntMatrix prod = snf.left * m * snf.right;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Int want = (i == j && i < nmin) ? snf.diagonal[i] : Int(0);
      if (prod.at(i, j) != want) {
        why = "left*M*right is not the diagonal";
        return false;
      }
    }
  }
  const Int dl = determinant(snf.left), dr = determinant(snf.right);
  if ((dl != 1 && dl != -1) || (dr != 1 && dr != -1)) {
    why = "transform is not unimodular";
    return false;
  }
  Int prod_d = 1;
  for (std::size_t k = 1; k <= nmin; ++k) {
    const Int& dk = snf.diagonal[k - 1];
    if (dk < 0) {
      why = "negative diagonal entry";
      return false;
    }
    if (k < nmin) {
      const Int& dn = snf.diagonal[k];
      if (dk == 0 ? dn != 0 : dn % dk != 0) {
        why = "divisibility chain broken";
        return false;
      }
    }
    prod_d *= dk;
    if (prod_d != minor_gcd(m, k)) {
      why = "d1*...*dk disagrees with the minor gcd oracle";
      return false;
    }
  }
  return true;
}

// ---- criterion 6 helper ------------------------------------------------------

std::vector<Int> monoid_exponents(const MonoidWord& w, std::size_t n_gens) {
  std::vector<Int> e(n_gens, 0);
  for (std::uint32_t c : w) e[c / 2] += (c & 1) ? -1 : 1;
  return e;
}

bool rules_abelianized_sound(const RewritingSystem& rs, std::string& why) {
  const std::size_t n = rs.n_letters() / 2;
  const auto& eqs = rs.presentation().equations;
  IntMatrix m(eqs.size(), n);
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    std::vector<Int> eu = monoid_exponents(eqs[i].first, n);
    std::vector<Int> ev = monoid_exponents(eqs[i].second, n);
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = eu[j] - ev[j];
  }
  RowLattice lattice(m);
  for (const RewriteRule& r : rs.rules()) {
    std::vector<Int> el = monoid_exponents(r.lhs, n);
    std::vector<Int> er = monoid_exponents(r.rhs, n);
    std::vector<Int> diff(n);
    for (std::size_t j = 0; j < n; ++j) diff[j] = el[j] - er[j];
    if (!lattice.contains(diff)) {
      why = "rule exponent difference escapes the relator lattice";
      return false;
    }
  }
  return true;
}

// ---- criteria ---------------------------------------------------------------

void criterion_1() {
  Criterion c(1, "symmetric-group pipeline is exact and fast");
  auto t0 = std::chrono::steady_clock::now();
  testutil::CmdResult r =
      testutil::run_cli("h2 " + fixture_path("sigma5") + " -p 2");
  const double secs = seconds_since(t0);
  c.require(r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
  c.require(r.out.find("a = 1\n") != std::string::npos, "a != 1");
  c.require(r.out.find("b = 1\n") != std::string::npos, "b != 1");
  c.require(r.out.find("c = 3\n") != std::string::npos, "c != 3");
  c.require(r.out.find("e = 3\n") != std::string::npos, "e != 3");
  const std::string tail = "d = 2 (exact: rewriting confluent)\n";
  c.require(r.out.size() >= tail.size() &&
                r.out.compare(r.out.size() - tail.size(), tail.size(),
                              tail) == 0,
            "report does not end with the exact d = 2 line");
  c.require(secs < 60.0, "took " + std::to_string(secs) + " s");

  // gather this pipeline's rewriting systems for criterion 6
  Presentation p = load_fixture("sigma5");
  HopfReport rep = second_homology_bound(p, PrimeField(2),
                                         RelatorSelection::all_of(p),
                                         collecting_config());
  c.require(rep.d == 2 && rep.exact, "in-process rerun disagrees");
  c.finish();
}

void criterion_2() {
  Criterion c(2, "universal-coefficients oracle suite");
  struct Case {
    const char* fixture;
    std::uint64_t p;
    long long d;
  };
  const Case cases[] = {
      {"z4", 2, 1},    {"z4", 3, 0},    {"z6", 2, 1},   {"z6", 3, 1},
      {"free1", 2, 0}, {"free1", 3, 0}, {"free1", 5, 0},
      {"free2", 2, 0}, {"free2", 3, 0}, {"free2", 5, 0},
      {"free3", 2, 0}, {"free3", 3, 0}, {"free3", 5, 0},
      {"zxz", 2, 1},   {"zxz", 3, 1},   {"z2z2", 2, 3},
  };
  for (const Case& k : cases) {
    auto t0 = std::chrono::steady_clock::now();
    Presentation p = load_fixture(k.fixture);
    HopfReport rep = second_homology_bound(p, PrimeField(k.p),
                                           RelatorSelection::all_of(p),
                                           collecting_config());
    const double secs = seconds_since(t0);
    const std::string label =
        std::string(k.fixture) + " at p = " + std::to_string(k.p);
    c.require(rep.d == k.d, label + ": d = " + std::to_string(rep.d) +
                                ", expected " + std::to_string(k.d));
    c.require(rep.exact, label + ": result is not exact");
    c.require(secs < 30.0, label + ": took " + std::to_string(secs) + " s");
  }
  c.finish();
}

void criterion_3() {
  Criterion c(3, "Smith normal form property suite");
  testutil::Rng rng(424242);
  std::string why;
  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    const std::size_t rows = 1 + rng.below(5);
    const std::size_t cols = 1 + rng.below(5);
    const IntMatrix m = random_matrix(rng, rows, cols);
    c.require(snf_contract_holds(m, why),
              "trial " + std::to_string(trial) + ": " + why);
  }
  c.finish();
}

void criterion_4() {
  Criterion c(4, "normal-form counts match the group orders");
  struct Case {
    const char* fixture;
    std::uint64_t order;
  };
  const Case cases[] = {{"z4", 4}, {"s3", 6}, {"sigma5", 120}, {"z2z2", 4}};
  for (const Case& k : cases) {
    RewritingSystem rs(build_monoid_presentation(load_fixture(k.fixture)));
    KbStatus st = rs.complete(collecting_config());
    const std::string label = k.fixture;
    c.require(st == KbStatus::confluent, label + ": completion not confluent");
    auto count = rs.count_normal_forms(100000);
    c.require(count.has_value() && *count == k.order,
              label + ": normal-form count mismatch");
  }
  c.finish();
}

void criterion_5() {
  Criterion c(5, "commutator identities on random triples");
  testutil::Rng rng(1729);
  for (int i = 0; i < 10000 && c.ok; ++i) {
    Word x = testutil::random_word(rng, 8, 3);
    Word y = testutil::random_word(rng, 8, 3);
    Word z = testutil::random_word(rng, 8, 3);
    c.require(commutator(multiply(x, y), z) ==
                  multiply(conjugate(commutator(x, z), y), commutator(y, z)),
              "[xy,z] = [x,z]^y [y,z] failed at trial " + std::to_string(i));
    c.require(commutator(x, conjugate(y, z)) ==
                  multiply(commutator(multiply(z, x), y), commutator(y, z)),
              "[x,y^z] = [zx,y][y,z] failed at trial " + std::to_string(i));
  }
  c.finish();
}

void criterion_6() {
  Criterion c(6, "abelianized soundness of every produced rule");
  c.require(!g_systems.empty(), "no rewriting systems were collected");
  std::size_t n_rules = 0;
  std::string why;
  for (const RewritingSystem& rs : g_systems) {
    n_rules += rs.rules().size();
    c.require(rules_abelianized_sound(rs, why), why);
    if (!c.ok) break;
  }
  if (c.ok) {
    c.title += " (" + std::to_string(g_systems.size()) + " systems, " +
               std::to_string(n_rules) + " rules)";
  }
  c.finish();
}

void criterion_7() {
  Criterion c(7, "pruning is monotone and removals re-verify");
  Presentation p = load_fixture("z4_redundant");
  PrimeField two(2);
  HopfReport rep =
      second_homology_bound(p, two, RelatorSelection::all_of(p));
  for (std::size_t i = 1; i < rep.pass_history.size(); ++i) {
    c.require(rep.pass_history[i] <= rep.pass_history[i - 1],
              "pass history increased");
  }
  c.require(rep.exact, "driver did not stabilize within the pass limit");
  c.require(rep.e == 1 && rep.survivors.indices ==
                              std::vector<std::size_t>{0},
            "unexpected survivor set");
  c.require(rep.d == 1, "d != 1");

  // every discarded relator must still reduce to the identity against the
  // surviving selection
  for (std::size_t idx = 0; idx < p.n_relators(); ++idx) {
    if (rep.survivors.contains(idx)) continue;
    auto [w, status] = reduce_word(p, p.relators[idx], rep.survivors, two);
    c.require(w.empty(), "removed relator is not trivial on re-check");
    c.require(status == KbStatus::confluent,
              "re-check completion not confluent");
  }
  c.finish();
}

void criterion_8() {
  Criterion c(8, "simplification preserves invariants and counts");
  for (const auto& entry : fixture_table()) {
    Presentation p = load_fixture(entry.name);
    Presentation s = tietze_simplify(p);
    const std::string label = entry.name;
    c.require(abelian_invariants(s) == abelian_invariants(p),
              label + ": abelian invariants changed");
    c.require(s.n_generators() <= p.n_generators(),
              label + ": generator count grew");
  }
  struct Case {
    const char* fixture;
    std::uint64_t order;
  };
  const Case cases[] = {{"z4", 4}, {"s3", 6}, {"sigma5", 120}, {"z2z2", 4}};
  for (const Case& k : cases) {
    Presentation s = tietze_simplify(load_fixture(k.fixture));
    RewritingSystem rs(build_monoid_presentation(s));
    c.require(rs.complete() == KbStatus::confluent,
              std::string(k.fixture) + ": simplified completion not confluent");
    auto count = rs.count_normal_forms(100000);
    c.require(count.has_value() && *count == k.order,
              std::string(k.fixture) + ": normal-form count changed");
  }
  c.finish();
}

void criterion_9() {
  Criterion c(9, "SL2 fixtures parse and clear their abelian phases");
  struct Case {
    const char* fixture;
    std::size_t gens, relators;
    std::uint64_t p;
    long long d_max;
  };
  const Case cases[] = {
      {"sl2_3", 8, 15, 3, 0},
      {"sl2_5", 11, 28, 5, 0},
      {"sl2_7", 14, 64, 7, 6},
  };
  for (const Case& k : cases) {
    Presentation p = load_fixture(k.fixture);
    const std::string label = k.fixture;
    c.require(p.n_generators() == k.gens,
              label + ": generator count " + std::to_string(p.n_generators()));
    c.require(p.n_relators() == k.relators,
              label + ": relator count " + std::to_string(p.n_relators()));
    try {
      p.validate();
    } catch (const std::exception& e) {
      c.require(false, label + ": " + e.what());
    }

    auto t0 = std::chrono::steady_clock::now();
    PrimeField field(k.p);
    std::size_t a = tor_dimension(p, field);
    Presentation pb = p;
    for (Word& w : generator_pair_commutators(p)) {
      pb.relators.push_back(std::move(w));
    }
    std::uint64_t b = prime_primary_rank(pb, field);
    Presentation pc;
    pc.generator_names = p.generator_names;
    pc.relators = power_relators(p, k.p);
    for (Word& w : generator_pair_commutators(p)) {
      pc.relators.push_back(std::move(w));
    }
    std::uint64_t b2 = prime_primary_rank(pc, field);
    const double secs = seconds_since(t0);
    c.require(secs < 600.0, label + ": abelian phases took " +
                                std::to_string(secs) + " s");
    // a, b, c are small nonnegative counts; the real assertion is that the
    // phases complete, so just consume them
    (void)a;
    (void)b;
    (void)b2;

    if (std::getenv("GROUPHOM_LONG_TESTS")) {
      // The published computations for these groups ran for hours to days;
      // give the completions room and let a capped run fail honestly.
      KbConfig big;
      big.max_equations = 200000000;
      big.max_pending = 10000000;
      HopfReport rep = second_homology_bound(p, field,
                                             RelatorSelection::all_of(p), big);
      c.require(rep.exact, label + ": bound is not exact (completion capped)");
      c.require(rep.d <= k.d_max,
                label + ": d = " + std::to_string(rep.d) + " exceeds " +
                    std::to_string(k.d_max));
    }
  }
  if (!std::getenv("GROUPHOM_LONG_TESTS")) {
    c.title += " (long tier skipped; set GROUPHOM_LONG_TESTS=1 to enable)";
  }
  c.finish();
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
