// Command-line driver: first and second homology of finitely presented
// groups, Knuth-Bendix completion, word reduction, and presentation
// simplification.
//
// Exit codes: 0 success; 1 parse/validation error; 2 result is not
// definitive (resource cap, non-confluent system, or interrupt) with a
// partial report still printed; 3 internal invariant violation.

#include <atomic>
#include <csignal>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grouphom/abelian.hpp"
#include "grouphom/fixtures.hpp"
#include "grouphom/hopf.hpp"
#include "grouphom/json_report.hpp"
#include "grouphom/parse.hpp"
#include "grouphom/presentation.hpp"
#include "grouphom/rewrite.hpp"
#include "grouphom/smith.hpp"
#include "grouphom/tietze.hpp"

namespace {

std::atomic<bool> g_cancel{false};

void on_interrupt(int) { g_cancel.store(true); }

grouphom::Presentation load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open input file: " + path);
  }
  grouphom::Presentation p = grouphom::parse_presentation(in);
  p.validate();
  return p;
}

// --sublist takes 1-based indices into the presentation actually loaded
// (after --simplify-first, if given).
grouphom::RelatorSelection resolve_sublist(
    const std::vector<std::size_t>& one_based, bool given,
    const grouphom::Presentation& p, bool default_all) {
  grouphom::RelatorSelection sel;
  if (!given) {
    return default_all ? grouphom::RelatorSelection::all_of(p) : sel;
  }
  for (std::size_t idx : one_based) {
    if (idx < 1 || idx > p.n_relators()) {
      throw std::invalid_argument("--sublist index " + std::to_string(idx) +
                                  " out of range 1.." +
                                  std::to_string(p.n_relators()));
    }
    sel.indices.push_back(idx - 1);
  }
  sel.validate(p);
  return sel;
}

std::string invariants_text(const std::vector<grouphom::Int>& inv) {
  std::string out = "[";
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (i) out += ", ";
    out += inv[i].str();
  }
  out += "]";
  return out;
}

struct KbFlags {
  std::uint64_t max_equations = 500000;
  std::uint64_t tidy_interval = 100;
  std::size_t max_pending = 500000;
  double max_seconds = 0;  // 0 = unbounded
  bool has_max_seconds = false;

  grouphom::KbConfig to_config() const {
    grouphom::KbConfig cfg;
    cfg.max_equations = max_equations;
    cfg.tidy_interval = tidy_interval;
    cfg.max_pending = max_pending;
    if (has_max_seconds) cfg.max_seconds = max_seconds;
    cfg.cancel = &g_cancel;
    return cfg;
  }
};

void add_kb_flags(CLI::App* cmd, KbFlags& kb) {
  cmd->add_option("--max-eqns", kb.max_equations,
                  "Cap on processed equations during completion")
      ->capture_default_str();
  cmd->add_option("--tidy", kb.tidy_interval,
                  "Interreduce the rule set every N equations")
      ->capture_default_str();
  cmd->add_option("--max-pending", kb.max_pending,
                  "Cap on queued critical pairs during completion")
      ->capture_default_str();
  cmd->add_option("--max-seconds", kb.max_seconds,
                  "Wall-clock budget per completion (unbounded if absent)")
      ->each([&kb](const std::string&) { kb.has_max_seconds = true; });
}

int run(int argc, char** argv) {
  CLI::App app{
      "Exact H1 and upper bounds on dim H2 for finitely presented groups"};
  app.require_subcommand(1);

  std::string input_path;
  std::uint64_t prime_value = 0;
  bool json_out = false;

  // h1 -------------------------------------------------------------------
  auto* h1 = app.add_subcommand(
      "h1", "Abelian invariants of the abelianization (0 = free factor)");
  h1->add_option("input", input_path, "Presentation file")->required();
  h1->add_flag("--json", json_out, "Emit a JSON object");

  // h1modp / tor / prank ---------------------------------------------------
  auto* h1modp = app.add_subcommand("h1modp", "dim of H1 with mod-p coefficients");
  auto* tor = app.add_subcommand("tor", "dim of Tor(H1, F_p)");
  auto* prank =
      app.add_subcommand("prank", "log_p of the p-primary torsion order of H1");
  for (CLI::App* cmd : {h1modp, tor, prank}) {
    cmd->add_option("input", input_path, "Presentation file")->required();
    cmd->add_option("-p,--prime", prime_value, "Coefficient prime")->required();
    cmd->add_flag("--json", json_out, "Emit a JSON object");
  }

  // h2 ---------------------------------------------------------------------
  auto* h2 = app.add_subcommand(
      "h2", "Upper bound (exact when rewriting is confluent) on dim H2(G;F_p)");
  KbFlags h2_kb;
  std::size_t max_passes = 8;
  std::vector<std::size_t> sublist_1based;
  bool simplify_first = false;
  h2->add_option("input", input_path, "Presentation file")->required();
  h2->add_option("-p,--prime", prime_value, "Coefficient prime")->required();
  add_kb_flags(h2, h2_kb);
  h2->add_option("--max-passes", max_passes, "Cap on pruning passes")
      ->capture_default_str();
  h2->add_option("--sublist", sublist_1based,
                 "1-based relator indices to seed the pruning (default: all)")
      ->delimiter(',');
  h2->add_flag("--simplify-first", simplify_first,
               "Apply tietze_simplify before the pipeline");
  h2->add_flag("--json", json_out, "Emit a JSON object");

  // reduce -------------------------------------------------------------------
  auto* reduce_cmd = app.add_subcommand(
      "reduce", "Normal form of a word in F/[F,R]R^pR' (R' from --sublist)");
  KbFlags red_kb;
  std::string word_text;
  std::string dump_path, load_path;
  reduce_cmd->add_option("input", input_path, "Presentation file")->required();
  reduce_cmd->add_option("word", word_text, "Word to reduce")->required();
  reduce_cmd->add_option("-p,--prime", prime_value, "Coefficient prime")
      ->required();
  add_kb_flags(reduce_cmd, red_kb);
  reduce_cmd->add_option("--sublist", sublist_1based,
                         "1-based relator indices for R' (default: empty)")
      ->delimiter(',');
  reduce_cmd->add_option("--dump-rules", dump_path,
                         "Write the completed rule set to PATH");
  reduce_cmd->add_option("--load-rules", load_path,
                         "Reuse a dumped rule set instead of completing");
  reduce_cmd->add_flag("--json", json_out, "Emit a JSON object");

  // kb -------------------------------------------------------------------
  auto* kb_cmd = app.add_subcommand(
      "kb", "Knuth-Bendix completion of the presentation itself");
  KbFlags kb_kb;
  std::string kb_dump_path;
  std::uint64_t nf_cap = 100000;
  kb_cmd->add_option("input", input_path, "Presentation file")->required();
  add_kb_flags(kb_cmd, kb_kb);
  kb_cmd->add_option("--dump-rules", kb_dump_path,
                     "Write the resulting rule set to PATH");
  kb_cmd->add_option("--nf-cap", nf_cap,
                     "Stop counting normal forms past this many")
      ->capture_default_str();
  kb_cmd->add_flag("--json", json_out, "Emit a JSON object");

  // simplify ----------------------------------------------------------------
  auto* simp = app.add_subcommand("simplify",
                                  "Tietze-simplify and print the presentation");
  simp->add_option("input", input_path, "Presentation file")->required();
  simp->add_flag("--json", json_out, "Emit a JSON object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*h1) {
    grouphom::Presentation p = load_input(input_path);
    std::vector<grouphom::Int> inv = grouphom::abelian_invariants(p);
    if (json_out) {
      nlohmann::json j;
      j["invariants"] = nlohmann::json::array();
      for (const grouphom::Int& x : inv) {
        j["invariants"].push_back(static_cast<std::int64_t>(x));
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << invariants_text(inv) << "\n";
    }
    return 0;
  }

  if (*h1modp || *tor || *prank) {
    grouphom::Presentation p = load_input(input_path);
    grouphom::PrimeField k(prime_value);
    std::uint64_t value;
    const char* key;
    if (*h1modp) {
      value = grouphom::first_homology_mod_p(p, k);
      key = "dim";
    } else if (*tor) {
      value = grouphom::tor_dimension(p, k);
      key = "dim";
    } else {
      value = grouphom::prime_primary_rank(p, k);
      key = "rank";
    }
    if (json_out) {
      nlohmann::json j;
      j[key] = value;
      j["prime"] = prime_value;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << value << "\n";
    }
    return 0;
  }

  if (*h2) {
    grouphom::Presentation p = load_input(input_path);
    if (simplify_first) p = grouphom::tietze_simplify(p);
    grouphom::PrimeField k(prime_value);
    grouphom::RelatorSelection initial = resolve_sublist(
        sublist_1based, h2->count("--sublist") > 0, p, /*default_all=*/true);
    grouphom::HopfReport rep = grouphom::second_homology_bound(
        p, k, initial, h2_kb.to_config(), max_passes);

    long long identity = static_cast<long long>(rep.a) +
                         static_cast<long long>(rep.b) -
                         static_cast<long long>(rep.c) +
                         static_cast<long long>(rep.e);
    bool history_ok = true;
    for (std::size_t i = 1; i < rep.pass_history.size(); ++i) {
      if (rep.pass_history[i] > rep.pass_history[i - 1]) history_ok = false;
    }
    if (rep.d != identity || rep.d < 0 || !history_ok) {
      std::cerr << "internal invariant violation in the homology report\n";
      return 3;
    }

    if (json_out) {
      std::cout << grouphom::to_json(rep, p).dump(2) << "\n";
    } else {
      std::cout << "a = " << rep.a << "\n"
                << "b = " << rep.b << "\n"
                << "c = " << rep.c << "\n"
                << "e = " << rep.e << "\n";
      std::cout << "pass_history = [";
      for (std::size_t i = 0; i < rep.pass_history.size(); ++i) {
        std::cout << (i ? ", " : "") << rep.pass_history[i];
      }
      std::cout << "]\n";
      std::cout << "statuses = [";
      for (std::size_t i = 0; i < rep.statuses.size(); ++i) {
        std::cout << (i ? ", " : "") << to_string(rep.statuses[i]);
      }
      std::cout << "]\n";
      std::cout << "survivors:\n";
      for (const grouphom::Word& w : rep.survivor_words) {
        std::cout << "  "
                  << grouphom::format_letters(w.letters(), p.generator_names)
                  << "\n";
      }
      std::cout << "d = " << rep.d
                << (rep.exact ? " (exact: rewriting confluent)"
                              : " (upper bound: rewriting incomplete)")
                << "\n";
    }
    return rep.exact ? 0 : 2;
  }

  if (*reduce_cmd) {
    grouphom::Presentation p = load_input(input_path);
    grouphom::PrimeField k(prime_value);
    grouphom::RelatorSelection sublist =
        resolve_sublist(sublist_1based, reduce_cmd->count("--sublist") > 0, p,
                        /*default_all=*/false);
    grouphom::Word z = grouphom::parse_word(word_text, p);

    grouphom::Word reduced;
    grouphom::KbStatus status;
    if (!load_path.empty()) {
      std::ifstream in(load_path);
      if (!in) {
        throw std::invalid_argument("cannot open rule file: " + load_path);
      }
      grouphom::RewritingSystem rs = grouphom::load_rules(in, p);
      reduced = rs.reduce_group_word(z);
      status = rs.status();
    } else {
      grouphom::HopfQuotient q = grouphom::build_hopf_quotient(p, k, sublist);
      grouphom::RewritingSystem rs(
          grouphom::build_monoid_presentation(q.derived_presentation));
      rs.complete(red_kb.to_config());
      reduced = rs.reduce_group_word(z);
      status = rs.status();
      if (!dump_path.empty()) {
        std::ofstream out(dump_path);
        if (!out) {
          throw std::invalid_argument("cannot write rule file: " + dump_path);
        }
        grouphom::dump_rules(out, rs, p);
      }
    }

    std::string reduced_text =
        grouphom::format_letters(reduced.letters(), p.generator_names);
    if (json_out) {
      nlohmann::json j;
      j["reduced"] = reduced_text;
      j["trivial"] = reduced.empty();
      j["status"] = to_string(status);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << reduced_text << "\n"
                << "status: " << to_string(status) << "\n";
    }
    return status == grouphom::KbStatus::confluent ? 0 : 2;
  }

  if (*kb_cmd) {
    grouphom::Presentation p = load_input(input_path);
    grouphom::RewritingSystem rs(grouphom::build_monoid_presentation(p));
    rs.complete(kb_kb.to_config());
    std::optional<std::uint64_t> nf = rs.count_normal_forms(nf_cap);
    if (!kb_dump_path.empty()) {
      std::ofstream out(kb_dump_path);
      if (!out) {
        throw std::invalid_argument("cannot write rule file: " + kb_dump_path);
      }
      grouphom::dump_rules(out, rs, p);
    }
    if (json_out) {
      nlohmann::json j;
      j["status"] = to_string(rs.status());
      j["equations_processed"] = rs.equations_processed();
      j["n_rules"] = rs.rules().size();
      if (nf) {
        j["normal_forms"] = *nf;
      } else {
        j["normal_forms"] = nullptr;
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "status: " << to_string(rs.status()) << "\n"
                << "equations_processed: " << rs.equations_processed() << "\n"
                << "rules: " << rs.rules().size() << "\n";
      if (nf) {
        std::cout << "normal_forms: " << *nf << "\n";
      } else {
        std::cout << "normal_forms: > " << nf_cap << "\n";
      }
    }
    return rs.confluent() ? 0 : 2;
  }

  if (*simp) {
    grouphom::Presentation p = load_input(input_path);
    grouphom::Presentation s = grouphom::tietze_simplify(p);
    if (json_out) {
      nlohmann::json j;
      j["generators"] = s.generator_names;
      j["relators"] = nlohmann::json::array();
      for (const grouphom::Word& r : s.relators) {
        j["relators"].push_back(
            grouphom::format_letters(r.letters(), s.generator_names));
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << grouphom::serialize_presentation(s);
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_interrupt);
  std::signal(SIGTERM, on_interrupt);
  try {
    return run(argc, argv);
  } catch (const grouphom::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
