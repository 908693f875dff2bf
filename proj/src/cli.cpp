#include "coxgs/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <ostream>

namespace coxgs {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string matrix;
  std::vector<std::string> words;
  std::size_t maxdeg = 16;
  std::size_t maxlen = 10;
  bool json = false;
};

Json rule_json(const RewriteRule& r) {
  return Json{{"lhs", to_string(r.lhs)}, {"rhs", rhs_to_string(r)}, {"source", to_string(r.source)}};
}

Json rules_json(const std::vector<RewriteRule>& rules) {
  Json out = Json::array();
  for (const auto& r : rules) out.push_back(rule_json(r));
  return out;
}

void print_rules(std::ostream& out, const std::vector<RewriteRule>& rules) {
  for (const auto& r : rules) out << to_string(r) << '\n';
}

Json outcome_json(const CompletionOutcome& c) {
  return Json{{"status", to_string(c.status)},
              {"max_degree", c.max_degree},
              {"pairs_processed", c.stats.pairs_processed},
              {"rules_added", c.stats.rules_added},
              {"ambiguities_skipped", c.stats.ambiguities_skipped}};
}

void print_outcome(std::ostream& out, const CompletionOutcome& c) {
  out << "status: " << to_string(c.status) << '\n'
      << "max degree: " << c.max_degree << '\n'
      << "pairs processed: " << c.stats.pairs_processed << '\n'
      << "rules added: " << c.stats.rules_added << '\n'
      << "ambiguities skipped: " << c.stats.ambiguities_skipped << '\n';
}

int status_exit(const CompletionOutcome& c) {
  return c.status == CompletionStatus::Closed ? kExitOk : kExitTruncated;
}

int cmd_relations(const Options& o, std::ostream& out) {
  const auto m = CoxeterMatrix::from_file(o.matrix);
  const auto rel = coxeter_relations(m, o.maxdeg);
  if (o.json) {
    out << Json{{"command", "relations"},
                {"max_degree", o.maxdeg},
                {"involutions", rules_json(rel.involutions)},
                {"braids", rules_json(rel.braids)},
                {"chains", rules_json(rel.chains)},
                {"chains_infinite", rel.chains_infinite}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "involutions (" << rel.involutions.size() << ")\n";
  print_rules(out, rel.involutions);
  out << "braids (" << rel.braids.size() << ")\n";
  print_rules(out, rel.braids);
  out << "chains (" << rel.chains.size();
  if (rel.chains_infinite) out << ", infinite family truncated at degree " << o.maxdeg;
  out << ")\n";
  print_rules(out, rel.chains);
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto m = CoxeterMatrix::from_file(o.matrix);
  const auto witnesses = detect_conditions(m);
  const auto families = classify_family(m).labels();
  const bool guaranteed = witnesses.empty();
  if (o.json) {
    Json ws = Json::array();
    for (const auto& w : witnesses) {
      ws.push_back(Json{{"kind", to_string(w.kind)},
                        {"chain", to_string(w.chain)},
                        {"i", w.i},
                        {"l", w.l},
                        {"degree", relation_degree(w.chain, m)},
                        {"subword", to_string(w.subword)}});
    }
    out << Json{{"command", "check"},
                {"conditions", ws},
                {"gs_guaranteed", guaranteed},
                {"families", families}}
               .dump(2)
        << '\n';
  } else {
    out << "conditions:";
    if (witnesses.empty()) out << " none";
    for (const auto& w : witnesses) out << ' ' << to_string(w.kind);
    out << '\n';
    for (const auto& w : witnesses) {
      out << "  " << to_string(w.kind) << " chain " << to_string(w.chain) << " i=" << w.i
          << " l=" << w.l << " degree " << relation_degree(w.chain, m) << " subword "
          << to_string(w.subword) << '\n';
    }
    out << "gs basis guaranteed: " << (guaranteed ? "yes" : "no") << '\n';
    out << "families:";
    if (families.empty()) out << " none";
    for (const auto& f : families) out << ' ' << f;
    out << '\n';
  }
  return guaranteed ? kExitOk : kExitConditions;
}

int cmd_complete(const Options& o, std::ostream& out) {
  const auto m = CoxeterMatrix::from_file(o.matrix);
  const auto completed = complete_presentation(m, o.maxdeg);
  const auto rules = interreduce(completed.system).rules();
  if (o.json) {
    Json j = outcome_json(completed);
    j["rules"] = rules_json(rules);
    out << Json{{"command", "complete"}, {"completion", j}}.dump(2) << '\n';
  } else {
    print_outcome(out, completed);
    out << "rules (" << rules.size() << ")\n";
    print_rules(out, rules);
  }
  return status_exit(completed);
}

int cmd_nf(const Options& o, std::ostream& out) {
  const auto m = CoxeterMatrix::from_file(o.matrix);
  const Word w = parse_word(o.words.at(0), m.rank());
  const auto completed = complete_presentation(m, o.maxdeg);
  const auto nf = normal_form(Polynomial(w), completed.system);
  if (o.json) {
    out << Json{{"command", "nf"},
                {"word", to_string(w)},
                {"normal_form", to_display(nf)},
                {"status", to_string(completed.status)},
                {"max_degree", o.maxdeg}}
               .dump(2)
        << '\n';
  } else {
    out << "normal form: " << to_display(nf) << '\n'
        << "status: " << to_string(completed.status) << '\n';
  }
  return status_exit(completed);
}

int cmd_eq(const Options& o, std::ostream& out) {
  const auto m = CoxeterMatrix::from_file(o.matrix);
  const Word w1 = parse_word(o.words.at(0), m.rank());
  const Word w2 = parse_word(o.words.at(1), m.rank());
  const auto completed = complete_presentation(m, o.maxdeg);
  const auto nf1 = normal_form(Polynomial(w1), completed.system);
  const auto nf2 = normal_form(Polynomial(w2), completed.system);
  // Equal normal forms prove equality under any subset of the ideal;
  // distinct ones only prove inequality for a closed basis.
  std::string verdict = "unknown";
  if (nf1 == nf2) {
    verdict = "equal";
  } else if (completed.status == CompletionStatus::Closed) {
    verdict = "unequal";
  }
  if (o.json) {
    out << Json{{"command", "eq"},
                {"verdict", verdict},
                {"normal_forms", Json::array({to_display(nf1), to_display(nf2)})},
                {"status", to_string(completed.status)},
                {"max_degree", o.maxdeg}}
               .dump(2)
        << '\n';
  } else {
    out << verdict;
    if (verdict == "unknown") out << " (completion truncated at degree " << o.maxdeg << ")";
    out << '\n' << "normal forms: " << to_display(nf1) << " | " << to_display(nf2) << '\n';
  }
  return verdict == "unknown" ? kExitTruncated : kExitOk;
}

int cmd_irr(const Options& o, std::ostream& out) {
  const auto m = CoxeterMatrix::from_file(o.matrix);
  const auto completed = complete_presentation(m, o.maxdeg);
  const auto counts = count_irr_words(completed.system, m.rank(), o.maxlen);
  std::size_t total = 0;
  for (auto c : counts) total += c;
  // Irr is closed under subwords, so an empty length means no longer words.
  const bool exhausted = std::find(counts.begin(), counts.end(), 0U) != counts.end();
  const bool finite = exhausted && completed.status == CompletionStatus::Closed;
  if (o.json) {
    Json j{{"command", "irr"},
           {"status", to_string(completed.status)},
           {"max_degree", o.maxdeg},
           {"max_length", o.maxlen},
           {"counts", counts},
           {"total", total}};
    j["group_order"] = finite ? Json(total) : Json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "status: " << to_string(completed.status) << '\n';
    for (std::size_t len = 0; len < counts.size(); ++len) {
      out << "length " << len << ": " << counts[len] << '\n';
    }
    out << "total: " << total << '\n';
    if (finite) out << "group order: " << total << '\n';
  }
  return status_exit(completed);
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto report = verify_counterexample(o.maxdeg);
  if (o.json) {
    Json checks = Json::object();
    for (const auto& c : report.checks) {
      checks[c.name] = Json{{"passed", c.passed}, {"detail", c.detail}};
    }
    out << Json{{"command", "verify-ex31"},
                {"max_degree", o.maxdeg},
                {"checks", checks},
                {"passed", report.passed()}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& c : report.checks) {
      out << c.name << ": " << (c.passed ? "pass" : "fail") << " (" << c.detail << ")\n";
    }
    out << "result: " << (report.passed() ? "pass" : "fail") << '\n';
  }
  if (report.passed()) return kExitOk;
  return report.completion == CompletionStatus::Truncated ? kExitTruncated : kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner-Shirshov bases for Coxeter group presentations", "coxgs"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_matrix, std::size_t maxdeg) {
    if (with_matrix) sub->add_option("matrix", o.matrix, "Coxeter matrix file")->required();
    sub->add_option("--maxdeg", o.maxdeg, "completion degree cap")
        ->default_val(maxdeg)
        ->check(CLI::PositiveNumber);
    sub->add_option("--maxlen", o.maxlen, "longest Irr word to count")->default_val(10);
    sub->add_flag("--json", o.json, "machine-readable output");
  };

  auto* relations = app.add_subcommand("relations", "print involution, braid and chain relations");
  add_common(relations, true, 16);
  auto* check = app.add_subcommand("check", "detect conditions C1-C4 and classify the matrix");
  add_common(check, true, 16);
  auto* complete = app.add_subcommand("complete", "run Shirshov completion and interreduce");
  add_common(complete, true, 16);
  auto* nf = app.add_subcommand("nf", "normal form of a word");
  add_common(nf, true, 16);
  nf->add_option("word", o.words, "word such as \"s1 s2\"")->required()->expected(1);
  auto* eq = app.add_subcommand("eq", "decide whether two words are equal in the group");
  add_common(eq, true, 16);
  eq->add_option("words", o.words, "two words")->required()->expected(2);
  auto* irr = app.add_subcommand("irr", "count irreducible words by length");
  add_common(irr, true, 16);
  auto* verify = app.add_subcommand("verify-ex31", "check the built-in counterexample end to end");
  add_common(verify, false, 24);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*relations) return cmd_relations(o, out);
    if (*check) return cmd_check(o, out);
    if (*complete) return cmd_complete(o, out);
    if (*nf) return cmd_nf(o, out);
    if (*eq) return cmd_eq(o, out);
    if (*irr) return cmd_irr(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace coxgs
