// powalt: command-line frontend.
//
// Exit status: 0 for a definite verdict, 2 for Unknown or an exhausted
// search, 1 for input errors.  Reports go to standard output as text and,
// with --json PATH, as JSON.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "powalt/alternative.hpp"
#include "powalt/artin_graph.hpp"
#include "powalt/artin_group.hpp"
#include "powalt/artin_pairs.hpp"
#include "powalt/error.hpp"
#include "powalt/group_json.hpp"
#include "powalt/report.hpp"
#include "powalt/upa.hpp"

using nlohmann::json;
using namespace powalt;

namespace {

  struct Outcome {
    std::string              status;  // definite, unknown
    json                     result;
    std::vector<std::string> notes;
  };

  struct Profile {
    std::size_t max_word_len;
    std::size_t window;
    long long   max_exponent;
    std::size_t node_budget;
  };

  Profile profile_from_env() {
    char const* env  = std::getenv("POWALT_PROFILE");
    std::string name = env ? env : "default";
    if (name == "default" || name.empty()) {
      return {10, 8, 24, 100000};
    }
    if (name == "quick") {
      return {6, 4, 8, 20000};
    }
    if (name == "thorough") {
      return {12, 12, 48, 1000000};
    }
    throw Error(ErrorCode::input_error,
                "POWALT_PROFILE must be default, quick or thorough, got '" + name + "'");
  }

  std::vector<std::string> split_list(std::string const& s) {
    std::vector<std::string> out;
    std::string              item;
    std::istringstream       in(s);
    while (std::getline(in, item, ',')) {
      auto b = item.find_first_not_of(" \t");
      auto e = item.find_last_not_of(" \t");
      if (b == std::string::npos) {
        throw ParseError(item, static_cast<std::size_t>(in.tellg()), "empty list item");
      }
      out.push_back(item.substr(b, e - b + 1));
    }
    return out;
  }

  void write_json(std::string const& path, json const& j) {
    std::ofstream out(path);
    if (!out) {
      throw Error(ErrorCode::input_error, "cannot write " + path);
    }
    out << j.dump(2) << "\n";
  }

  std::string status_of(PairVerdict const& v) {
    return v.definite() ? "definite" : "unknown";
  }

  std::vector<std::string> verdict_notes(PairVerdict const& v) {
    std::vector<std::string> notes;
    if (v.kind == PairVerdict::Kind::free_certificate) {
      notes.push_back("freeness verified to word length "
                      + std::to_string(v.verified_length) + " only");
      if (!v.set_g) {
        notes.push_back("no ping-pong sets: word enumeration only");
      }
    }
    if (v.kind == PairVerdict::Kind::common_boundary) {
      notes.push_back("utl values are windowed computations, UNVERIFIED beyond the window");
    }
    return notes;
  }

  // Pair check in a group with no splitting: commutation, then word
  // enumeration for increasing exponents.
  Outcome pair_check_plain(GraphOfGroups const& gog,
                           Word const&          g,
                           Word const&          h,
                           PairOptions const&   o) {
    auto const& G = *gog.group;
    auto        e = pa_estimate(G, g, h, o.max_exponent, o.max_word_len, o.jobs);
    PairVerdict v;
    v.g      = G.normalize(g);
    v.h      = G.normalize(h);
    v.branch = "word-search";
    v.n      = e.n;
    if (e.outcome == "commute") {
      v.kind = PairVerdict::Kind::commute;
    } else if (e.outcome == "free") {
      v.kind            = PairVerdict::Kind::free_certificate;
      v.verified_length = e.verified_length;
    } else {
      v.reason = "exhausted";
    }
    v.notes = e.evidence;
    return {status_of(v), to_json(v, G), verdict_notes(v)};
  }

}  // namespace

int main(int argc, char** argv) {
  Profile profile{};
  try {
    profile = profile_from_env();
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  CLI::App app{"Power alternative workbench for groups acting on trees"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", tool_version);

  PairOptions opts;
  opts.max_word_len = profile.max_word_len;
  opts.window       = profile.window;
  opts.max_exponent = profile.max_exponent;
  opts.node_budget  = profile.node_budget;
  std::string json_path;
  app.add_option("--max-word-len", opts.max_word_len, "word length L for freeness checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--window", opts.window, "window W in fundamental domains")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-exponent", opts.max_exponent, "largest exponent tried")
      ->check(CLI::PositiveNumber);
  app.add_option("--node-budget", opts.node_budget, "tree exploration budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--json", json_path, "also write the report as JSON");

  std::function<Outcome()> action;
  std::string              command;

  auto sub = [&](char const* name, char const* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->set_help_flag("--help", "print this help and exit");  // --h is an element
    s->callback([&command, name] { command = name; });
    return s;
  };

  // graph analytics
  std::string graph_path;
  auto*       c_classify = sub("classify-graph", "classify a presentation graph");
  c_classify->add_option("--graph", graph_path, "DOT or JSON graph")->required();
  auto* c_exponent = sub("exponent", "uniform exponent of a presentation graph");
  c_exponent->add_option("--graph", graph_path, "DOT or JSON graph")->required();
  auto* c_split = sub("split", "visual splittings");
  c_split->add_option("--graph", graph_path, "DOT or JSON graph")->required();
  auto* c_reduce = sub("reduce", "recursive reduction to complete pieces");
  c_reduce->add_option("--graph", graph_path, "DOT or JSON graph")->required();

  // pairs
  std::string gog_path, g_text, h_text, cert_out, cert_path;
  bool        estimate = false;
  auto*       c_pair   = sub("pair-check", "decide the power alternative for a pair");
  auto*       o_gog    = c_pair->add_option("--gog", gog_path, "group or graph of groups JSON");
  auto*       o_graph  = c_pair->add_option("--graph", graph_path, "Artin presentation graph");
  o_gog->excludes(o_graph);
  c_pair->add_option("--g", g_text, "first element")->required();
  c_pair->add_option("--h", h_text, "second element")->required();
  c_pair->add_option("--cert-out", cert_out, "write a free certificate here");
  c_pair->add_flag("--estimate", estimate, "least exponent by word search only");

  auto* c_verify = sub("certify-verify", "replay a free certificate");
  c_verify->add_option("--cert", cert_path, "certificate JSON")->required();

  std::string ray_text;
  auto*       c_probe = sub("probe-stabilisation", "pointwise stabilisers along a ray");
  c_probe->add_option("--gog", gog_path, "graph of groups JSON")->required();
  c_probe->add_option("--ray", ray_text, "loxodromic element spanning the ray")->required();

  int   m_label = 0;
  auto* c_dihedral = sub("dihedral", "kernel structure of a dihedral Artin group");
  c_dihedral->add_option("--m", m_label, "edge label")->required()->check(CLI::Range(2, 64));

  std::string gens_text;
  long long   growth_m = 0;
  auto*       c_growth = sub("growth", "search for a free pair of m-th powers");
  c_growth->add_option("--graph", graph_path, "Artin presentation graph")->required();
  c_growth->add_option("--gens", gens_text, "comma-separated words (default: the vertices)");
  c_growth->add_option("--m", growth_m, "exponent (default: the adjusted uniform exponent)");
  c_growth->add_option("--cert-out", cert_out, "write the certificate here");

  std::string facts_path;
  auto*       c_upa = sub("upa-derive", "derive class memberships from a fact file");
  c_upa->add_option("--facts", facts_path, "fact file JSON")->required();

  std::string law_text;
  std::size_t samples = 100;
  std::uint64_t seed  = 1;
  auto*       c_law   = sub("law-check", "test a law on random tuples");
  c_law->add_option("--gog", gog_path, "group or graph of groups JSON")->required();
  c_law->add_option("--law", law_text, "law word, e.g. [[x1,x2],[x3,x4]]")->required();
  c_law->add_option("--gens", gens_text, "comma-separated words (default: the generators)");
  c_law->add_option("--samples", samples, "number of tuples");
  c_law->add_option("--seed", seed, "random seed");

  auto* c_bench = sub("bench", "time a fixed set of computations");
  std::string data_dir = "data";
  c_bench->add_option("--data", data_dir, "directory with the shipped inputs");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  auto word_in = [](Group const& G, std::string const& s) {
    return G.normalize(parse_word(s, G.alphabet()));
  };

  try {
    if (command == "classify-graph") {
      action = [&] {
        auto g = load_graph(graph_path);
        return Outcome{"definite", to_json(classify_graph(g)), {}};
      };
    } else if (command == "exponent") {
      action = [&] {
        auto r = uniform_exponent(load_graph(graph_path));
        std::vector<std::string> notes = {"optimality of the exponent is not checked"};
        return Outcome{"definite", to_json(r), notes};
      };
    } else if (command == "split") {
      action = [&] {
        auto g   = load_graph(graph_path);
        json all = json::array();
        for (auto const& s : visual_splittings(g)) {
          all.push_back(to_json(s));
        }
        json r = {{"splittings", all}, {"preferred", nullptr}};
        if (auto p = preferred_splitting(g)) {
          r["preferred"] = to_json(*p);
        }
        return Outcome{"definite", r, {}};
      };
    } else if (command == "reduce") {
      action = [&] {
        auto node = reduction_report(load_graph(graph_path));
        return Outcome{"definite",
                       {{"tree", to_json(node)}, {"leaves", reduction_leaves(node)}},
                       {}};
      };
    } else if (command == "pair-check") {
      action = [&]() -> Outcome {
        if (gog_path.empty() == graph_path.empty()) {
          throw Error(ErrorCode::input_error, "give exactly one of --gog and --graph");
        }
        if (!graph_path.empty()) {
          auto graph = load_graph(graph_path);
          auto r     = pair_check_artin(graph, g_text, h_text, opts);
          if (!cert_out.empty() && r.verdict.kind == PairVerdict::Kind::free_certificate) {
            json doc = {{"type", "artin"}, {"graph", graph_to_json(graph)}};
            write_json(cert_out, certificate_json(r.verdict, doc, *r.group));
          }
          return {status_of(r.verdict), to_json(r), verdict_notes(r.verdict)};
        }
        auto gog = gog_from_json(load_json(gog_path));
        Word g   = word_in(*gog.group, g_text);
        Word h   = word_in(*gog.group, h_text);
        if (estimate) {
          auto e = pa_estimate(*gog.group, g, h, opts.max_exponent, opts.max_word_len, opts.jobs);
          return {e.n ? "definite" : "unknown", to_json(e, *gog.group), {}};
        }
        Outcome out;
        PairVerdict v;
        if (!gog.tree) {
          out = pair_check_plain(gog, g, h, opts);
          if (!cert_out.empty() && out.result.value("verdict", "") == "free_certificate") {
            auto e = pa_estimate(*gog.group, g, h, opts.max_exponent, opts.max_word_len, 1);
            v.kind            = PairVerdict::Kind::free_certificate;
            v.g               = g;
            v.h               = h;
            v.n               = e.n;
            v.verified_length = e.verified_length;
            write_json(cert_out, certificate_json(v, gog.document, *gog.group));
          }
          return out;
        }
        v = classify_pair(*gog.tree, g, h, opts);
        if (!cert_out.empty() && v.kind == PairVerdict::Kind::free_certificate) {
          write_json(cert_out, certificate_json(v, gog.document, *gog.group));
        }
        return {status_of(v), to_json(v, *gog.group), verdict_notes(v)};
      };
    } else if (command == "certify-verify") {
      action = [&]() -> Outcome {
        auto cert = load_json(cert_path);
        std::optional<std::size_t> L;
        if (app.count("--max-word-len")) {
          L = opts.max_word_len;
        }
        auto c = verify_certificate(cert, L, opts.jobs);
        json r = {{"ok", c.ok},
                  {"failure", c.failure},
                  {"words_checked", c.words.candidates + c.words.powers},
                  {"ping_pong_samples", c.samples}};
        if (!c.words.ok) {
          r["relation"] = relation_text(c.words.relation);
        }
        return {c.ok ? "definite" : "unknown", r, {}};
      };
    } else if (command == "probe-stabilisation") {
      action = [&]() -> Outcome {
        auto gog = gog_from_json(load_json(gog_path));
        if (!gog.tree) {
          throw Error(ErrorCode::input_error, "the group in " + gog_path + " does not split");
        }
        Budget budget(opts.node_budget);
        auto   r = stabilisation_probe(*gog.tree, word_in(*gog.group, ray_text), opts.window,
                                     &budget);
        bool definite = r.verdict != StabilisationReport::Verdict::inconclusive;
        return {definite ? "definite" : "unknown", to_json(r, *gog.group), {}};
      };
    } else if (command == "dihedral") {
      action = [&] {
        return Outcome{"definite", to_json(dihedral_structure(m_label)), {}};
      };
    } else if (command == "growth") {
      action = [&]() -> Outcome {
        auto graph = load_graph(graph_path);
        auto gens  = gens_text.empty() ? graph.vertices() : split_list(gens_text);
        long long m = growth_m ? growth_m : uniform_exponent(graph).adjusted;
        auto w      = growth_witness(graph, gens, m, opts.max_word_len, opts.jobs);
        if (!cert_out.empty() && w.found) {
          json doc = {{"type", "artin"}, {"graph", graph_to_json(graph)}};
          write_json(cert_out, certificate_json(w.certificate, doc, *w.group));
        }
        std::vector<std::string> notes;
        if (w.found) {
          notes.push_back("freeness verified to word length "
                          + std::to_string(opts.max_word_len) + " only");
        }
        return {w.found ? "definite" : "unknown", to_json(w), notes};
      };
    } else if (command == "upa-derive") {
      action = [&]() -> Outcome {
        auto facts   = parse_facts(load_json(facts_path));
        json out     = json::array();
        bool all     = true;
        for (auto const& goal : facts.goals) {
          auto d = derive_membership(goal, facts);
          json j = to_json(d);
          if (d.derived) {
            auto rp     = replay(d.proof, facts);
            j["replay"] = {{"ok", rp.ok}, {"nodes", rp.nodes}, {"failure", rp.failure}};
            all         = all && rp.ok;
          } else {
            all = false;
          }
          out.push_back(j);
        }
        std::vector<std::string> notes = {"every fact is an UNVERIFIED assertion",
                                          "rule steps are BY-RULE"};
        return {all ? "definite" : "unknown", {{"derivations", out}}, notes};
      };
    } else if (command == "law-check") {
      action = [&]() -> Outcome {
        auto gog = gog_from_json(load_json(gog_path));
        auto const& G = *gog.group;
        std::vector<Word> gens;
        if (gens_text.empty()) {
          for (std::size_t i = 0; i < G.alphabet().size(); ++i) {
            gens.push_back(Word{{static_cast<int>(i), 1}});
          }
        } else {
          for (auto const& s : split_list(gens_text)) {
            gens.push_back(word_in(G, s));
          }
        }
        auto r = law_check(G, gens, parse_law(law_text), samples, seed);
        std::vector<std::string> notes;
        if (r.holds) {
          notes.push_back("the law is only checked on the sampled tuples");
        }
        return {"definite", to_json(r, G), notes};
      };
    } else if (command == "bench") {
      action = [&]() -> Outcome {
        json rows = json::array();
        auto time = [&](std::string const& name, std::function<std::string()> f) {
          auto        t0  = std::chrono::steady_clock::now();
          std::string res = f();
          auto        ms  = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
          rows.push_back({{"task", name}, {"result", res}, {"ms", std::round(ms * 10) / 10}});
        };
        auto dir = data_dir + "/";
        time("exponent path34", [&] {
          return std::to_string(uniform_exponent(load_graph(dir + "path34.gv")).adjusted);
        });
        time("probe bs12 window 8", [&] {
          auto gog = gog_from_json(load_json(dir + "bs12.json"));
          auto r   = stabilisation_probe(*gog.tree, word_in(*gog.group, "b"), 8);
          return std::to_string(r.chain.size()) + " steps";
        });
        time("pair-check Z*Z (a, b)", [&] {
          auto gog = gog_from_json(load_json(dir + "trivial-amalgam.json"));
          auto v   = classify_pair(*gog.tree, word_in(*gog.group, "a"),
                                 word_in(*gog.group, "b"), opts);
          return kind_name(v.kind);
        });
        time("dihedral m=3", [&] { return "k = " + std::to_string(dihedral_structure(3).k); });
        time("pair-check A(3) (a, b)", [&] {
          auto r = pair_check_artin(load_graph(dir + "edge3.gv"), "a", "b", opts);
          return kind_name(r.verdict.kind) + " n = " + std::to_string(r.verdict.n);
        });
        return {"definite", {{"timings", rows}}, {"timings depend on the machine"}};
      };
    }

    Outcome out    = action();
    json    report = make_report(command, out.status, out.result, out.notes);
    std::cout << render_text(report);
    if (!json_path.empty()) {
      write_json(json_path, report);
    }
    return out.status == "definite" ? 0 : 2;
  } catch (Error const& e) {
    bool exhausted = e.code() == ErrorCode::budget_exceeded;
    json report    = make_report(command, exhausted ? "unknown" : "error",
                                 {{"error", code_name(e.code())}, {"message", e.what()}});
    if (!json_path.empty()) {
      try {
        write_json(json_path, report);
      } catch (Error const&) {
      }
    }
    std::cerr << "error: " << e.what() << "\n";
    return exhausted ? 2 : 1;
  } catch (json::exception const& e) {
    std::cerr << "error: input-error: " << e.what() << "\n";
    return 1;
  }
}
