#include "powalt/upa.hpp"

#include <numeric>
#include <set>

#include "powalt/bass_serre.hpp"
#include "powalt/error.hpp"
#include "powalt/group_json.hpp"

namespace powalt {

  using nlohmann::json;

  namespace {
    [[noreturn]] void bad(std::string const& m) {
      throw Error(ErrorCode::input_error, "facts: " + m);
    }

    // assertion -> fields naming other groups
    std::map<std::string, std::vector<std::string>> const& reference_fields() {
      static std::map<std::string, std::vector<std::string>> const f = {
          {"hyperbolic", {}},
          {"central_z_extension_of", {"quotient"}},
          {"finite_index_overgroup_of", {"group"}},
          {"finite_index_subgroup_of", {"group"}},
          {"direct_product_of", {"factors"}},
          {"graph_product_of", {"factors"}},
          {"acylindrical_cocompact_tree_action", {"vertex_groups"}},
          {"stabilisation_tree_action", {"point_stabilisers"}},
          {"relatively_hyperbolic", {"peripherals"}},
          {"bounded_torsion", {}},
          {"uniform_exponent", {}}};
      return f;
    }

    std::vector<std::string> names(json const& f, char const* key) {
      auto const& v = f.at(key);
      if (v.is_string()) {
        return {v.get<std::string>()};
      }
      return v.get<std::vector<std::string>>();
    }

    std::string subject(json const& f) {
      return f.at("subject").get<std::string>();
    }
    std::string assertion(json const& f) {
      return f.at("assertion").get<std::string>();
    }

    void positive(json const& f, char const* key, bool required) {
      if (!f.contains(key)) {
        if (required) {
          bad(subject(f) + ": " + assertion(f) + " needs '" + key + "'");
        }
        return;
      }
      if (!f.at(key).is_number_integer() || f.at(key).get<long long>() < 1) {
        bad(subject(f) + ": '" + key + "' must be a positive integer");
      }
    }

    std::string statement_of(std::string const& rule) {
      static std::map<std::string, std::string> const s = {
          {"hyperbolic", "hyperbolic groups belong to UPA0"},
          {"central-extension", "a central Z-extension of a hyperbolic group belongs to UPA0"},
          {"base-class", "UPA0 is contained in the class"},
          {"finite-index-overgroup", "closed under finite-index overgroups"},
          {"direct-product", "closed under direct products"},
          {"acylindrical-tree",
           "cocompact acylindrical tree actions with roots-closed vertex stabilisers in UPA"},
          {"stabilisation-tree",
           "tree actions with the stabilisation property and point stabilisers in PA"},
          {"graph-product", "closed under graph products of nontrivial groups"},
          {"relatively-hyperbolic", "closed under relative hyperbolicity over members"}};
      return s.at(rule);
    }

    long long lcm_checked(long long a, long long b) {
      long long l = std::lcm(a, b);
      if (l <= 0) {
        throw Error(ErrorCode::budget_exceeded, "exponent overflow");
      }
      return l;
    }

    std::optional<long long> asserted_exponent(FactBase const& fb, std::string const& g) {
      for (auto const& f : fb.facts) {
        if (subject(f) == g && assertion(f) == "uniform_exponent") {
          return f.at("exponent").get<long long>();
        }
      }
      return std::nullopt;
    }

    ExponentBound compute_exponent(DerivationNode const& n, FactBase const& fb) {
      ExponentBound e;
      if (n.cls == "PA") {
        e.reason = "PA carries no uniform exponent";
        return e;
      }
      std::vector<ExponentBound> sub;
      for (auto const& p : n.premises) {
        sub.push_back(compute_exponent(p, fb));
      }
      auto first_missing = [&]() -> ExponentBound const* {
        for (auto const& s : sub) {
          if (!s.computed) {
            return &s;
          }
        }
        return nullptr;
      };
      std::string const& r = n.rule;
      if (r == "hyperbolic") {
        e.reason = "hyperbolic group " + n.group + ": exponent not computed";
      } else if (r == "central-extension" || r == "base-class"
                 || r == "finite-index-overgroup" || r == "direct-product") {
        if (auto m = first_missing()) {
          e.reason = m->reason;
        } else {
          for (auto const& s : sub) {
            e.trail.insert(e.trail.end(), s.trail.begin(), s.trail.end());
          }
          e.computed = true;
          if (r == "central-extension") {
            e.value = 2 * sub[0].value;
            e.trail.push_back(n.group + ": central extension doubles " + std::to_string(sub[0].value)
                              + " to " + std::to_string(e.value));
          } else if (r == "base-class") {
            e.value = sub[0].value;
          } else if (r == "finite-index-overgroup") {
            long long k = n.fact.at("index").get<long long>();
            if (__builtin_mul_overflow(sub[0].value, k, &e.value)) {
              throw Error(ErrorCode::budget_exceeded, "exponent overflow");
            }
            e.trail.push_back(n.group + ": index " + std::to_string(k) + " gives "
                              + std::to_string(sub[0].value) + " * " + std::to_string(k)
                              + " = " + std::to_string(e.value));
          } else {
            e.value        = 1;
            std::string in;
            for (auto const& s : sub) {
              e.value = lcm_checked(e.value, s.value);
              in += (in.empty() ? "" : ", ") + std::to_string(s.value);
            }
            e.trail.push_back(n.group + ": lcm(" + in + ") = " + std::to_string(e.value));
          }
        }
      } else {
        e.reason = r + " at " + n.group + ": finite, not computed";
      }
      if (!e.computed) {
        if (auto a = asserted_exponent(fb, n.group)) {
          e.computed = true;
          e.value    = *a;
          e.trail    = {n.group + ": exponent " + std::to_string(*a) + " (asserted, UNVERIFIED)"};
          e.reason.clear();
        }
      }
      return e;
    }

    bool fact_present(FactBase const& fb, json const& f) {
      for (auto const& x : fb.facts) {
        if (x == f) {
          return true;
        }
      }
      return false;
    }

    // Checks the roots-closed premise of an acylindrical action fact.
    std::optional<std::string> roots_closed(json const& f) {
      if (f.value("roots_closed", false)) {
        return "roots closed (asserted, UNVERIFIED)";
      }
      if (f.contains("gog")) {
        auto gog = gog_from_json(f.at("gog"));
        if (gog.tree) {
          auto rc = roots_closure_check(*gog.tree);
          if (rc.verdict == RootsClosure::Verdict::holds) {
            return "roots closed (checked on the given splitting)";
          }
        }
      }
      return std::nullopt;
    }

    struct Premise {
      std::string group, cls;
    };

    // Premises a rule instance needs, or nullopt if the fact does not
    // support the rule for this node.
    std::optional<std::vector<Premise>> premises_for(std::string const& rule,
                                                     std::string const& g,
                                                     std::string const& cls,
                                                     json const&        f) {
      auto all = [&](std::vector<std::string> const& gs, std::string const& c) {
        std::vector<Premise> p;
        for (auto const& x : gs) {
          p.push_back({x, c});
        }
        return p;
      };
      if (rule == "base-class") {
        return std::vector<Premise>{{g, "UPA0"}};
      }
      std::string a = assertion(f);
      if (rule == "hyperbolic" && cls == "UPA0" && subject(f) == g && a == "hyperbolic") {
        return std::vector<Premise>{};
      }
      if (rule == "central-extension" && cls == "UPA0" && subject(f) == g
          && a == "central_z_extension_of") {
        return std::vector<Premise>{{f.at("quotient").get<std::string>(), "UPA0"}};
      }
      if (cls == "UPA0") {
        return std::nullopt;
      }
      if (rule == "finite-index-overgroup") {
        if (a == "finite_index_overgroup_of" && subject(f) == g) {
          return std::vector<Premise>{{f.at("group").get<std::string>(), cls}};
        }
        if (a == "finite_index_subgroup_of" && f.at("group") == g) {
          return std::vector<Premise>{{subject(f), cls}};
        }
        return std::nullopt;
      }
      if (subject(f) != g) {
        return std::nullopt;
      }
      if (rule == "direct-product" && a == "direct_product_of") {
        return all(names(f, "factors"), cls);
      }
      if (rule == "graph-product" && a == "graph_product_of") {
        return all(names(f, "factors"), cls);
      }
      if (rule == "relatively-hyperbolic" && a == "relatively_hyperbolic") {
        return all(names(f, "peripherals"), cls);
      }
      if (rule == "acylindrical-tree" && cls == "UPA" && a == "acylindrical_cocompact_tree_action") {
        return all(names(f, "vertex_groups"), "UPA");
      }
      if (rule == "stabilisation-tree" && cls == "PA" && a == "stabilisation_tree_action") {
        return all(names(f, "point_stabilisers"), "PA");
      }
      return std::nullopt;
    }

    std::string rule_for(std::string const& a) {
      static std::map<std::string, std::string> const r = {
          {"hyperbolic", "hyperbolic"},
          {"central_z_extension_of", "central-extension"},
          {"finite_index_overgroup_of", "finite-index-overgroup"},
          {"finite_index_subgroup_of", "finite-index-overgroup"},
          {"direct_product_of", "direct-product"},
          {"graph_product_of", "graph-product"},
          {"acylindrical_cocompact_tree_action", "acylindrical-tree"},
          {"stabilisation_tree_action", "stabilisation-tree"},
          {"relatively_hyperbolic", "relatively-hyperbolic"}};
      auto it = r.find(a);
      return it == r.end() ? "" : it->second;
    }

    struct Engine {
      FactBase const&                                       fb;
      std::map<std::pair<std::string, std::string>, DerivationNode> memo;
      std::set<std::pair<std::string, std::string>>         active;
      bool                                                  cycle = false;
      std::vector<std::string>                              missing;

      std::optional<DerivationNode> derive(std::string const& g, std::string const& cls) {
        auto key = std::make_pair(g, cls);
        if (auto it = memo.find(key); it != memo.end()) {
          return it->second;
        }
        if (active.count(key)) {
          cycle = true;
          missing.push_back("cycle: " + g + " in " + cls + " depends on itself");
          return std::nullopt;
        }
        active.insert(key);
        auto result = attempt(g, cls);
        active.erase(key);
        if (result) {
          memo.emplace(key, *result);
        }
        return result;
      }

      std::optional<DerivationNode> instance(std::string const& rule,
                                             std::string const& g,
                                             std::string const& cls,
                                             json const&        f,
                                             std::vector<std::string>& why) {
        auto need = premises_for(rule, g, cls, f);
        if (!need) {
          return std::nullopt;
        }
        DerivationNode n;
        n.group     = g;
        n.cls       = cls;
        n.rule      = rule;
        n.statement = statement_of(rule);
        n.fact      = f;
        if (rule == "acylindrical-tree") {
          auto r = roots_closed(f);
          if (!r) {
            why.push_back(g + ": vertex stabilisers not known to be closed under roots");
            return std::nullopt;
          }
          n.checks.push_back(*r);
        }
        if (rule == "central-extension") {
          // the quotient must be hyperbolic itself
          std::string q = (*need)[0].group;
          for (auto const& h : fb.facts) {
            if (subject(h) == q && assertion(h) == "hyperbolic") {
              auto p = instance("hyperbolic", q, "UPA0", h, why);
              n.premises.push_back(*p);
              return n;
            }
          }
          why.push_back(g + ": quotient " + q + " is not asserted hyperbolic");
          return std::nullopt;
        }
        for (auto const& p : *need) {
          auto sub = derive(p.group, p.cls);
          if (!sub) {
            why.push_back(g + " via " + rule + ": missing " + p.group + " in " + p.cls);
            return std::nullopt;
          }
          n.premises.push_back(*sub);
        }
        return n;
      }

      std::optional<DerivationNode> attempt(std::string const& g, std::string const& cls) {
        std::vector<std::string> why;
        if (cls != "UPA0") {
          if (auto n = instance("base-class", g, cls, json(), why)) {
            return n;
          }
        }
        for (auto const& f : fb.facts) {
          std::string rule = rule_for(assertion(f));
          if (rule.empty()) {
            continue;
          }
          if (auto n = instance(rule, g, cls, f, why)) {
            return n;
          }
        }
        if (why.empty()) {
          why.push_back("no fact derives " + g + " in " + cls);
        }
        missing.insert(missing.end(), why.begin(), why.end());
        return std::nullopt;
      }
    };

    void fill_exponents(DerivationNode& n, FactBase const& fb) {
      for (auto& p : n.premises) {
        fill_exponents(p, fb);
      }
      n.exponent = compute_exponent(n, fb);
    }
  }  // namespace

  FactBase parse_facts(json const& doc) {
    if (!doc.is_object()) {
      bad("document must be an object");
    }
    if (doc.value("schema_version", 0) != 1) {
      bad("unsupported schema_version");
    }
    FactBase fb;
    std::set<std::string> subjects;
    try {
      for (auto const& f : doc.at("facts")) {
        if (!f.is_object() || !f.contains("subject") || !f.contains("assertion")) {
          bad("every fact needs a subject and an assertion");
        }
        std::string a = assertion(f);
        if (!reference_fields().count(a)) {
          bad("unknown assertion '" + a + "'");
        }
        for (auto const& key : reference_fields().at(a)) {
          if (!f.contains(key)) {
            bad(subject(f) + ": " + a + " needs '" + key + "'");
          }
        }
        if (a == "finite_index_overgroup_of" || a == "finite_index_subgroup_of") {
          positive(f, "index", true);
        }
        if (a == "uniform_exponent") {
          positive(f, "exponent", true);
        }
        if (a == "bounded_torsion") {
          positive(f, "bound", true);
        }
        if (a == "relatively_hyperbolic") {
          positive(f, "bound", false);
        }
        if (a == "hyperbolic" && f.contains("delta")
            && (!f.at("delta").is_number() || f.at("delta").get<double>() < 0)) {
          bad(subject(f) + ": 'delta' must be a non-negative number");
        }
        subjects.insert(subject(f));
        fb.facts.push_back(f);
      }
      for (auto const& f : fb.facts) {
        for (auto const& key : reference_fields().at(assertion(f))) {
          for (auto const& n : names(f, key.c_str())) {
            if (!subjects.count(n)) {
              bad(subject(f) + ": group '" + n + "' has no facts");
            }
          }
        }
      }
      for (auto const& g : doc.value("goals", json::array())) {
        FactBase::Goal goal{g.at("group").get<std::string>(), g.value("class", "UPA")};
        if (goal.cls != "UPA" && goal.cls != "PA" && goal.cls != "UPA0") {
          bad("unknown class '" + goal.cls + "'");
        }
        fb.goals.push_back(goal);
      }
    } catch (json::exception const& e) {
      bad(e.what());
    }
    return fb;
  }

  Derivation derive_membership(FactBase::Goal const& goal, FactBase const& facts) {
    Engine     e{facts, {}, {}, false, {}};
    Derivation d;
    d.goal    = goal;
    auto node = e.derive(goal.group, goal.cls);
    if (!node) {
      if (e.cycle) {
        std::string trail;
        for (auto const& m : e.missing) {
          trail += "; " + m;
        }
        throw Error(ErrorCode::cyclic_fact_dependency,
                    goal.group + " in " + goal.cls + " not derivable" + trail);
      }
      d.missing = e.missing;
      return d;
    }
    d.derived = true;
    d.proof   = *node;
    fill_exponents(d.proof, facts);
    return d;
  }

  ExponentBound exponent_bound(DerivationNode const& proof, FactBase const& facts) {
    return compute_exponent(proof, facts);
  }

  ReplayResult replay(DerivationNode const& n, FactBase const& facts) {
    ReplayResult r;
    auto fail = [&](std::string const& m) {
      r.ok      = false;
      r.failure = n.group + " in " + n.cls + " by " + n.rule + ": " + m;
      return r;
    };
    r.nodes = 1;
    if (!n.fact.is_null() && !fact_present(facts, n.fact)) {
      return fail("fact not in the fact base");
    }
    std::optional<std::vector<Premise>> need;
    try {
      need = premises_for(n.rule, n.group, n.cls, n.fact.is_null() ? json::object() : n.fact);
    } catch (std::exception const& e) {
      return fail(e.what());
    }
    if (!need) {
      return fail("fact does not instantiate the rule");
    }
    if (need->size() != n.premises.size()) {
      return fail("wrong number of premises");
    }
    for (std::size_t i = 0; i < need->size(); ++i) {
      auto const& p = n.premises[i];
      if (p.group != (*need)[i].group || p.cls != (*need)[i].cls) {
        return fail("premise " + std::to_string(i) + " concludes " + p.group + " in " + p.cls);
      }
      if (n.rule == "central-extension" && p.rule != "hyperbolic") {
        return fail("quotient is not derived hyperbolic");
      }
    }
    if (n.rule == "acylindrical-tree" && !roots_closed(n.fact)) {
      return fail("vertex stabilisers not closed under roots");
    }
    for (auto const& p : n.premises) {
      auto s = replay(p, facts);
      r.nodes += s.nodes;
      if (!s.ok) {
        r.ok      = false;
        r.failure = s.failure;
        return r;
      }
    }
    auto e = compute_exponent(n, facts);
    if (e.computed != n.exponent.computed || e.value != n.exponent.value) {
      return fail("exponent does not recompute");
    }
    return r;
  }

  json to_json(ExponentBound const& e) {
    if (e.computed) {
      return {{"value", e.value}, {"trail", e.trail}};
    }
    return {{"value", "finite, not computed"}, {"reason", e.reason}};
  }

  json to_json(DerivationNode const& n) {
    json j = {{"group", n.group},
              {"class", n.cls},
              {"rule", n.rule},
              {"statement", n.statement},
              {"exponent", to_json(n.exponent)}};
    if (n.cls == "PA") {
      j["exponent"] = {{"value", "not applicable"}};
    }
    if (!n.fact.is_null()) {
      j["fact"] = {{"assertion", n.fact}, {"status", "UNVERIFIED"}};
    }
    if (!n.checks.empty()) {
      j["checks"] = n.checks;
    }
    json ps = json::array();
    for (auto const& p : n.premises) {
      ps.push_back(to_json(p));
    }
    j["premises"] = ps;
    return j;
  }

  json to_json(Derivation const& d) {
    json j = {{"goal", {{"group", d.goal.group}, {"class", d.goal.cls}}},
              {"derived", d.derived}};
    if (d.derived) {
      j["proof"]    = to_json(d.proof);
      j["exponent"] = d.goal.cls == "PA" ? json{{"value", "not applicable"}}
                                         : to_json(d.proof.exponent);
      j["proof_text"] = render_proof(d.proof);
    } else {
      j["missing"] = d.missing;
    }
    return j;
  }

  namespace {
    void render(DerivationNode const& n, std::size_t depth, std::vector<std::string>& out) {
      std::string line(2 * depth, ' ');
      line += n.group + " in " + n.cls + " by " + n.rule;
      if (n.cls != "PA") {
        line += n.exponent.computed ? ", exponent " + std::to_string(n.exponent.value)
                                    : ", exponent finite, not computed";
      }
      if (!n.fact.is_null() && n.premises.empty()) {
        line += " [UNVERIFIED fact]";
      }
      out.push_back(line);
      for (auto const& p : n.premises) {
        render(p, depth + 1, out);
      }
    }
  }  // namespace

  std::vector<std::string> render_proof(DerivationNode const& n) {
    std::vector<std::string> out;
    render(n, 0, out);
    return out;
  }

}  // namespace powalt
