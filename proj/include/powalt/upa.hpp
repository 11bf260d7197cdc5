#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace powalt {

  // Assertions about named groups.  Every fact is trusted as given and
  // marked unverified in reports.
  //   {"subject": "G", "assertion": "hyperbolic", "delta": 2}
  //   {"subject": "G", "assertion": "central_z_extension_of", "quotient": "H"}
  //   {"subject": "G", "assertion": "finite_index_overgroup_of", "group": "H", "index": 6}
  //   {"subject": "H", "assertion": "finite_index_subgroup_of", "group": "G", "index": 6}
  //   {"subject": "G", "assertion": "direct_product_of", "factors": ["A", "B"]}
  //   {"subject": "G", "assertion": "graph_product_of", "graph": ..., "factors": [...]}
  //   {"subject": "G", "assertion": "acylindrical_cocompact_tree_action",
  //    "vertex_groups": [...], "roots_closed": true | "gog": <graph of groups>}
  //   {"subject": "G", "assertion": "stabilisation_tree_action", "point_stabilisers": [...]}
  //   {"subject": "G", "assertion": "relatively_hyperbolic", "peripherals": [...],
  //    "bounded_torsion": true, "bound": 4}
  //   {"subject": "G", "assertion": "bounded_torsion", "bound": 4}
  //   {"subject": "G", "assertion": "uniform_exponent", "exponent": 1}
  struct FactBase {
    std::vector<nlohmann::json> facts;
    struct Goal {
      std::string group;
      std::string cls;  // UPA0, UPA or PA
    };
    std::vector<Goal> goals;
  };

  FactBase parse_facts(nlohmann::json const& doc);

  struct ExponentBound {
    bool                     computed = false;
    long long                value    = 0;
    std::string              reason;  // first rule without effective constants
    std::vector<std::string> trail;
  };

  struct DerivationNode {
    std::string                 group;
    std::string                 cls;
    std::string                 rule;
    std::string                 statement;  // the closure property used
    nlohmann::json              fact;       // null for rules without one
    std::vector<DerivationNode> premises;
    std::vector<std::string>    checks;     // premises discharged by computation
    ExponentBound               exponent;
  };

  struct Derivation {
    FactBase::Goal           goal;
    bool                     derived = false;
    DerivationNode           proof;
    std::vector<std::string> missing;  // failure trace
  };

  // Backward chaining over the closure rules.  Throws
  // cyclic-fact-dependency when the goal fails and the facts contain a
  // dependency cycle on the way.
  Derivation derive_membership(FactBase::Goal const& goal, FactBase const& facts);

  ExponentBound exponent_bound(DerivationNode const& proof, FactBase const& facts);

  struct ReplayResult {
    bool        ok = true;
    std::size_t nodes = 0;
    std::string failure;
  };

  // Re-checks every rule instance against the facts and its premises.
  ReplayResult replay(DerivationNode const& proof, FactBase const& facts);

  nlohmann::json to_json(DerivationNode const& n);
  nlohmann::json to_json(Derivation const& d);
  nlohmann::json to_json(ExponentBound const& e);
  std::vector<std::string> render_proof(DerivationNode const& n);

}  // namespace powalt
