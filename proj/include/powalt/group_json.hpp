#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "powalt/bass_serre.hpp"
#include "powalt/group.hpp"

namespace powalt {

  // Group descriptions:
  //   {"type": "trivial"}
  //   {"type": "cyclic", "generator": "a", "order": 5}
  //   {"type": "free_abelian", "generators": ["a", "b"]}
  //   {"type": "free", "generators": ["a", "b"]}
  //   {"type": "graph_product_z", "generators": [...], "commuting": [["a","b"], ...]}
  //   {"type": "dihedral_artin", "generators": ["a","b"], "label": 3}
  //   {"type": "artin", "graph": <graph JSON> | "graph { ... }"}
  //   {"type": "direct_product", "factors": [<group>, ...]}
  //   {"type": "amalgam", "left": <group>, "right": <group>,
  //    "left_image": "word", "right_image": "word"}
  //   {"type": "hnn", "base": <group>, "stable_letter": "t",
  //    "from_image": "word", "to_image": "word"}      t from t^-1 = to
  GroupPtr group_from_json(nlohmann::json const& j);

  // A one-edge graph of groups with its fundamental group and tree.
  //   {"schema_version": 1,
  //    "vertices": [{"name": "A", "group": <group>}, ...],
  //    "edges": [{"name": "e", "source": "A", "target": "B",
  //               "source_image": "word", "target_image": "word",
  //               "stable_letter": "t"}]}
  // source == target makes an HNN extension with
  // t source_image t^-1 = target_image.  A plain group description of
  // type amalgam, hnn or artin is accepted too.
  struct GraphOfGroups {
    nlohmann::json                 document;
    std::vector<std::string>       vertex_names;
    GroupPtr                       group;
    std::shared_ptr<BassSerreTree> tree;  // null if the group does not split
  };

  GraphOfGroups  gog_from_json(nlohmann::json const& j);
  nlohmann::json load_json(std::string const& path);

}  // namespace powalt
