#include "powalt/group_json.hpp"

#include <fstream>

#include "powalt/artin_group.hpp"
#include "powalt/error.hpp"
#include "powalt/groups.hpp"
#include "powalt/splitting.hpp"

namespace powalt {

  using nlohmann::json;

  namespace {

    [[noreturn]] void bad(std::string const& msg) {
      throw Error(ErrorCode::input_error, msg);
    }

    json const& field(json const& j, char const* name) {
      if (!j.is_object() || !j.contains(name)) {
        bad(std::string("missing field '") + name + "'");
      }
      return j.at(name);
    }

    std::string text(json const& j, char const* name) {
      auto const& f = field(j, name);
      if (!f.is_string()) {
        bad(std::string("field '") + name + "' must be a string");
      }
      return f.get<std::string>();
    }

    std::vector<std::string> names(json const& j, char const* name) {
      auto const& f = field(j, name);
      if (!f.is_array()) {
        bad(std::string("field '") + name + "' must be an array of names");
      }
      std::vector<std::string> out;
      for (auto const& x : f) {
        if (!x.is_string()) {
          bad(std::string("field '") + name + "' must be an array of names");
        }
        out.push_back(x.get<std::string>());
      }
      return out;
    }

    long long integer(json const& j, char const* name) {
      auto const& f = field(j, name);
      if (!f.is_number_integer()) {
        bad(std::string("field '") + name + "' must be an integer");
      }
      return f.get<long long>();
    }

  }  // namespace

  GroupPtr group_from_json(json const& j) {
    std::string type = text(j, "type");
    if (type == "trivial") {
      return std::make_shared<TrivialGroup>();
    }
    if (type == "cyclic") {
      return std::make_shared<FiniteCyclic>(text(j, "generator"), integer(j, "order"));
    }
    if (type == "free_abelian") {
      return std::make_shared<FreeAbelian>(names(j, "generators"));
    }
    if (type == "free") {
      return std::make_shared<FreeGroup>(names(j, "generators"));
    }
    if (type == "graph_product_z") {
      auto                             gens = names(j, "generators");
      Alphabet                         al(gens);
      std::vector<std::pair<int, int>> pairs;
      for (auto const& p : j.value("commuting", json::array())) {
        if (!p.is_array() || p.size() != 2) {
          bad("commuting entries must be pairs of names");
        }
        int a = al.index(p[0].get<std::string>());
        int b = al.index(p[1].get<std::string>());
        if (a < 0 || b < 0) {
          bad("commuting pair names an unknown generator");
        }
        pairs.emplace_back(a, b);
      }
      return std::make_shared<GraphProductZ>(gens, pairs);
    }
    if (type == "dihedral_artin") {
      return std::make_shared<DihedralArtin>(names(j, "generators"),
                                             static_cast<int>(integer(j, "label")));
    }
    if (type == "artin") {
      auto const& g = field(j, "graph");
      return artin_group(g.is_string() ? parse_graph(g.get<std::string>()) : graph_from_json(g));
    }
    if (type == "direct_product") {
      std::vector<GroupPtr> fs;
      for (auto const& f : field(j, "factors")) {
        fs.push_back(group_from_json(f));
      }
      return std::make_shared<DirectProduct>(fs);
    }
    if (type == "amalgam") {
      auto l = group_from_json(field(j, "left"));
      auto r = group_from_json(field(j, "right"));
      return std::make_shared<Amalgam>(l,
                                       r,
                                       parse_word(text(j, "left_image"), l->alphabet()),
                                       parse_word(text(j, "right_image"), r->alphabet()));
    }
    if (type == "hnn") {
      auto b = group_from_json(field(j, "base"));
      return std::make_shared<Hnn>(b,
                                   parse_word(text(j, "from_image"), b->alphabet()),
                                   parse_word(text(j, "to_image"), b->alphabet()),
                                   text(j, "stable_letter"));
    }
    bad("unknown group type '" + type + "'");
  }

  GraphOfGroups gog_from_json(json const& j) {
    GraphOfGroups out;
    out.document = j;
    if (j.is_object() && j.contains("type")) {
      std::string type = text(j, "type");
      out.group        = group_from_json(j);
      if (type == "amalgam") {
        out.vertex_names = {"L", "R"};
        out.tree         = amalgam_tree(std::dynamic_pointer_cast<Amalgam const>(out.group),
                                        {"L", "R"});
      } else if (type == "hnn") {
        out.vertex_names = {"B"};
        out.tree = hnn_tree(std::dynamic_pointer_cast<Hnn const>(out.group), "B");
      } else if (type == "artin") {
        auto const& g  = field(j, "graph");
        auto        pg = g.is_string() ? parse_graph(g.get<std::string>()) : graph_from_json(g);
        if (auto s = artin_splitting(pg)) {
          out.group        = s->group;
          out.tree         = s->tree;
          out.vertex_names = {s->tree->vertex_group_name(0), s->tree->vertex_group_name(1)};
        }
      }
      return out;
    }
    if (j.contains("schema_version") && j.at("schema_version") != 1) {
      bad("unsupported graph-of-groups schema_version");
    }
    auto const& vs = field(j, "vertices");
    auto const& es = field(j, "edges");
    if (!vs.is_array() || vs.empty() || vs.size() > 2) {
      bad("a graph of groups needs one or two vertices");
    }
    if (!es.is_array() || es.size() != 1) {
      bad("exactly one edge is supported");
    }
    std::vector<GroupPtr> groups;
    for (auto const& v : vs) {
      out.vertex_names.push_back(text(v, "name"));
      groups.push_back(group_from_json(field(v, "group")));
    }
    auto const& e      = es[0];
    auto        find   = [&](std::string const& n) {
      for (std::size_t i = 0; i < out.vertex_names.size(); ++i) {
        if (out.vertex_names[i] == n) {
          return static_cast<int>(i);
        }
      }
      bad("edge refers to unknown vertex '" + n + "'");
    };
    int s = find(text(e, "source"));
    int t = find(text(e, "target"));
    if (s == t) {
      if (vs.size() != 1) {
        bad("an HNN edge needs a single vertex");
      }
      auto const& B = groups[s];
      auto G = std::make_shared<Hnn>(B,
                                     parse_word(text(e, "source_image"), B->alphabet()),
                                     parse_word(text(e, "target_image"), B->alphabet()),
                                     text(e, "stable_letter"));
      out.group = G;
      out.tree  = hnn_tree(G, out.vertex_names[s]);
      return out;
    }
    if (vs.size() != 2) {
      bad("an amalgam edge needs two vertices");
    }
    auto G = std::make_shared<Amalgam>(groups[s],
                                       groups[t],
                                       parse_word(text(e, "source_image"), groups[s]->alphabet()),
                                       parse_word(text(e, "target_image"), groups[t]->alphabet()));
    out.vertex_names = {out.vertex_names[s], out.vertex_names[t]};
    out.group        = G;
    out.tree         = amalgam_tree(G, {out.vertex_names[0], out.vertex_names[1]});
    return out;
  }

  json load_json(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorCode::input_error, "cannot open " + path);
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw ParseError("", e.byte, std::string("malformed JSON in ") + path);
    }
  }

}  // namespace powalt
