#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

namespace powalt {

  // Labelled simplicial graph; a missing edge means m = infinity.
  // Vertices are kept sorted by name.
  class PresentationGraph {
   public:
    int  add_vertex(std::string const& name);
    void add_edge(std::string const& u, std::string const& v, int label);

    std::size_t size() const noexcept {
      return _names.size();
    }
    std::vector<std::string> const& vertices() const noexcept {
      return _names;
    }
    std::string const& name(int v) const {
      return _names.at(v);
    }
    int index(std::string_view name) const;  // -1 if absent
    // 0 if there is no edge
    int  label(int u, int v) const;
    bool adjacent(int u, int v) const {
      return label(u, v) != 0;
    }
    // (u, v, m) with u < v
    std::vector<std::tuple<int, int, int>> edges() const;
    bool                                   complete() const;

    PresentationGraph induced(std::vector<int> const& subset) const;
    std::vector<int>  indices(std::vector<std::string> const& names) const;

   private:
    std::vector<std::string>         _names;
    std::map<std::pair<std::string, std::string>, int> _labels;
  };

  // graph  := 'graph' ident? '{' stmt* '}'
  // stmt   := ident ';'? | ident '--' ident '[' 'label' '=' int ']' ';'?
  // '#' and '//' start comments running to the end of the line.
  PresentationGraph parse_graph_dot(std::string_view text);
  PresentationGraph graph_from_json(nlohmann::json const& j);
  nlohmann::json    graph_to_json(PresentationGraph const& g);
  // JSON if the first non-blank character is '{' and the text does not
  // start with the 'graph' keyword, DOT otherwise.
  PresentationGraph parse_graph(std::string_view text);
  PresentationGraph load_graph(std::string const& path);

  struct Flag {
    std::string status;  // "by-rule", "unproven", "undetermined"
    std::string rule;
  };

  struct ClassificationReport {
    bool dihedral          = false;
    bool even              = false;
    bool triangle_free     = false;
    bool two_two_free      = false;
    bool two_dimensional   = false;
    bool fc_type           = false;
    bool spherical         = false;
    bool free_of_infinity  = false;
    std::string spherical_type;  // e.g. "A2 x I2(5)", empty if not spherical
    Flag intersection_property;
    Flag normaliser_property;
    Flag hyperbolic_type;
  };

  // Cartan type of a finite Coxeter group on the full subgraph, or "" if
  // the Coxeter group is infinite.
  std::string          spherical_type(PresentationGraph const& g);
  ClassificationReport classify_graph(PresentationGraph const& g);

  struct ExponentReport {
    std::vector<std::tuple<std::string, std::string, int, long long>> edges;  // u, v, m, m'
    long long N        = 1;
    long long adjusted = 3;
    bool      covered  = true;  // (2,2)-free and triangle-free
    std::vector<std::string> notes;
  };

  long long      dihedral_index(int m);  // m' = m/2 (even), 2m (odd)
  ExponentReport uniform_exponent(PresentationGraph const& g);

  struct VisualSplitting {
    std::vector<std::string> gamma1, gamma2, gamma0;
  };

  std::vector<VisualSplitting> visual_splittings(PresentationGraph const& g);
  // fewest separator vertices, then lexicographic
  std::optional<VisualSplitting> preferred_splitting(PresentationGraph const& g);

  struct ReductionNode {
    std::vector<std::string>   vertices;
    bool                       leaf = true;
    VisualSplitting            split;
    Flag                       intersection_property;
    Flag                       normaliser_property;
    std::vector<ReductionNode> children;
  };

  ReductionNode reduction_report(PresentationGraph const& g);
  std::vector<std::vector<std::string>> reduction_leaves(ReductionNode const& n);

  nlohmann::json to_json(ClassificationReport const& r);
  nlohmann::json to_json(ExponentReport const& r);
  nlohmann::json to_json(VisualSplitting const& s);
  nlohmann::json to_json(ReductionNode const& n);

}  // namespace powalt
