#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "powalt/splitting.hpp"
#include "powalt/tree.hpp"

namespace powalt {

  // The Bass-Serre tree of a one-edge splitting.  Vertices are cosets
  // x * G_v with x the canonical representative; the base is 1 * G_0.
  class BassSerreTree : public ActingTree {
   public:
    virtual int                vertex_types() const                = 0;
    virtual std::string const& vertex_group_name(int type) const   = 0;
    virtual Group const&       vertex_group(int type) const        = 0;
    // edge subgroup images inside the vertex group of the given type
    virtual std::vector<Word> edge_images(int type) const = 0;

    // x^-1 g x as a word of the vertex group (g must fix v = x G_v)
    virtual Word to_vertex_coordinates(Vertex const& v, Word const& g) const = 0;
    virtual Word from_vertex_coordinates(Vertex const& v, Word const& y) const = 0;
    // generator of the stabiliser of the edge from parent(child) to child
    virtual Word edge_stabiliser(Vertex const& child) const = 0;

    std::string label(Vertex const& v) const override;

    GroupPtr const& group_ptr() const noexcept {
      return _group;
    }
    Group const& group() const override {
      return *_group;
    }

    // Structural reason for the stabilisation property, empty if none.
    std::string stabilisation_rule;

   protected:
    explicit BassSerreTree(GroupPtr g) : _group(std::move(g)) {}
    GroupPtr _group;
  };

  std::shared_ptr<BassSerreTree>
  amalgam_tree(std::shared_ptr<Amalgam const> G, std::array<std::string, 2> names);
  std::shared_ptr<BassSerreTree> hnn_tree(std::shared_ptr<Hnn const> G,
                                          std::string                 name);

  struct StabiliserDescriptor {
    Vertex anchor;
    Word   conjugator;
    bool   whole_vertex_group = false;
    Word   generator;  // vertex-group word at the anchor, empty if trivial
    Word   global;     // conjugator * generator * conjugator^-1

    bool trivial() const {
      return !whole_vertex_group && generator.empty();
    }
  };

  StabiliserDescriptor pointwise_stabiliser(BassSerreTree const& t,
                                            Geodesic const&      gamma,
                                            Budget*              budget = nullptr);

  struct StabilisationStep {
    std::size_t          n = 0;
    StabiliserDescriptor stabiliser;
    bool                 strict = false;
    Word                 separator;  // in H_n, moves a vertex of gamma_{n+1}
    Vertex               moved;
  };

  struct StabilisationReport {
    enum class Verdict { stabilises, strict_decrease, inconclusive };
    Verdict                        verdict = Verdict::inconclusive;
    std::size_t                    step    = 0;  // 1-based, for stabilises
    std::size_t                    window  = 0;
    Word                           ray;
    std::vector<StabilisationStep> chain;
    std::string                    justification;
    std::string                    reason;
  };

  // gamma_n = [g^-n p, g^(W+2) p] with p the base projection on Axis(g).
  StabilisationReport stabilisation_probe(BassSerreTree const& t,
                                          Word const&          g,
                                          std::size_t          W,
                                          Budget*              budget = nullptr);

  // xi = g^{sign * inf}
  struct BoundaryPoint {
    Word element;
    int  sign = 1;
  };

  long long utl_value(ActingTree const&    t,
                      BoundaryPoint const& xi,
                      Word const&          h,
                      std::size_t          W,
                      Budget*              budget = nullptr);

  struct RootsClosure {
    enum class Verdict { holds, fails, unsupported };
    Verdict                  verdict = Verdict::holds;
    std::string              vertex;
    std::vector<std::string> evidence;
    std::vector<Word>        pair;
    Word                     witness;
  };

  RootsClosure roots_closure_check(BassSerreTree const& t);

}  // namespace powalt
