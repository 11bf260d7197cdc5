#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "powalt/group.hpp"
#include "powalt/word.hpp"

namespace powalt {

  // A vertex of a coset tree: orbit type and canonical coset representative.
  struct Vertex {
    int  type = 0;
    Word rep;

    bool operator==(Vertex const&) const = default;
  };

  bool vertex_less(Vertex const& a, Vertex const& b);

  struct VertexHash {
    std::size_t operator()(Vertex const& v) const noexcept {
      return WordHash()(v.rep) * 31 + static_cast<std::size_t>(v.type);
    }
  };

  inline constexpr std::size_t default_node_budget = 100000;

  // Counts vertices touched by lazy expansion.
  class Budget {
   public:
    explicit Budget(std::size_t limit = default_node_budget) : _limit(limit) {}
    void        charge(std::size_t n = 1);
    std::size_t used() const noexcept {
      return _used;
    }
    std::size_t limit() const noexcept {
      return _limit;
    }

   private:
    std::size_t _limit;
    std::size_t _used = 0;
  };

  struct Neighbours {
    std::vector<Vertex> vertices;
    bool                exhaustive = true;
  };

  struct Geodesic {
    std::vector<Vertex> vertices;
    std::size_t         length() const {
      return vertices.empty() ? 0 : vertices.size() - 1;
    }
  };

  // Rooted simplicial tree given by a parent structure.
  class Tree {
   public:
    virtual ~Tree() = default;

    virtual Vertex base() const = 0;
    // base, ..., v
    virtual std::vector<Vertex> path_from_base(Vertex const& v) const = 0;
    virtual Neighbours children(Vertex const& v, std::size_t limit) const = 0;
    virtual std::string label(Vertex const& v) const;

    std::optional<Vertex> parent(Vertex const& v) const;
    Neighbours            neighbours(Vertex const& v, std::size_t limit) const;
  };

  // A tree with a group acting by automorphisms without inversions.
  class ActingTree : public Tree {
   public:
    virtual Group const& group() const                           = 0;
    virtual Vertex       act(Word const& g, Vertex const& v) const = 0;
    // children of v fixed by g (g must fix v)
    virtual Neighbours fixed_children(Vertex const& v,
                                      Word const&   g,
                                      std::size_t   limit) const;

    bool fixes(Word const& g, Vertex const& v) const {
      return act(g, v) == v;
    }
  };

  std::size_t distance(Tree const&   t,
                       Vertex const& u,
                       Vertex const& v,
                       Budget*       budget = nullptr);
  Geodesic    geodesic(Tree const&   t,
                       Vertex const& u,
                       Vertex const& v,
                       Budget*       budget = nullptr);
  // the vertex at distance k from u on [u, v]
  Vertex along(Tree const& t, Vertex const& u, Vertex const& v, std::size_t k,
               Budget* budget = nullptr);

  struct IsometryClass {
    enum class Kind { elliptic, loxodromic };
    Kind      kind = Kind::elliptic;
    Vertex    fixed;  // elliptic: a fixed vertex
    long long tau = 0;
    Geodesic  axis;  // loxodromic: [p, g p] with p the projection of the base

    bool elliptic() const {
      return kind == Kind::elliptic;
    }
  };

  IsometryClass classify_isometry(ActingTree const& t,
                                  Word const&       g,
                                  Vertex const&     x,
                                  Budget*           budget = nullptr);
  inline IsometryClass classify_isometry(ActingTree const& t, Word const& g,
                                         Budget* budget = nullptr) {
    return classify_isometry(t, g, t.base(), budget);
  }

  struct FixedSetSample {
    Vertex              center;
    std::vector<Vertex> vertices;
    std::size_t         radius     = 0;
    int                 max_power  = 1;
    bool                exhaustive = true;
  };

  // Fix(g) u ... u Fix(g^K) within distance R of a fixed vertex of g.
  FixedSetSample fixed_set_ball(ActingTree const& t,
                                Word const&       g,
                                std::size_t       R,
                                int               K            = 1,
                                std::size_t       branch_limit = default_coset_limit,
                                Budget*           budget       = nullptr);

  // Coordinates along the axis of a loxodromic element: position 0 is the
  // projection of the base, positive positions point towards h^{+inf}.
  class AxisFrame {
   public:
    AxisFrame(ActingTree const& t, Word h, Budget* budget = nullptr);

    Word const& element() const noexcept {
      return _h;
    }
    long long tau() const noexcept {
      return _tau;
    }
    Vertex const& anchor() const noexcept {
      return _segment.vertices.front();
    }
    Geodesic const& segment() const noexcept {
      return _segment;
    }
    Vertex      at(long long pos) const;
    long long   position(Vertex const& x) const;  // of the projection
    std::size_t distance_to_axis(Vertex const& x) const;
    Vertex      projection(Vertex const& x) const;

   private:
    ActingTree const* _t;
    Word              _h;
    long long         _tau;
    Geodesic          _segment;
    Budget*           _budget;
  };

  struct Overlap {
    bool      empty = true;
    long long lo = 0, hi = 0;  // positions on the axis of h
    bool      exceeds_low  = false;
    bool      exceeds_high = false;
    long long window_lo = 0, window_hi = 0;

    bool bounded() const {
      return !exceeds_low && !exceeds_high;
    }
    long long length() const {
      return empty ? 0 : hi - lo;
    }
  };

  // Min(g) meet Axis(h) inside W fundamental domains of h on each side.
  // For elliptic g, Min(g) is Fix(g^power).
  Overlap axis_overlap(ActingTree const& t,
                       Word const&       g,
                       Word const&       h,
                       std::size_t       W,
                       long long         power  = 1,
                       Budget*           budget = nullptr);

  struct Ball {
    std::vector<Vertex> vertices;
    bool                exhaustive = true;
  };

  Ball ball(Tree const&   t,
            Vertex const& center,
            std::size_t   R,
            std::size_t   branch_limit,
            Budget*       budget = nullptr);

}  // namespace powalt
