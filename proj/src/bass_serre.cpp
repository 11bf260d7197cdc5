#include "powalt/bass_serre.hpp"

#include <algorithm>
#include <numeric>

#include "powalt/error.hpp"
#include "powalt/groups.hpp"

namespace powalt {

  std::string BassSerreTree::label(Vertex const& v) const {
    return format_word(v.rep, group().alphabet()) + "·" + vertex_group_name(v.type);
  }

  namespace {

    [[noreturn]] void not_fixed(Group const& G, Word const& g) {
      throw Error(ErrorCode::input_error,
                  format_word(g, G.alphabet()) + " does not fix the vertex");
    }

    class AmalgamTree : public BassSerreTree {
     public:
      AmalgamTree(std::shared_ptr<Amalgam const> G, std::array<std::string, 2> names)
          : BassSerreTree(G), _G(std::move(G)), _names(std::move(names)) {}

      Vertex base() const override {
        return {0, {}};
      }

      int vertex_types() const override {
        return 2;
      }
      std::string const& vertex_group_name(int type) const override {
        return _names.at(type);
      }
      Group const& vertex_group(int type) const override {
        return *_G->factor(type);
      }
      std::vector<Word> edge_images(int type) const override {
        return {_G->edge_image(type)};
      }

      std::vector<Vertex> path_from_base(Vertex const& v) const override {
        auto                f    = _G->decompose(v.rep);
        int                 type = v.type;
        std::vector<Vertex> rev;
        for (std::size_t j = f.reps.size() + 1; j-- > 0;) {
          rev.push_back({type, _G->compose(f.reps, j)});
          type = 1 - type;
        }
        if (rev.back().type == 1) {
          rev.push_back(base());
        }
        return {rev.rbegin(), rev.rend()};
      }

      Neighbours children(Vertex const& v, std::size_t limit) const override {
        int  X    = v.type;
        auto list = _G->factor(X)->coset_reps(_G->edge_image(X), limit);
        return make_children(v, list);
      }

      Neighbours fixed_children(Vertex const& v,
                                Word const&   g,
                                std::size_t   limit) const override {
        int  X    = v.type;
        Word y    = to_vertex_coordinates(v, g);
        auto list = _G->factor(X)->fixed_cosets(_G->edge_image(X), y, limit);
        return make_children(v, list);
      }

      Vertex act(Word const& g, Vertex const& v) const override {
        auto f = _G->decompose(concat(g, v.rep));
        if (!f.reps.empty() && f.reps.back().first == v.type) {
          f.reps.pop_back();
        }
        return {v.type, _G->compose(f.reps, f.reps.size())};
      }

      Word to_vertex_coordinates(Vertex const& v, Word const& g) const override {
        int  X = v.type;
        auto f = _G->decompose(concat(concat(inverse(v.rep), g), v.rep));
        if (f.reps.size() > 1 || (f.reps.size() == 1 && f.reps[0].first != X)) {
          not_fixed(*_G, g);
        }
        Word y = f.reps.empty() ? Word{} : f.reps[0].second;
        return _G->factor(X)->normalize(
            concat(y, power(_G->edge_image(X), f.edge_exp)));
      }

      Word from_vertex_coordinates(Vertex const& v, Word const& y) const override {
        return _G->normalize(conjugate(v.rep, _G->from_factor(v.type, y)));
      }

      Word edge_stabiliser(Vertex const& child) const override {
        if (_G->trivial_edge()) {
          return {};
        }
        return _G->normalize(conjugate(child.rep, _G->from_factor(0, _G->edge_image(0))));
      }

     private:
      std::shared_ptr<Amalgam const> _G;
      std::array<std::string, 2>     _names;

      Neighbours make_children(Vertex const& v, CosetList const& list) const {
        int        X = v.type;
        Neighbours out;
        out.exhaustive = list.exhaustive;
        bool root      = v.type == 0 && v.rep.empty();
        auto f         = _G->decompose(v.rep);
        for (auto const& t : list.reps) {
          if (t.empty()) {
            if (root) {
              out.vertices.push_back({1, {}});
            }
            continue;
          }
          auto reps = f.reps;
          reps.emplace_back(X, t);
          out.vertices.push_back({1 - X, _G->compose(reps, reps.size())});
        }
        return out;
      }
    };

    class HnnTree : public BassSerreTree {
     public:
      HnnTree(std::shared_ptr<Hnn const> G, std::string name)
          : BassSerreTree(G), _G(std::move(G)), _name(std::move(name)) {}

      Vertex base() const override {
        return {0, {}};
      }
      int vertex_types() const override {
        return 1;
      }
      std::string const& vertex_group_name(int) const override {
        return _name;
      }
      Group const& vertex_group(int) const override {
        return *_G->base();
      }
      std::vector<Word> edge_images(int) const override {
        return {_G->from_image(), _G->to_image()};
      }

      std::vector<Vertex> path_from_base(Vertex const& v) const override {
        auto                f = _G->decompose(v.rep);
        std::vector<Vertex> out;
        for (std::size_t j = 0; j <= f.steps.size(); ++j) {
          out.push_back({0, _G->compose(f.steps, j)});
        }
        return out;
      }

      Neighbours children(Vertex const& v, std::size_t limit) const override {
        return make_children(v, [&](Word const& sub) {
          return _G->base()->coset_reps(sub, limit);
        });
      }

      Neighbours fixed_children(Vertex const& v,
                                Word const&   g,
                                std::size_t   limit) const override {
        Word y = to_vertex_coordinates(v, g);
        return make_children(v, [&](Word const& sub) {
          return _G->base()->fixed_cosets(sub, y, limit);
        });
      }

      Vertex act(Word const& g, Vertex const& v) const override {
        auto f = _G->decompose(concat(g, v.rep));
        return {0, _G->compose(f.steps, f.steps.size())};
      }

      Word to_vertex_coordinates(Vertex const& v, Word const& g) const override {
        auto f = _G->decompose(concat(concat(inverse(v.rep), g), v.rep));
        if (!f.steps.empty()) {
          not_fixed(*_G, g);
        }
        return f.tail;
      }

      Word from_vertex_coordinates(Vertex const& v, Word const& y) const override {
        return _G->normalize(conjugate(v.rep, _G->from_base(y)));
      }

      Word edge_stabiliser(Vertex const& child) const override {
        auto f = _G->decompose(child.rep);
        if (f.steps.empty() || _G->from_image().empty()) {
          return {};
        }
        auto [b, eps] = f.steps.back();
        Word x        = _G->compose(f.steps, f.steps.size() - 1);
        Word sub      = eps == 1 ? _G->to_image() : _G->from_image();
        return _G->normalize(conjugate(concat(x, b), sub));
      }

     private:
      std::shared_ptr<Hnn const> _G;
      std::string                _name;

      template <typename Fn>
      Neighbours make_children(Vertex const& v, Fn&& reps_for) const {
        auto       f = _G->decompose(v.rep);
        int        last = f.steps.empty() ? 0 : f.steps.back().second;
        Neighbours out;
        for (int eps : {1, -1}) {
          // t^eps B is adjacent to B through <to> for eps = 1
          auto list = reps_for(eps == 1 ? _G->to_image() : _G->from_image());
          out.exhaustive = out.exhaustive && list.exhaustive;
          for (auto const& b : list.reps) {
            if (b.empty() && eps == -last) {
              continue;
            }
            auto steps = f.steps;
            steps.emplace_back(b, eps);
            out.vertices.push_back({0, _G->compose(steps, steps.size())});
          }
        }
        return out;
      }
    };

  }  // namespace

  std::shared_ptr<BassSerreTree>
  amalgam_tree(std::shared_ptr<Amalgam const> G, std::array<std::string, 2> names) {
    return std::make_shared<AmalgamTree>(std::move(G), std::move(names));
  }

  std::shared_ptr<BassSerreTree> hnn_tree(std::shared_ptr<Hnn const> G,
                                          std::string                 name) {
    return std::make_shared<HnnTree>(std::move(G), std::move(name));
  }

  ////////////////////////////////////////////////////////////////////////
  // Pointwise stabilisers
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::size_t depth(Tree const& t, Vertex const& v) {
      return t.path_from_base(v).size() - 1;
    }

    // The edge stabiliser of two adjacent vertices.
    Word edge_between(BassSerreTree const& t, Vertex const& a, Vertex const& b) {
      return depth(t, a) < depth(t, b) ? t.edge_stabiliser(b) : t.edge_stabiliser(a);
    }
  }  // namespace

  StabiliserDescriptor pointwise_stabiliser(BassSerreTree const& t,
                                            Geodesic const&      gamma,
                                            Budget*              budget) {
    auto const& vs = gamma.vertices;
    if (vs.empty()) {
      throw Error(ErrorCode::input_error, "empty geodesic");
    }
    StabiliserDescriptor d;
    d.anchor = *std::min_element(vs.begin(), vs.end(), [&](Vertex const& a, Vertex const& b) {
      return depth(t, a) < depth(t, b);
    });
    d.conjugator = d.anchor.rep;
    if (vs.size() == 1) {
      d.whole_vertex_group = true;
      return d;
    }
    Group const& G = t.group();
    Word         K = edge_between(t, vs[0], vs[1]);
    for (std::size_t i = 1; i + 1 < vs.size() && !K.empty(); ++i) {
      if (budget) {
        budget->charge();
      }
      Word E = edge_between(t, vs[i], vs[i + 1]);
      if (E.empty()) {
        K.clear();
        break;
      }
      Group const& V    = t.vertex_group(vs[i].type);
      Word         y1   = t.to_vertex_coordinates(vs[i], K);
      Word         y2   = t.to_vertex_coordinates(vs[i], E);
      CyclicMeet   meet = V.cyclic_intersection(y1, y2);
      K                 = meet.trivial ? Word{} : G.normalize(power(K, meet.p));
    }
    if (!K.empty()) {
      Group const& V = t.vertex_group(d.anchor.type);
      Word         y = t.to_vertex_coordinates(d.anchor, K);
      if (!y.empty() && y.front().exp < 0) {
        y = V.normalize(inverse(y));
      }
      d.generator = y;
      d.global    = t.from_vertex_coordinates(d.anchor, y);
    }
    return d;
  }

  ////////////////////////////////////////////////////////////////////////
  // Stabilisation probe
  ////////////////////////////////////////////////////////////////////////

  StabilisationReport stabilisation_probe(BassSerreTree const& t,
                                          Word const&          g,
                                          std::size_t          W,
                                          Budget*              budget) {
    AxisFrame           frame(t, g, budget);
    long long           tau = frame.tau();
    long long           far = static_cast<long long>(W + 2) * tau;
    StabilisationReport rep;
    rep.window = W;
    rep.ray    = frame.element();

    auto gamma = [&](std::size_t n) {
      return geodesic(t, frame.at(-static_cast<long long>(n) * tau), frame.at(far), budget);
    };
    std::vector<StabiliserDescriptor> H;
    for (std::size_t n = 0; n <= W + 1; ++n) {
      H.push_back(pointwise_stabiliser(t, gamma(n), budget));
    }
    std::size_t last_strict = 0;
    bool        any_strict  = false;
    for (std::size_t n = 0; n <= W; ++n) {
      StabilisationStep step;
      step.n          = n;
      step.stabiliser = H[n];
      if (!H[n].trivial()) {
        // H_{n+1} = H_n iff the generator of H_n fixes the new vertices
        for (long long pos = -static_cast<long long>(n + 1) * tau;
             pos < -static_cast<long long>(n) * tau;
             ++pos) {
          Vertex x = frame.at(pos);
          if (!t.fixes(H[n].global, x)) {
            step.strict    = true;
            step.separator = H[n].global;
            step.moved     = x;
            break;
          }
        }
      }
      if (step.strict) {
        any_strict  = true;
        last_strict = n;
      }
      rep.chain.push_back(std::move(step));
    }
    if (any_strict && last_strict == W) {
      rep.verdict       = StabilisationReport::Verdict::strict_decrease;
      rep.justification = "evidence";
    } else {
      rep.verdict = StabilisationReport::Verdict::stabilises;
      rep.step    = any_strict ? last_strict + 2 : 1;
      rep.justification =
          t.stabilisation_rule.empty() ? "evidence" : "by-rule: " + t.stabilisation_rule;
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ultimate translation length
  ////////////////////////////////////////////////////////////////////////

  long long utl_value(ActingTree const&    t,
                      BoundaryPoint const& xi,
                      Word const&          h,
                      std::size_t          W,
                      Budget*              budget) {
    AxisFrame frame(t, xi.element, budget);
    long long tau  = frame.tau();
    long long s    = xi.sign >= 0 ? 1 : -1;
    auto      lim  = static_cast<long long>(W);
    auto      shift_at = [&](long long j) -> std::optional<long long> {
      Vertex y = t.act(h, frame.at(s * j * tau));
      if (frame.distance_to_axis(y) != 0) {
        return std::nullopt;
      }
      return s * (frame.position(y) - s * j * tau);
    };
    // find a depth from which every deeper vertex in the window shifts
    // along the ray by the same amount
    for (long long j = 1; j <= lim; ++j) {
      auto first = shift_at(j);
      if (!first) {
        continue;
      }
      bool ok = true;
      for (long long k = j + 1; k <= j + lim && ok; ++k) {
        auto other = shift_at(k);
        ok         = other && *other == *first;
      }
      if (ok) {
        return *first;
      }
    }
    throw Error(ErrorCode::not_a_stabiliser,
                format_word(h, t.group().alphabet())
                    + " does not map a deep subray into the ray within the window");
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure under roots
  ////////////////////////////////////////////////////////////////////////

  RootsClosure roots_closure_check(BassSerreTree const& t) {
    RootsClosure res;
    for (int type = 0; type < t.vertex_types(); ++type) {
      Group const& V    = t.vertex_group(type);
      auto const&  name = t.vertex_group_name(type);
      auto         imgs = t.edge_images(type);
      auto         fmt  = [&](Word const& w) {
        return format_word(w, V.alphabet());
      };
      bool all_trivial = std::all_of(imgs.begin(), imgs.end(), [](Word const& w) {
        return w.empty();
      });
      if (all_trivial) {
        res.evidence.push_back(name + ": trivial edge groups");
        continue;
      }
      if (V.is_abelian()) {
        for (std::size_t i = 0; i < imgs.size(); ++i) {
          for (std::size_t j = i + 1; j < imgs.size(); ++j) {
            auto meet = V.cyclic_intersection(imgs[i], imgs[j]);
            if (!meet.trivial) {
              res.verdict = RootsClosure::Verdict::fails;
              res.vertex  = name;
              res.pair    = {imgs[i], imgs[j]};
              res.witness = V.normalize(power(imgs[i], meet.p));
              res.evidence.push_back(name + ": <" + fmt(imgs[i]) + "> and <"
                                     + fmt(imgs[j]) + "> share " + fmt(res.witness));
              return res;
            }
          }
        }
        for (auto const& u : imgs) {
          auto      v = V.abelianize(u);
          long long g = 0;
          for (auto x : v) {
            g = std::gcd(g, x);
          }
          if (g > 1) {
            res.verdict = RootsClosure::Verdict::fails;
            res.vertex  = name;
            res.pair    = {u};
            res.witness = u;
            res.evidence.push_back(name + ": " + fmt(u) + " is a proper power");
            return res;
          }
        }
        res.evidence.push_back(name + ": abelian, images primitive and independent");
        continue;
      }
      if (V.is_free()) {
        for (auto const& u : imgs) {
          if (free_words::is_proper_power(u)) {
            res.verdict = RootsClosure::Verdict::fails;
            res.vertex  = name;
            res.pair    = {u};
            res.witness = u;
            res.evidence.push_back(name + ": " + fmt(u) + " is a proper power");
            return res;
          }
        }
        for (std::size_t i = 0; i < imgs.size(); ++i) {
          for (std::size_t j = i + 1; j < imgs.size(); ++j) {
            if (free_words::conjugator(imgs[i], imgs[j])
                || free_words::conjugator(imgs[i], inverse(imgs[j]))) {
              res.verdict = RootsClosure::Verdict::fails;
              res.vertex  = name;
              res.pair    = {imgs[i], imgs[j]};
              res.evidence.push_back(name + ": " + fmt(imgs[i]) + " and " + fmt(imgs[j])
                                     + " are conjugate up to inversion");
              return res;
            }
          }
        }
        res.evidence.push_back(name + ": free, images not proper powers, "
                               "pairwise non-conjugate");
        continue;
      }
      res.verdict = RootsClosure::Verdict::unsupported;
      res.vertex  = name;
      res.evidence.push_back(name + ": no root-closure oracle for " + V.kind());
      return res;
    }
    return res;
  }

}  // namespace powalt
