#include "powalt/tree.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "powalt/error.hpp"

namespace powalt {

  bool vertex_less(Vertex const& a, Vertex const& b) {
    if (a.rep.size() != b.rep.size() || length(a.rep) != length(b.rep)) {
      return shortlex_less(a.rep, b.rep);
    }
    if (a.rep != b.rep) {
      return shortlex_less(a.rep, b.rep);
    }
    return a.type < b.type;
  }

  void Budget::charge(std::size_t n) {
    _used += n;
    if (_used > _limit) {
      throw Error(ErrorCode::budget_exceeded,
                  "node budget of " + std::to_string(_limit) + " exhausted");
    }
  }

  std::string Tree::label(Vertex const& v) const {
    std::string s = "v" + std::to_string(v.type) + "[";
    for (auto const& x : v.rep) {
      s += std::to_string(x.gen) + "^" + std::to_string(x.exp) + " ";
    }
    return s + "]";
  }

  std::optional<Vertex> Tree::parent(Vertex const& v) const {
    auto p = path_from_base(v);
    if (p.size() <= 1) {
      return std::nullopt;
    }
    return p[p.size() - 2];
  }

  Neighbours Tree::neighbours(Vertex const& v, std::size_t limit) const {
    Neighbours n = children(v, limit);
    if (auto p = parent(v)) {
      n.vertices.insert(n.vertices.begin(), *p);
    }
    return n;
  }

  Neighbours
  ActingTree::fixed_children(Vertex const& v, Word const& g, std::size_t limit) const {
    Neighbours all = children(v, limit);
    Neighbours out;
    out.exhaustive = all.exhaustive;
    for (auto const& c : all.vertices) {
      if (fixes(g, c)) {
        out.vertices.push_back(c);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Metric
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::size_t common_prefix(std::vector<Vertex> const& a,
                              std::vector<Vertex> const& b) {
      std::size_t c = 0;
      while (c < a.size() && c < b.size() && a[c] == b[c]) {
        ++c;
      }
      return c;
    }
  }  // namespace

  std::size_t
  distance(Tree const& t, Vertex const& u, Vertex const& v, Budget* budget) {
    if (u == v) {
      return 0;
    }
    auto pu = t.path_from_base(u);
    auto pv = t.path_from_base(v);
    if (budget) {
      budget->charge(pu.size() + pv.size());
    }
    std::size_t c = common_prefix(pu, pv);
    return (pu.size() - c) + (pv.size() - c);
  }

  Geodesic geodesic(Tree const& t, Vertex const& u, Vertex const& v, Budget* budget) {
    if (u == v) {
      return {{u}};
    }
    auto pu = t.path_from_base(u);
    auto pv = t.path_from_base(v);
    if (budget) {
      budget->charge(pu.size() + pv.size());
    }
    std::size_t c = common_prefix(pu, pv);
    Geodesic    g;
    // c >= 1: both paths start at the base
    for (std::size_t i = pu.size(); i >= c; --i) {
      g.vertices.push_back(pu[i - 1]);
    }
    for (std::size_t i = c; i < pv.size(); ++i) {
      g.vertices.push_back(pv[i]);
    }
    return g;
  }

  Vertex along(Tree const& t, Vertex const& u, Vertex const& v, std::size_t k,
               Budget* budget) {
    return geodesic(t, u, v, budget).vertices.at(k);
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification
  ////////////////////////////////////////////////////////////////////////

  IsometryClass classify_isometry(ActingTree const& t,
                                  Word const&       g,
                                  Vertex const&     x,
                                  Budget*           budget) {
    Group const& G  = t.group();
    Word         g2 = G.multiply(g, g);
    std::size_t  d1 = distance(t, x, t.act(g, x), budget);
    std::size_t  d2 = distance(t, x, t.act(g2, x), budget);

    Vertex      b  = t.base();
    Vertex      gb = t.act(g, b);
    std::size_t D  = distance(t, b, gb, budget);

    IsometryClass c;
    if (d2 <= d1) {
      c.kind  = IsometryClass::Kind::elliptic;
      c.fixed = along(t, b, gb, D / 2, budget);
      return c;
    }
    c.kind = IsometryClass::Kind::loxodromic;
    c.tau  = static_cast<long long>(d2 - d1);
    Vertex p = along(t, b, gb, (D - static_cast<std::size_t>(c.tau)) / 2, budget);
    c.axis   = geodesic(t, p, t.act(g, p), budget);
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // Fixed sets
  ////////////////////////////////////////////////////////////////////////

  FixedSetSample fixed_set_ball(ActingTree const& t,
                                Word const&       g,
                                std::size_t       R,
                                int               K,
                                std::size_t       branch_limit,
                                Budget*           budget) {
    auto cls = classify_isometry(t, g, budget);
    if (!cls.elliptic()) {
      throw Error(ErrorCode::not_elliptic,
                  format_word(g, t.group().alphabet()) + " is loxodromic");
    }
    FixedSetSample s;
    s.center    = cls.fixed;
    s.radius    = R;
    s.max_power = K;
    std::unordered_set<Vertex, VertexHash> seen;
    Word                                   gk;
    for (int k = 1; k <= K; ++k) {
      gk = t.group().multiply(gk, g);
      std::deque<std::pair<Vertex, std::size_t>> queue;
      std::unordered_set<Vertex, VertexHash>     visited = {s.center};
      queue.emplace_back(s.center, 0);
      seen.insert(s.center);
      while (!queue.empty()) {
        auto [v, d] = queue.front();
        queue.pop_front();
        if (budget) {
          budget->charge();
        }
        if (d == R) {
          continue;
        }
        std::vector<Vertex> next;
        if (auto p = t.parent(v); p && t.fixes(gk, *p)) {
          next.push_back(*p);
        }
        auto fc = t.fixed_children(v, gk, branch_limit);
        s.exhaustive = s.exhaustive && fc.exhaustive;
        next.insert(next.end(), fc.vertices.begin(), fc.vertices.end());
        for (auto const& w : next) {
          if (visited.insert(w).second) {
            seen.insert(w);
            queue.emplace_back(w, d + 1);
          }
        }
      }
    }
    s.vertices.assign(seen.begin(), seen.end());
    std::sort(s.vertices.begin(), s.vertices.end(), vertex_less);
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Axes
  ////////////////////////////////////////////////////////////////////////

  namespace {
    long long floor_div(long long a, long long b) {
      long long q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
      }
      return q;
    }
  }  // namespace

  AxisFrame::AxisFrame(ActingTree const& t, Word h, Budget* budget)
      : _t(&t), _h(t.group().normalize(h)), _budget(budget) {
    auto c = classify_isometry(t, _h, budget);
    if (c.elliptic()) {
      throw Error(ErrorCode::not_loxodromic,
                  format_word(_h, t.group().alphabet()) + " is elliptic");
    }
    _tau     = c.tau;
    _segment = c.axis;
  }

  Vertex AxisFrame::at(long long pos) const {
    long long q = floor_div(pos, _tau);
    long long r = pos - q * _tau;
    return _t->act(power(_h, q), _segment.vertices.at(static_cast<std::size_t>(r)));
  }

  std::size_t AxisFrame::distance_to_axis(Vertex const& x) const {
    auto d = static_cast<long long>(distance(*_t, x, _t->act(_h, x), _budget));
    return static_cast<std::size_t>((d - _tau) / 2);
  }

  Vertex AxisFrame::projection(Vertex const& x) const {
    return along(*_t, x, _t->act(_h, x), distance_to_axis(x), _budget);
  }

  long long AxisFrame::position(Vertex const& x) const {
    Vertex    p = projection(x);
    auto      s = static_cast<long long>(distance(*_t, anchor(), p, _budget));
    if (s == 0) {
      return 0;
    }
    auto d2 = static_cast<long long>(distance(*_t, _segment.vertices.back(), p, _budget));
    return d2 < s + _tau ? s : -s;
  }

  Overlap axis_overlap(ActingTree const& t,
                       Word const&       g,
                       Word const&       h,
                       std::size_t       W,
                       long long         power_,
                       Budget*           budget) {
    AxisFrame frame(t, h, budget);
    auto      cg = classify_isometry(t, g, budget);
    Word      gp = power(g, power_);
    auto      member = [&](Vertex const& x) {
      if (cg.elliptic()) {
        return t.fixes(gp, x);
      }
      return static_cast<long long>(distance(t, x, t.act(g, x), budget)) == cg.tau;
    };
    Overlap o;
    o.window_lo = -static_cast<long long>(W) * frame.tau();
    o.window_hi = static_cast<long long>(W) * frame.tau();
    for (long long pos = o.window_lo; pos <= o.window_hi; ++pos) {
      if (member(frame.at(pos))) {
        if (o.empty) {
          o.lo    = pos;
          o.empty = false;
        }
        o.hi = pos;
      }
    }
    if (!o.empty) {
      o.exceeds_low  = o.lo == o.window_lo;
      o.exceeds_high = o.hi == o.window_hi;
    }
    return o;
  }

  Ball ball(Tree const&   t,
            Vertex const& center,
            std::size_t   R,
            std::size_t   branch_limit,
            Budget*       budget) {
    Ball                                        b;
    std::unordered_set<Vertex, VertexHash>      seen = {center};
    std::deque<std::pair<Vertex, std::size_t>> queue;
    queue.emplace_back(center, 0);
    while (!queue.empty()) {
      auto [v, d] = queue.front();
      queue.pop_front();
      b.vertices.push_back(v);
      if (budget) {
        budget->charge();
      }
      if (d == R) {
        continue;
      }
      auto n       = t.neighbours(v, branch_limit);
      b.exhaustive = b.exhaustive && n.exhaustive;
      for (auto const& w : n.vertices) {
        if (seen.insert(w).second) {
          queue.emplace_back(w, d + 1);
        }
      }
    }
    return b;
  }

}  // namespace powalt
