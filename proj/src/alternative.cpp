#include "powalt/alternative.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>
#include <unordered_set>

#include "powalt/error.hpp"

namespace powalt {

  using nlohmann::json;

  std::string kind_name(PairVerdict::Kind k) {
    switch (k) {
      case PairVerdict::Kind::free_certificate: return "free_certificate";
      case PairVerdict::Kind::commute: return "commute";
      case PairVerdict::Kind::common_vertex: return "common_vertex";
      case PairVerdict::Kind::common_boundary: return "common_boundary";
      case PairVerdict::Kind::unknown: return "unknown";
    }
    return "unknown";
  }

  bool commute_at(Group const& G, Word const& g, Word const& h, long long n) {
    return G.is_identity(commutator(power(g, n), power(h, n)));
  }

  long long torsion_order(Group const& G, Word const& g, long long bound) {
    Word x = G.normalize(g);
    if (x.empty()) {
      return 1;
    }
    Word acc = x;
    try {
      for (long long k = 2; k <= bound; ++k) {
        acc = G.multiply(acc, x);
        if (acc.empty()) {
          return k;
        }
      }
    } catch (Error const& e) {
      // exponents outgrew 64 bits: no small order
      if (e.code() != ErrorCode::budget_exceeded) {
        throw;
      }
    }
    return 0;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word enumeration
  ////////////////////////////////////////////////////////////////////////

  std::string relation_text(std::vector<int> const& letters) {
    if (letters.empty()) {
      return "1";
    }
    std::string s;
    for (std::size_t i = 0; i < letters.size();) {
      std::size_t j = i;
      while (j < letters.size() && letters[j] == letters[i]) {
        ++j;
      }
      long long e = static_cast<long long>(j - i) * (letters[i] > 0 ? 1 : -1);
      if (!s.empty()) {
        s += "*";
      }
      s += std::abs(letters[i]) == 1 ? "X" : "Y";
      if (e != 1) {
        s += "^" + std::to_string(e);
      }
      i = j;
    }
    return s;
  }

  namespace {
    struct Enumerator {
      Group const&          G;
      std::array<Word, 5>   piece;  // indexed by letter + 2
      std::size_t           L;
      std::atomic<bool>     found{false};
      std::atomic<std::size_t> count{0};
      std::mutex            mu;
      std::vector<int>      relation;

      Enumerator(Group const& g, std::array<Word, 5> p, std::size_t l)
          : G(g), piece(std::move(p)), L(l) {}

      Word const& of(int letter) const {
        return piece[static_cast<std::size_t>(letter + 2)];
      }

      void report(std::vector<int> const& w) {
        std::lock_guard lock(mu);
        if (!found.exchange(true)) {
          relation = w;
        }
      }

      // w is reduced, value its normalized product
      void dfs(std::vector<int>& w, Word const& value) {
        if (found.load(std::memory_order_relaxed)) {
          return;
        }
        count.fetch_add(1, std::memory_order_relaxed);
        if (value.empty()) {
          report(w);
          return;
        }
        if (w.size() == L) {
          return;
        }
        for (int x : {1, -1, 2, -2}) {
          if (x == -w.back()) {
            continue;
          }
          w.push_back(x);
          dfs(w, G.normalize(concat(value, of(x))));
          w.pop_back();
        }
      }
    };
  }  // namespace

  FreeCheck check_free_words(Group const& G,
                             Word const&  X,
                             Word const&  Y,
                             std::size_t  L,
                             int          jobs) {
    FreeCheck out;
    if (L == 0) {
      return out;
    }
    Word       Xn = G.normalize(X), Yn = G.normalize(Y);
    Enumerator e(G, {G.normalize(inverse(Yn)), G.normalize(inverse(Xn)), Word{}, Xn, Yn}, L);

    // Y^k first: cheap and catches torsion.
    Word acc;
    for (std::size_t k = 1; k <= L; ++k) {
      acc = G.multiply(acc, Yn);
      ++out.powers;
      if (acc.empty()) {
        out.ok       = false;
        out.relation.assign(k, 2);
        return out;
      }
    }

    // Subtrees below the prefixes X a b are independent.
    std::vector<std::vector<int>> roots;
    if (L < 3) {
      roots.push_back({1});
    } else {
      for (int a : {1, 2, -2}) {
        for (int b : {1, -1, 2, -2}) {
          if (b != -a) {
            roots.push_back({1, a, b});
          }
        }
      }
      // the prefixes themselves
      std::vector<int> w = {1};
      e.count += 1;
      if (Xn.empty()) {
        e.report(w);
      }
      for (int a : {1, 2, -2}) {
        w = {1, a};
        e.count += 1;
        if (G.multiply(Xn, e.of(a)).empty()) {
          e.report(w);
        }
      }
    }

    std::atomic<std::size_t> next{0};
    auto                     worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= roots.size() || e.found) {
          return;
        }
        std::vector<int> w = roots[i];
        Word             v;
        for (int x : w) {
          v = G.normalize(concat(v, e.of(x)));
        }
        e.dfs(w, v);
      }
    };
    if (!e.found) {
      int n = std::clamp(jobs, 1, static_cast<int>(roots.size()));
      if (n == 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        std::mutex               err_mu;
        std::exception_ptr       err;
        for (int i = 0; i < n; ++i) {
          pool.emplace_back([&] {
            try {
              worker();
            } catch (...) {
              std::lock_guard lock(err_mu);
              if (!err) {
                err = std::current_exception();
              }
              e.found = true;
            }
          });
        }
        for (auto& th : pool) {
          th.join();
        }
        if (err) {
          std::rethrow_exception(err);
        }
      }
    }
    out.candidates = e.count;
    if (e.found) {
      out.ok       = false;
      out.relation = e.relation;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ping-pong sets
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct SetEvaluator {
      ActingTree const&          t;
      VertexSet const&           s;
      Budget*                    budget;
      std::optional<AxisFrame>   frame;
      std::size_t                span = 0;

      SetEvaluator(ActingTree const& t_, VertexSet const& s_, Budget* b)
          : t(t_), s(s_), budget(b) {
        if (s.kind == VertexSet::Kind::projection_window) {
          frame.emplace(t, s.axis, budget);
        } else {
          span = distance(t, s.root, s.away, budget);
        }
      }

      bool operator()(Vertex const& x) const {
        if (frame) {
          long long p  = frame->position(x);
          bool      in = s.lo <= p && p <= s.hi;
          return in == s.inside;
        }
        if (x == s.root) {
          return false;
        }
        return distance(t, x, s.away, budget) == distance(t, x, s.root, budget) + span;
      }
    };
  }  // namespace

  bool VertexSet::contains(ActingTree const& t, Vertex const& x, Budget* budget) const {
    return SetEvaluator(t, *this, budget)(x);
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificate verification
  ////////////////////////////////////////////////////////////////////////

  CertificateCheck verify_free_certificate(Group const&       G,
                                           ActingTree const*  t,
                                           PairVerdict const& cert,
                                           std::size_t        L,
                                           int                jobs,
                                           Budget*            budget) {
    CertificateCheck out;
    if (cert.kind != PairVerdict::Kind::free_certificate || cert.n < 1) {
      out.failure = "not a free certificate";
      return out;
    }
    Word X    = G.normalize(power(cert.g, cert.n));
    Word Y    = G.normalize(power(cert.h, cert.n));
    out.words = check_free_words(G, X, Y, L, jobs);
    if (!out.words.ok) {
      out.failure = "trivial word " + relation_text(out.words.relation);
      return out;
    }
    if (!t || !cert.set_g || !cert.set_h) {
      out.ok = true;
      return out;
    }
    auto pp     = check_ping_pong(*t, cert, budget);
    out.ok      = pp.ok;
    out.failure = pp.failure;
    out.samples = pp.samples;
    return out;
  }

  CertificateCheck check_ping_pong(ActingTree const& tree, PairVerdict const& cert, Budget* budget) {
    CertificateCheck out;
    Group const&     G = tree.group();
    ActingTree const* t = &tree;
    if (!cert.set_g || !cert.set_h) {
      out.failure = "no ping-pong sets";
      return out;
    }
    SetEvaluator Sg(*t, *cert.set_g, budget);
    SetEvaluator Sh(*t, *cert.set_h, budget);

    std::unordered_set<Vertex, VertexHash> seen;
    std::vector<Vertex>                    samples;
    auto add_ball = [&](Vertex const& c, std::size_t r) {
      for (auto& v : ball(*t, c, r, 4, budget).vertices) {
        if (seen.insert(v).second) {
          samples.push_back(v);
        }
      }
    };
    add_ball(t->base(), 2);
    for (auto const* s : {&*cert.set_g, &*cert.set_h}) {
      if (s->kind == VertexSet::Kind::half_tree) {
        add_ball(s->root, 2);
        add_ball(s->away, 2);
      } else {
        AxisFrame f(*t, s->axis, budget);
        long long reach = 2 * cert.n * f.tau() + 2;
        for (long long p = s->lo - reach; p <= s->hi + reach; ++p) {
          add_ball(f.at(p), 1);
        }
      }
    }
    std::sort(samples.begin(), samples.end(), vertex_less);

    std::vector<std::pair<long long, Word>> gk, hk;
    for (long long k : {1LL, -1LL, 2LL, -2LL}) {
      gk.emplace_back(k, G.normalize(power(cert.g, k * cert.n)));
      hk.emplace_back(k, G.normalize(power(cert.h, k * cert.n)));
    }
    for (auto const& x : samples) {
      bool in_g = Sg(x), in_h = Sh(x);
      ++out.samples;
      if (in_g && in_h) {
        out.failure = "ping-pong sets meet at " + t->label(x);
        return out;
      }
      if (in_h) {
        for (auto const& [k, w] : gk) {
          if (!Sg(t->act(w, x))) {
            out.failure = "g^" + std::to_string(k * cert.n) + " maps " + t->label(x)
                          + " of S_h outside S_g";
            return out;
          }
        }
      }
      if (in_g) {
        for (auto const& [k, w] : hk) {
          if (!Sh(t->act(w, x))) {
            out.failure = "h^" + std::to_string(k * cert.n) + " maps " + t->label(x)
                          + " of S_g outside S_h";
            return out;
          }
        }
      }
    }
    out.ok = true;
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pair classification
  ////////////////////////////////////////////////////////////////////////

  namespace {
    long long factorial(int k) {
      long long f = 1;
      for (int i = 2; i <= k; ++i) {
        f *= i;
      }
      return f;
    }

    std::string unknown_reason(ErrorCode c) {
      switch (c) {
        case ErrorCode::budget_exceeded: return "budget-exhausted";
        case ErrorCode::unsupported_membership:
        case ErrorCode::no_intersection_oracle:
        case ErrorCode::unsupported_word_problem: return "oracle-missing";
        default: return code_name(c);
      }
    }

    VertexSet half_tree(Vertex root, Vertex away) {
      VertexSet s;
      s.kind = VertexSet::Kind::half_tree;
      s.root = std::move(root);
      s.away = std::move(away);
      return s;
    }

    VertexSet window(Word axis, long long lo, long long hi, bool inside) {
      VertexSet s;
      s.kind   = VertexSet::Kind::projection_window;
      s.axis   = std::move(axis);
      s.lo     = lo;
      s.hi     = hi;
      s.inside = inside;
      return s;
    }

    // least n with n * tau > width for every (tau, width)
    long long least_exponent(std::vector<std::pair<long long, long long>> const& tw) {
      long long n = 1;
      for (auto [tau, width] : tw) {
        n = std::max(n, width / tau + 1);
      }
      return n;
    }

    struct Classifier {
      BassSerreTree const& t;
      Group const&         G;
      PairOptions const&   opts;
      Budget&              budget;
      PairVerdict&         v;

      void unknown(std::string reason, std::string note = {}) {
        v.kind   = PairVerdict::Kind::unknown;
        v.reason = std::move(reason);
        if (!note.empty()) {
          v.notes.push_back(std::move(note));
        }
      }

      // Least exponent meeting the window condition, or nullopt with why.
      std::optional<long long>
      exponent_for(std::vector<std::pair<long long, long long>> const& tw, std::string& why) {
        long long n = least_exponent(tw);
        if (opts.forced_exponent > 0) {
          if (opts.forced_exponent < n) {
            why = "exponent " + std::to_string(opts.forced_exponent)
                  + " is below the window bound " + std::to_string(n);
            return std::nullopt;
          }
          n = opts.forced_exponent;
        }
        if (n > opts.max_exponent) {
          why = "window condition needs n = " + std::to_string(n);
          return std::nullopt;
        }
        return n;
      }

      bool ping_pong(VertexSet sg, VertexSet sh, std::string& failure) {
        v.kind  = PairVerdict::Kind::free_certificate;
        v.set_g = std::move(sg);
        v.set_h = std::move(sh);
        Budget vb(opts.node_budget * 20);
        auto   chk = check_ping_pong(t, v, &vb);
        if (!chk.ok) {
          failure = chk.failure;
          v.kind  = PairVerdict::Kind::unknown;
          v.set_g.reset();
          v.set_h.reset();
        }
        return chk.ok;
      }

      void words() {
        auto fc = check_free_words(G, power(v.g, v.n), power(v.h, v.n), opts.max_word_len,
                                   opts.jobs);
        v.words_checked = fc.candidates + fc.powers;
        if (!fc.ok) {
          v.set_g.reset();
          v.set_h.reset();
          unknown("relation-found", "trivial word " + relation_text(fc.relation));
          return;
        }
        v.verified_length = opts.max_word_len;
      }

      void free_candidate(VertexSet sg, VertexSet sh) {
        std::string failure;
        if (!ping_pong(std::move(sg), std::move(sh), failure)) {
          unknown("ping-pong-failed", failure);
          return;
        }
        words();
      }

      void elliptic_elliptic(IsometryClass const& cg, IsometryClass const& ch) {
        v.branch    = "elliptic-elliptic";
        long long P = factorial(opts.max_power);
        auto      geo = geodesic(t, cg.fixed, ch.fixed, &budget).vertices;

        std::vector<long long> powers;
        for (long long k = 1; k <= opts.max_power; ++k) {
          powers.push_back(k);
        }
        if (P > opts.max_power) {
          powers.push_back(P);
        }
        for (long long k : powers) {
          Word gk = G.normalize(power(v.g, k));
          Word hk = G.normalize(power(v.h, k));
          for (auto const& x : geo) {
            if (t.fixes(gk, x) && t.fixes(hk, x)) {
              v.kind   = PairVerdict::Kind::common_vertex;
              v.n      = k;
              v.vertex = x;
              return;
            }
          }
        }
        Word        gP = G.normalize(power(v.g, P));
        Word        hP = G.normalize(power(v.h, P));
        std::size_t p  = 0;
        while (p + 1 < geo.size() && t.fixes(gP, geo[p + 1])) {
          ++p;
        }
        std::size_t q = geo.size() - 1;
        while (q > 0 && t.fixes(hP, geo[q - 1])) {
          --q;
        }
        v.notes.push_back("bridge of length " + std::to_string(q - p)
                          + " between the fixed sets of g^" + std::to_string(P)
                          + " and h^" + std::to_string(P));
        v.n = opts.forced_exponent > 0 ? opts.forced_exponent : 1;
        free_candidate(half_tree(geo[p], geo[q]), half_tree(geo[q], geo[p]));
      }

      // g elliptic, h loxodromic; sets are returned in (g, h) order
      void mixed(IsometryClass const& cg, bool swapped) {
        Word const& g = swapped ? v.h : v.g;
        Word const& h = swapped ? v.g : v.h;
        long long   P  = factorial(opts.max_power);
        long long   P1 = factorial(std::max(1, opts.max_power - 1));
        AxisFrame   fh(t, h, &budget);
        Overlap     o = axis_overlap(t, g, h, opts.window, P, &budget);

        auto finish = [&](VertexSet in, VertexSet out, std::string& failure) {
          return swapped ? ping_pong(std::move(out), std::move(in), failure)
                         : ping_pong(std::move(in), std::move(out), failure);
        };

        if (o.empty || o.bounded()) {
          v.branch     = "mixed-bounded";
          long long lo = 0, hi = 0;
          if (o.empty) {
            lo = hi = fh.position(cg.fixed);
          } else {
            lo = o.lo;
            hi = o.hi;
            Overlap o1 = axis_overlap(t, g, h, opts.window, P1, &budget);
            if (o1.empty || o1.lo != o.lo || o1.hi != o.hi) {
              v.notes.push_back("overlap with the axis differs between powers "
                                + std::to_string(P1) + " and " + std::to_string(P));
            }
          }
          // g may carry part of the axis onto itself; widen the window
          // until the sampled ping-pong conditions hold.
          std::string why, failure;
          for (long long r = 0; r <= 2 * fh.tau() + 2; ++r) {
            auto n = exponent_for({{fh.tau(), hi - lo + 2 * r}}, why);
            if (!n) {
              break;
            }
            v.n = *n;
            if (finish(window(h, lo - r, hi + r, true), window(h, lo - r, hi + r, false),
                       failure)) {
              if (r > 0) {
                v.notes.push_back("window widened by " + std::to_string(r));
              }
              words();
              return;
            }
          }
          if (!failure.empty()) {
            unknown("ping-pong-failed", failure);
          } else {
            unknown("window-exhausted", why);
          }
          return;
        }

        v.branch = "mixed-unbounded";
        BoundaryPoint xi{h, o.exceeds_high ? 1 : -1};
        if (o.exceeds_low && o.exceeds_high) {
          common_boundary(xi, P);
          return;
        }
        Overlap o1     = axis_overlap(t, g, h, opts.window, P1, &budget);
        bool    growth = o1.empty || (o.exceeds_high ? o1.lo != o.lo : o1.hi != o.hi);
        if (!growth) {
          common_boundary(xi, P);
          return;
        }
        v.notes.push_back("fixed set of g^k! on the axis grows from k = "
                          + std::to_string(opts.max_power - 1) + " to k = "
                          + std::to_string(opts.max_power));
        for (Word const& ray : {h, G.normalize(inverse(h))}) {
          auto r = stabilisation_probe(t, ray, opts.window, &budget);
          if (!v.probe || r.verdict == StabilisationReport::Verdict::strict_decrease) {
            v.probe = r;
          }
          if (r.verdict == StabilisationReport::Verdict::strict_decrease) {
            break;
          }
        }
        unknown("stabilisation-unverified");
      }

      void common_boundary(BoundaryPoint xi, long long n) {
        v.kind  = PairVerdict::Kind::common_boundary;
        v.n     = n;
        v.xi    = std::move(xi);
        v.utl_g = utl_value(t, v.xi, G.normalize(power(v.g, n)), opts.window, &budget);
        v.utl_h = utl_value(t, v.xi, G.normalize(power(v.h, n)), opts.window, &budget);
      }

      void lox_lox() {
        AxisFrame fg(t, v.g, &budget), fh(t, v.h, &budget);
        Overlap   oh = axis_overlap(t, v.g, v.h, opts.window, 1, &budget);
        Overlap   og = axis_overlap(t, v.h, v.g, opts.window, 1, &budget);
        if (oh.empty || og.empty || (oh.bounded() && og.bounded())) {
          v.branch = "lox-lox-bounded";
          long long glo, ghi, hlo, hhi;
          if (oh.empty || og.empty) {
            hlo = hhi = fh.position(fg.anchor());
            glo = ghi = fg.position(fh.anchor());
          } else {
            hlo = oh.lo, hhi = oh.hi;
            glo = og.lo, ghi = og.hi;
          }
          std::string why;
          auto        n = exponent_for({{fg.tau(), ghi - glo}, {fh.tau(), hhi - hlo}}, why);
          if (!n) {
            unknown("window-exhausted", why);
            return;
          }
          v.n = *n;
          free_candidate(window(v.g, glo, ghi, false), window(v.h, hlo, hhi, false));
          return;
        }
        v.branch = "lox-lox-unbounded";
        try {
          common_boundary({v.h, oh.exceeds_high ? 1 : -1}, 1);
        } catch (Error const& e) {
          if (e.code() != ErrorCode::not_a_stabiliser) {
            throw;
          }
          unknown("window-exhausted", e.what());
        }
      }
    };
  }  // namespace

  PairVerdict classify_pair(BassSerreTree const& t,
                            Word const&          g0,
                            Word const&          h0,
                            PairOptions const&   opts) {
    Group const& G = t.group();
    PairVerdict  v;
    v.g = G.normalize(g0);
    v.h = G.normalize(h0);

    try {
      for (long long n = 1; n <= opts.max_exponent; ++n) {
        if (commute_at(G, v.g, v.h, n)) {
          v.kind   = PairVerdict::Kind::commute;
          v.branch = "commute";
          v.n      = n;
          return v;
        }
      }
    } catch (Error const& e) {
      if (e.code() != ErrorCode::budget_exceeded) {
        throw;
      }
      v.notes.push_back(std::string("commutation scan stopped: ") + e.what());
    }

    long long og = torsion_order(G, v.g), oh = torsion_order(G, v.h);
    if (og || oh) {
      v.kind   = PairVerdict::Kind::commute;
      v.branch = "torsion";
      v.n      = og && oh ? std::min(og, oh) : std::max(og, oh);
      return v;
    }

    Budget     budget(opts.node_budget);
    Classifier c{t, G, opts, budget, v};
    try {
      auto cg = classify_isometry(t, v.g, &budget);
      auto ch = classify_isometry(t, v.h, &budget);
      if (cg.elliptic() && ch.elliptic()) {
        c.elliptic_elliptic(cg, ch);
      } else if (cg.elliptic()) {
        c.mixed(cg, false);
      } else if (ch.elliptic()) {
        c.mixed(ch, true);
      } else {
        c.lox_lox();
      }
    } catch (Error const& e) {
      v.set_g.reset();
      v.set_h.reset();
      c.unknown(unknown_reason(e.code()), e.what());
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  json vertex_json(Vertex const& v, Group const& G) {
    return {{"type", v.type}, {"rep", format_word(v.rep, G.alphabet())}};
  }

  namespace {
    Vertex vertex_from_json(json const& j, ActingTree const& t) {
      Vertex x;
      x.type = j.at("type").get<int>();
      return t.act(parse_word(j.at("rep").get<std::string>(), t.group().alphabet()),
                   Vertex{x.type, {}});
    }

    VertexSet set_from_json(json const& j, ActingTree const& t) {
      auto const& A    = t.group().alphabet();
      std::string kind = j.at("type").get<std::string>();
      if (kind == "half_tree") {
        return half_tree(vertex_from_json(j.at("root"), t), vertex_from_json(j.at("away"), t));
      }
      if (kind == "projection_window") {
        return window(t.group().normalize(parse_word(j.at("axis").get<std::string>(), A)),
                      j.at("lo").get<long long>(),
                      j.at("hi").get<long long>(),
                      j.at("inside").get<bool>());
      }
      throw Error(ErrorCode::input_error, "unknown vertex set type '" + kind + "'");
    }
  }  // namespace

  json to_json(VertexSet const& s, Group const& G) {
    if (s.kind == VertexSet::Kind::half_tree) {
      return {{"type", "half_tree"},
              {"root", vertex_json(s.root, G)},
              {"away", vertex_json(s.away, G)}};
    }
    return {{"type", "projection_window"},
            {"axis", format_word(s.axis, G.alphabet())},
            {"lo", s.lo},
            {"hi", s.hi},
            {"inside", s.inside}};
  }

  json to_json(StabilisationReport const& r, Group const& G) {
    auto const& A = G.alphabet();
    std::string verdict =
        r.verdict == StabilisationReport::Verdict::stabilises        ? "stabilises"
        : r.verdict == StabilisationReport::Verdict::strict_decrease ? "strict_decrease"
                                                                     : "inconclusive";
    json chain = json::array();
    for (auto const& s : r.chain) {
      json step = {{"n", s.n},
                   {"stabiliser",
                    s.stabiliser.whole_vertex_group
                        ? "whole vertex group at " + format_word(s.stabiliser.conjugator, A)
                        : "<" + format_word(s.stabiliser.global, A) + ">"},
                   {"strict", s.strict}};
      if (s.strict) {
        step["separator"] = format_word(s.separator, A);
        step["moved"]     = vertex_json(s.moved, G);
      }
      chain.push_back(step);
    }
    json j = {{"verdict", verdict},
              {"window", r.window},
              {"ray", format_word(r.ray, A)},
              {"chain", chain},
              {"justification", r.justification}};
    if (r.verdict == StabilisationReport::Verdict::stabilises) {
      j["step"] = r.step;
    }
    if (!r.reason.empty()) {
      j["reason"] = r.reason;
    }
    return j;
  }

  json to_json(PairVerdict const& v, Group const& G) {
    auto const& A = G.alphabet();
    json        j = {{"verdict", kind_name(v.kind)},
                     {"g", format_word(v.g, A)},
                     {"h", format_word(v.h, A)}};
    if (!v.branch.empty()) {
      j["branch"] = v.branch;
    }
    switch (v.kind) {
      case PairVerdict::Kind::free_certificate:
        j["exponent"]        = v.n;
        j["verified_length"] = v.verified_length;
        j["words_checked"]   = v.words_checked;
        j["claim"] = "<g^n, h^n> has no relation of length <= " + std::to_string(v.verified_length);
        if (v.set_g && v.set_h) {
          j["predicates"] = {{"g", to_json(*v.set_g, G)}, {"h", to_json(*v.set_h, G)}};
        }
        break;
      case PairVerdict::Kind::commute:
        j["exponent"] = v.n;
        j["witness"]  = "normalize([g^n, h^n]) = 1";
        break;
      case PairVerdict::Kind::common_vertex:
        j["exponent"] = v.n;
        j["vertex"]   = vertex_json(v.vertex, G);
        break;
      case PairVerdict::Kind::common_boundary:
        j["exponent"] = v.n;
        j["boundary"] = {{"element", format_word(v.xi.element, A)}, {"sign", v.xi.sign}};
        j["utl"]      = {{"g", v.utl_g}, {"h", v.utl_h}};
        break;
      case PairVerdict::Kind::unknown: j["reason"] = v.reason; break;
    }
    if (v.probe) {
      j["probe"] = to_json(*v.probe, G);
    }
    if (!v.notes.empty()) {
      j["notes"] = v.notes;
    }
    return j;
  }

  json certificate_json(PairVerdict const& v, json const& group_doc, Group const& G) {
    if (v.kind != PairVerdict::Kind::free_certificate) {
      throw Error(ErrorCode::input_error, "only free certificates are exported");
    }
    auto const& A = G.alphabet();
    json        j = {{"schema_version", 1},
                     {"kind", "free_certificate"},
                     {"group", group_doc},
                     {"g", format_word(v.g, A)},
                     {"h", format_word(v.h, A)},
                     {"exponent", v.n},
                     {"verified_length", v.verified_length},
                     {"tool_version", tool_version}};
    if (v.set_g && v.set_h) {
      j["predicates"] = {{"g", to_json(*v.set_g, G)}, {"h", to_json(*v.set_h, G)}};
    }
    return j;
  }

  CertificateCheck verify_certificate(json const&                cert,
                                      std::optional<std::size_t> L,
                                      int                        jobs) {
    auto bad = [](std::string const& m) -> CertificateCheck {
      throw Error(ErrorCode::input_error, "certificate: " + m);
    };
    if (!cert.is_object() || cert.value("schema_version", 0) != 1) {
      return bad("unsupported schema_version");
    }
    if (cert.value("kind", "") != "free_certificate") {
      return bad("kind must be free_certificate");
    }
    try {
      auto         gog = gog_from_json(cert.at("group"));
      Group const& G   = *gog.group;
      PairVerdict  v;
      v.kind = PairVerdict::Kind::free_certificate;
      v.g    = G.normalize(parse_word(cert.at("g").get<std::string>(), G.alphabet()));
      v.h    = G.normalize(parse_word(cert.at("h").get<std::string>(), G.alphabet()));
      v.n    = cert.at("exponent").get<long long>();
      std::size_t len = L.value_or(cert.at("verified_length").get<std::size_t>());
      if (gog.tree && cert.contains("predicates")) {
        v.set_g = set_from_json(cert.at("predicates").at("g"), *gog.tree);
        v.set_h = set_from_json(cert.at("predicates").at("h"), *gog.tree);
      }
      Budget budget(default_node_budget * 10);
      return verify_free_certificate(G, gog.tree.get(), v, len, jobs, &budget);
    } catch (json::exception const& e) {
      return bad(e.what());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Laws
  ////////////////////////////////////////////////////////////////////////

  LawSpec parse_law(std::string const& text) {
    std::set<std::string> names;
    for (std::size_t i = 0; i < text.size();) {
      auto c = static_cast<unsigned char>(text[i]);
      if (std::isalpha(c) || c == '_') {
        std::size_t j = i;
        while (j < text.size()
               && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
          ++j;
        }
        names.insert(text.substr(i, j - i));
        i = j;
      } else {
        ++i;
      }
    }
    std::vector<std::string> vars(names.begin(), names.end());
    std::stable_sort(vars.begin(), vars.end(), [](auto const& a, auto const& b) {
      return a.size() < b.size();
    });
    LawSpec law{Alphabet(vars), {}};
    law.word = reduce(parse_word(text, law.variables));
    if (law.word.empty()) {
      throw Error(ErrorCode::input_error, "law '" + text + "' is the trivial word");
    }
    return law;
  }

  namespace {
    Word substitute(Group const& G, Word const& w, std::vector<Word> const& values) {
      Word out;
      for (auto const& s : w) {
        out = G.normalize(concat(out, power(values.at(static_cast<std::size_t>(s.gen)), s.exp)));
      }
      return out;
    }
  }  // namespace

  LawResult law_check(Group const&             G,
                      std::vector<Word> const& generators,
                      LawSpec const&           law,
                      std::size_t              samples,
                      std::uint64_t            seed,
                      std::size_t              word_len) {
    LawResult   out;
    out.seed        = seed;
    std::size_t r   = law.variables.size();
    auto        try_tuple = [&](std::vector<Word> const& tuple) {
      ++out.tuples;
      if (!substitute(G, law.word, tuple).empty()) {
        out.holds          = false;
        out.counterexample = tuple;
        return false;
      }
      return true;
    };
    if (generators.empty()) {
      return out;
    }

    // all tuples of generators, capped
    constexpr std::size_t cap = 256;
    std::vector<std::size_t> idx(r, 0);
    for (std::size_t count = 0; count < cap; ++count) {
      std::vector<Word> tuple;
      for (auto i : idx) {
        tuple.push_back(generators[i]);
      }
      if (!try_tuple(tuple)) {
        return out;
      }
      std::size_t k = 0;
      while (k < r && ++idx[k] == generators.size()) {
        idx[k++] = 0;
      }
      if (k == r) {
        break;
      }
    }

    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, generators.size() - 1);
    std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(1, word_len));
    std::bernoulli_distribution                sign;
    for (std::size_t s = 0; s < samples; ++s) {
      std::vector<Word> tuple;
      for (std::size_t i = 0; i < r; ++i) {
        Word        w;
        std::size_t n = len(rng);
        for (std::size_t j = 0; j < n; ++j) {
          Word const& x = generators[pick(rng)];
          w             = concat(w, sign(rng) ? x : inverse(x));
        }
        tuple.push_back(G.normalize(w));
      }
      if (!try_tuple(tuple)) {
        return out;
      }
    }
    return out;
  }

  PAEstimate pa_estimate(Group const& G,
                         Word const&  g,
                         Word const&  h,
                         long long    n_max,
                         std::size_t  L,
                         int          jobs) {
    PAEstimate e;
    e.g = G.normalize(g);
    e.h = G.normalize(h);
    for (long long n = 1; n <= n_max; ++n) {
      if (commute_at(G, e.g, e.h, n)) {
        e.n       = n;
        e.outcome = "commute";
        return e;
      }
      auto fc = check_free_words(G, power(e.g, n), power(e.h, n), L, jobs);
      if (fc.ok) {
        e.n               = n;
        e.outcome         = "free";
        e.verified_length = L;
        return e;
      }
      e.evidence.push_back("n = " + std::to_string(n) + ": no commutation, relation "
                           + relation_text(fc.relation));
    }
    return e;
  }

  json to_json(LawResult const& r, Group const& G) {
    json j = {{"verdict", r.holds ? "holds_on_sample" : "counterexample"},
              {"tuples", r.tuples},
              {"seed", r.seed}};
    if (!r.holds) {
      json c = json::array();
      for (auto const& w : r.counterexample) {
        c.push_back(format_word(w, G.alphabet()));
      }
      j["counterexample"] = c;
    }
    return j;
  }

  json to_json(PAEstimate const& r, Group const& G) {
    auto const& A = G.alphabet();
    json        j = {{"g", format_word(r.g, A)},
                     {"h", format_word(r.h, A)},
                     {"evidence", r.evidence}};
    if (r.n == 0) {
      j["verdict"] = "exhausted";
    } else {
      j["verdict"]  = r.outcome;
      j["exponent"] = r.n;
      if (r.outcome == "free") {
        j["verified_length"] = r.verified_length;
      }
    }
    return j;
  }

}  // namespace powalt
