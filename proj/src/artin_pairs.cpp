#include "powalt/artin_pairs.hpp"

#include <algorithm>

#include "powalt/error.hpp"
#include "powalt/groups.hpp"

namespace powalt {

  using nlohmann::json;

  namespace {
    std::string piece_label(PresentationGraph const& g) {
      std::string s = "A{";
      for (std::size_t i = 0; i < g.size(); ++i) {
        s += (i ? "," : "") + g.name(static_cast<int>(i));
      }
      return s + "}";
    }

    std::string set_label(std::vector<std::string> const& names) {
      std::string s = "{";
      for (std::size_t i = 0; i < names.size(); ++i) {
        s += (i ? "," : "") + names[i];
      }
      return s + "}";
    }

    Word translate(Word const& w, Group const& from, Group const& to) {
      return to.normalize(parse_word(format_word(w, from.alphabet()), to.alphabet()));
    }

    struct Descent {
      PairOptions               opts;
      long long                 N;
      std::vector<std::string>& trace;
      GroupPtr                  group;  // where the final verdict lives

      PairVerdict dihedral(std::string const& label, Group const& G, Word g, Word h) {
        PairVerdict v;
        v.g      = g;
        v.h      = h;
        v.branch = "dihedral";
        trace.push_back(label + ": dihedral piece, deciding at n = " + std::to_string(N));
        if (commute_at(G, g, h, N)) {
          v.kind = PairVerdict::Kind::commute;
          v.n    = N;
          return v;
        }
        auto fc = check_free_words(G, power(g, N), power(h, N), opts.max_word_len, opts.jobs);
        v.n = N;
        if (fc.ok) {
          v.kind            = PairVerdict::Kind::free_certificate;
          v.verified_length = opts.max_word_len;
          v.words_checked   = fc.candidates + fc.powers;
        } else {
          v.kind   = PairVerdict::Kind::unknown;
          v.reason = "relation-found";
          v.notes.push_back("trivial word " + relation_text(fc.relation));
        }
        return v;
      }

      PairVerdict run(PresentationGraph const& graph, GroupPtr G, Word g, Word h) {
        std::string label = piece_label(graph);
        group             = G;
        g                 = G->normalize(g);
        h                 = G->normalize(h);
        if (commute_at(*G, g, h, 1)) {
          trace.push_back(label + ": g and h commute");
          PairVerdict v;
          v.kind   = PairVerdict::Kind::commute;
          v.branch = "commute";
          v.g      = g;
          v.h      = h;
          v.n      = 1;
          return v;
        }
        if (graph.size() == 2 && graph.complete()) {
          return dihedral(label, *G, g, h);
        }
        auto split = artin_splitting(graph);
        if (!split) {
          PairVerdict v;
          v.g      = g;
          v.h      = h;
          v.reason = "oracle-missing";
          v.notes.push_back(label + " has no visual splitting");
          return v;
        }
        GroupPtr SG = split->group;
        g           = translate(g, *G, *SG);
        h           = translate(h, *G, *SG);
        group       = SG;
        auto const& t = *split->tree;
        trace.push_back(label + ": split as " + set_label(split->split.gamma1) + " *_"
                        + set_label(split->split.gamma0) + " "
                        + set_label(split->split.gamma2));

        Budget budget(opts.node_budget);
        auto   cg = classify_isometry(t, g, &budget);
        auto   ch = classify_isometry(t, h, &budget);

        if (cg.elliptic() && ch.elliptic()) {
          for (auto const& x : geodesic(t, cg.fixed, ch.fixed, &budget).vertices) {
            if (!t.fixes(g, x) || !t.fixes(h, x)) {
              continue;
            }
            int type = x.type;
            trace.push_back(label + ": g and h fix " + t.label(x) + ", conjugating into "
                            + piece_label(split->piece[type]));
            Word        gy = t.to_vertex_coordinates(x, g);
            Word        hy = t.to_vertex_coordinates(x, h);
            PairVerdict v  = run(split->piece[type], split->group->factor(type), gy, hy);
            if (v.kind == PairVerdict::Kind::commute
                || v.kind == PairVerdict::Kind::free_certificate) {
              // conjugation carries the outcome back unchanged
              v.notes.push_back("decided in " + piece_label(split->piece[type]) + " on "
                                + format_word(v.g, group->alphabet()) + ", "
                                + format_word(v.h, group->alphabet()));
              v.g = g;
              v.h = h;
              v.set_g.reset();
              v.set_h.reset();
              group = SG;
            }
            return v;
          }
          trace.push_back(label + ": fixed sets are disjoint");
          return classify_pair(t, g, h, opts);
        }

        long long tau = std::max(cg.tau, ch.tau);
        Overlap   o   = cg.elliptic()   ? axis_overlap(t, g, h, opts.window, 1, &budget)
                        : ch.elliptic() ? axis_overlap(t, h, g, opts.window, 1, &budget)
                                        : axis_overlap(t, g, h, opts.window, 1, &budget);
        if (!o.empty && o.length() >= 2 * tau + 2) {
          trace.push_back(label + ": overlap of length " + std::to_string(o.length())
                          + " reaches 2*tau + 2 = " + std::to_string(2 * tau + 2)
                          + ", checking the commutator at n = " + std::to_string(N));
          if (commute_at(*SG, g, h, N)) {
            PairVerdict v;
            v.kind   = PairVerdict::Kind::commute;
            v.branch = "overlap-threshold";
            v.g      = g;
            v.h      = h;
            v.n      = N;
            return v;
          }
          trace.push_back(label + ": g^N and h^N do not commute");
        }
        PairOptions forced     = opts;
        forced.forced_exponent = N;
        trace.push_back(label + ": " + (cg.elliptic() || ch.elliptic() ? "mixed" : "loxodromic")
                        + " pair, running the tree pipeline at n = " + std::to_string(N));
        return classify_pair(t, g, h, forced);
      }
    };

    void require_class(PresentationGraph const& graph, ErrorCode code) {
      auto c = classify_graph(graph);
      if (!c.two_two_free || !c.triangle_free) {
        throw Error(code, "graph is not (2,2)-free and triangle-free");
      }
    }
  }  // namespace

  ArtinPairResult pair_check_artin(PresentationGraph const& graph,
                                   std::string const&       g,
                                   std::string const&       h,
                                   PairOptions              opts) {
    require_class(graph, ErrorCode::unsupported_word_problem);
    ArtinPairResult out;
    out.exponent = uniform_exponent(graph).adjusted;
    auto split   = artin_splitting(graph);
    GroupPtr G   = split ? GroupPtr(split->group) : artin_group(graph);
    Descent  d{opts, out.exponent, out.trace, G};
    out.verdict = d.run(graph, G, parse_word(g, G->alphabet()), parse_word(h, G->alphabet()));
    out.group   = d.group;
    return out;
  }

  GrowthWitness growth_witness(PresentationGraph const&        graph,
                               std::vector<std::string> const& gens,
                               long long                       m,
                               std::size_t                     L,
                               int                             jobs) {
    require_class(graph, ErrorCode::input_error);
    if (classify_graph(graph).spherical) {
      throw Error(ErrorCode::input_error, "graph is of spherical type");
    }
    if (m < 1) {
      throw Error(ErrorCode::input_error, "m must be positive");
    }
    GrowthWitness out;
    out.m     = m;
    out.group = artin_group(graph);
    Group const&      G = *out.group;
    std::vector<Word> words;
    for (auto const& s : gens) {
      words.push_back(G.normalize(parse_word(s, G.alphabet())));
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        std::string pair = "(" + gens[i] + ", " + gens[j] + ")";
        if (commute_at(G, words[i], words[j], m)) {
          out.tried.push_back(pair + ": powers commute");
          continue;
        }
        auto fc = check_free_words(G, power(words[i], m), power(words[j], m), L, jobs);
        if (!fc.ok) {
          out.tried.push_back(pair + ": trivial word " + relation_text(fc.relation));
          continue;
        }
        out.tried.push_back(pair + ": no relation of length <= " + std::to_string(L));
        out.found = true;
        out.s     = gens[i];
        out.t     = gens[j];
        auto& c   = out.certificate;
        c.kind            = PairVerdict::Kind::free_certificate;
        c.branch          = "growth";
        c.g               = words[i];
        c.h               = words[j];
        c.n               = m;
        c.verified_length = L;
        c.words_checked   = fc.candidates + fc.powers;
        return out;
      }
    }
    return out;
  }

  json to_json(ArtinPairResult const& r) {
    return {{"exponent", r.exponent},
            {"trace", r.trace},
            {"result", to_json(r.verdict, *r.group)}};
  }

  json to_json(GrowthWitness const& w) {
    json j = {{"m", w.m}, {"tried", w.tried}, {"verdict", w.found ? "found" : "exhausted"}};
    if (w.found) {
      j["pair"]        = {w.s, w.t};
      j["certificate"] = to_json(w.certificate, *w.group);
    }
    return j;
  }

}  // namespace powalt
