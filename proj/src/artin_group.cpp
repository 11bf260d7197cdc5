#include "powalt/artin_group.hpp"

#include <numeric>

#include "powalt/error.hpp"
#include "powalt/groups.hpp"

namespace powalt {

  using nlohmann::json;

  namespace {

    // Edge stabilisers in a visual splitting are conjugates of a single
    // generator.  Two of them generate the same cyclic parabolic or meet
    // trivially, since cyclic parabolics are closed under roots in the
    // supported class.
    class ParabolicAmalgam : public Amalgam {
     public:
      using Amalgam::Amalgam;

      std::string kind() const override {
        return "artin";
      }

      CyclicMeet cyclic_intersection(Word const& u, Word const& v) const override {
        Word nu = normalize(u), nv = normalize(v);
        if (nu.empty() || nv.empty()) {
          return {};
        }
        if (nu == nv) {
          return {false, 1, 1};
        }
        if (nu == normalize(inverse(nv))) {
          return {false, 1, -1};
        }
        return {};
      }
    };

    std::string piece_name(std::vector<std::string> const& vs) {
      std::string s = "A{";
      for (std::size_t i = 0; i < vs.size(); ++i) {
        s += (i ? "," : "") + vs[i];
      }
      return s + "}";
    }

    bool right_angled(PresentationGraph const& g) {
      for (auto [u, v, m] : g.edges()) {
        if (m != 2) {
          return false;
        }
      }
      return true;
    }

    std::shared_ptr<Amalgam const> build_amalgam(PresentationGraph const& g,
                                                 VisualSplitting const&   s,
                                                 PresentationGraph (&piece)[2]) {
      if (s.gamma0.size() > 1) {
        throw Error(ErrorCode::unsupported_word_problem,
                    "splitting over " + piece_name(s.gamma0)
                        + " has more than one separator vertex");
      }
      piece[0]   = g.induced(g.indices(s.gamma1));
      piece[1]   = g.induced(g.indices(s.gamma2));
      GroupPtr l = artin_group(piece[0]);
      GroupPtr r = artin_group(piece[1]);
      Word     li, ri;
      if (!s.gamma0.empty()) {
        li = generator(l->alphabet().index(s.gamma0[0]));
        ri = generator(r->alphabet().index(s.gamma0[0]));
      }
      return std::make_shared<ParabolicAmalgam>(l, r, li, ri);
    }

  }  // namespace

  GroupPtr artin_group(PresentationGraph const& g) {
    std::size_t n = g.size();
    if (n == 0) {
      return std::make_shared<TrivialGroup>();
    }
    if (n == 1) {
      return std::make_shared<FreeGroup>(g.vertices());
    }
    if (g.complete()) {
      if (n == 2) {
        return std::make_shared<DihedralArtin>(g.vertices(), g.label(0, 1));
      }
      if (right_angled(g)) {
        return std::make_shared<FreeAbelian>(g.vertices());
      }
      throw Error(ErrorCode::unsupported_word_problem,
                  "complete graph " + piece_name(g.vertices())
                      + " on more than two vertices with a label above 2");
    }
    auto              s = preferred_splitting(g);
    PresentationGraph piece[2];
    return build_amalgam(g, *s, piece);
  }

  std::optional<ArtinSplitting> artin_splitting(PresentationGraph const& g) {
    auto s = preferred_splitting(g);
    if (!s) {
      return std::nullopt;
    }
    ArtinSplitting out;
    out.split = *s;
    out.group = build_amalgam(g, *s, out.piece);
    out.tree  = amalgam_tree(out.group, {piece_name(s->gamma1), piece_name(s->gamma2)});
    auto c    = classify_graph(g);
    if (c.intersection_property.status == "by-rule") {
      out.tree->stabilisation_rule =
          "parabolic chains have bounded length in a visual splitting when the "
          "intersection property holds ("
          + c.intersection_property.rule + ")";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Dihedral structure
  ////////////////////////////////////////////////////////////////////////

  DihedralStructure dihedral_structure(int m) {
    if (m < 3) {
      throw Error(ErrorCode::input_error, "dihedral structure needs m >= 3");
    }
    DihedralStructure d;
    d.m       = m;
    d.m_prime = dihedral_index(m);
    DihedralArtin      A({"a", "b"}, m);
    FinitePresentation P = A.presentation();
    d.transcript.push_back("presentation: <a, b | " + format_word(P.relators[0], P.generators)
                           + ">");
    // a, b -> 1 unless 4 | m: then ab would map to a non-unit and the
    // kernel picks up torsion, so use a -> 0, b -> 1 (ab still maps to 1)
    long long ia = m % 4 == 0 ? 0 : 1;
    d.images     = {ia, 1};
    d.transcript.push_back("quotient: a -> " + std::to_string(ia) + ", b -> 1 in Z/"
                           + std::to_string(d.m_prime));

    auto rs  = reidemeister_schreier(P, {d.m_prime, d.images});
    d.kernel = rs.presentation;
    d.transcript.push_back("kernel: " + std::to_string(d.kernel.generators.size())
                           + " Schreier generators, "
                           + std::to_string(d.kernel.relators.size()) + " relators");

    auto tz             = tietze_simplify(d.kernel);
    d.simplified        = tz.presentation;
    d.tietze_steps      = tz.steps;
    d.tietze_budget_hit = tz.budget_hit;
    d.transcript.push_back("simplified to effort " + std::to_string(tz.steps) + ": "
                           + std::to_string(d.simplified.generators.size())
                           + " generators, " + std::to_string(d.simplified.relators.size())
                           + " relators");

    auto ab        = abelianization(d.kernel);
    d.abelian_rank = ab.free_rank();
    d.torsion      = ab.torsion();
    d.k            = static_cast<long long>(d.abelian_rank) - 1;
    std::string tor;
    for (auto t : d.torsion) {
      tor += " x Z/" + std::to_string(t);
    }
    d.transcript.push_back("kernel abelianization: Z^" + std::to_string(d.abelian_rank) + tor);

    d.central = m % 2 == 0 ? A.delta() : power(A.delta(), 2);
    Word z    = rs.rewrite(d.central);
    d.central_image = ab.image(exponent_sums(z, d.kernel.generators.size()));
    long long g     = 0;
    for (std::size_t i = 0; i < ab.free_rank(); ++i) {
      g = std::gcd(g, d.central_image[i]);
    }
    d.central_primitive = g == 1;
    d.transcript.push_back(std::string("central element ") + (m % 2 == 0 ? "Delta" : "Delta^2")
                           + (d.central_primitive ? " is" : " is not")
                           + " primitive in the kernel abelianization");
    return d;
  }

  json to_json(DihedralStructure const& d) {
    auto pres = [](FinitePresentation const& p) {
      json rel = json::array();
      for (auto const& r : p.relators) {
        rel.push_back(format_word(r, p.generators));
      }
      return json{{"generators", p.generators.names()}, {"relators", rel}};
    };
    return {{"m", d.m},
            {"m_prime", d.m_prime},
            {"images", d.images},
            {"k", d.k},
            {"abelian_rank", d.abelian_rank},
            {"torsion", d.torsion},
            {"kernel", pres(d.kernel)},
            {"simplified", pres(d.simplified)},
            {"tietze_steps", d.tietze_steps},
            {"tietze_budget_hit", d.tietze_budget_hit},
            {"central_image", d.central_image},
            {"central_primitive", d.central_primitive},
            {"transcript", d.transcript}};
  }

}  // namespace powalt
