#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "powalt/bass_serre.hpp"
#include "powalt/group_json.hpp"

namespace powalt {

  inline constexpr char const* tool_version = "powalt 1.0.0";

  struct PairOptions {
    std::size_t max_word_len = 10;  // L
    std::size_t window       = 8;   // W, in fundamental domains
    long long   max_exponent = 24;  // n_max
    int         max_power    = 6;   // K for stable fixed sets and k!
    std::size_t node_budget  = default_node_budget;
    int         jobs         = 1;
    // Only try this exponent in the loxodromic branches (0: search).
    long long forced_exponent = 0;
  };

  // A ping-pong set, given as a predicate on vertices.
  struct VertexSet {
    enum class Kind { half_tree, projection_window };
    Kind kind = Kind::half_tree;
    // half_tree: x != root and [x, away] passes through root
    Vertex root, away;
    // projection_window: position of the projection of x on Axis(axis),
    // inside [lo, hi] or outside it
    Word      axis;
    long long lo = 0, hi = 0;
    bool      inside = false;

    bool contains(ActingTree const& t, Vertex const& x, Budget* budget = nullptr) const;
  };

  struct PairVerdict {
    enum class Kind { free_certificate, commute, common_vertex, common_boundary, unknown };
    Kind        kind = Kind::unknown;
    std::string branch;  // elliptic-elliptic, mixed-bounded, ...
    Word        g, h;
    long long   n = 0;
    // free_certificate
    std::size_t              verified_length = 0;
    std::size_t              words_checked   = 0;
    std::optional<VertexSet> set_g, set_h;
    // common_vertex
    Vertex vertex;
    // common_boundary
    BoundaryPoint xi;
    long long     utl_g = 0, utl_h = 0;
    // unknown
    std::string                        reason;
    std::optional<StabilisationReport> probe;
    std::vector<std::string>           notes;

    bool definite() const {
      return kind != Kind::unknown;
    }
  };

  std::string kind_name(PairVerdict::Kind k);

  bool commute_at(Group const& G, Word const& g, Word const& h, long long n);
  // smallest k in [1, bound] with g^k = 1, or 0
  long long torsion_order(Group const& G, Word const& g, long long bound = 64);

  // Exhaustive search for a relation among reduced words in X = g^n,
  // Y = h^n: every reduced word of length <= L starting with X (3^(L-1)
  // of each length), plus the powers Y^k, k <= L.
  struct FreeCheck {
    bool             ok         = true;
    std::size_t      candidates = 0;  // words starting with X
    std::size_t      powers     = 0;  // powers of Y
    std::vector<int> relation;        // letters +-1 (X), +-2 (Y)
  };

  FreeCheck check_free_words(Group const& G,
                             Word const&  X,
                             Word const&  Y,
                             std::size_t  L,
                             int          jobs = 1);
  std::string relation_text(std::vector<int> const& letters);

  PairVerdict classify_pair(BassSerreTree const& t,
                            Word const&          g,
                            Word const&          h,
                            PairOptions const&   opts = {});

  // Replays a free certificate: word enumeration, then the ping-pong
  // conditions g^(kn) S_h in S_g and h^(kn) S_g in S_h on sample vertices.
  struct CertificateCheck {
    bool        ok = false;
    std::string failure;
    FreeCheck   words;
    std::size_t samples = 0;
  };

  CertificateCheck verify_free_certificate(Group const&        G,
                                           ActingTree const*   t,
                                           PairVerdict const&  cert,
                                           std::size_t         L,
                                           int                 jobs   = 1,
                                           Budget*             budget = nullptr);

  // Only the sampled ping-pong conditions.
  CertificateCheck check_ping_pong(ActingTree const&  t,
                                   PairVerdict const& cert,
                                   Budget*            budget = nullptr);

  // Certificate documents embed the group so they replay on their own.
  nlohmann::json certificate_json(PairVerdict const&    v,
                                  nlohmann::json const& group_doc,
                                  Group const&          G);
  CertificateCheck verify_certificate(nlohmann::json const&      cert,
                                      std::optional<std::size_t> L    = std::nullopt,
                                      int                        jobs = 1);

  nlohmann::json to_json(PairVerdict const& v, Group const& G);
  nlohmann::json to_json(VertexSet const& s, Group const& G);
  nlohmann::json to_json(StabilisationReport const& r, Group const& G);
  nlohmann::json vertex_json(Vertex const& v, Group const& G);

  struct LawSpec {
    Alphabet variables;
    Word     word;
  };

  // Variables are the identifiers of the text, ordered by length then name.
  LawSpec parse_law(std::string const& text);

  struct LawResult {
    bool              holds  = true;
    std::size_t       tuples = 0;
    std::vector<Word> counterexample;
    std::uint64_t     seed = 0;
  };

  // Generator tuples first, then random tuples of words of length
  // <= word_len in the generators.
  LawResult law_check(Group const&             G,
                      std::vector<Word> const& generators,
                      LawSpec const&           law,
                      std::size_t              samples,
                      std::uint64_t            seed     = 1,
                      std::size_t              word_len = 3);

  struct PAEstimate {
    Word                     g, h;
    long long                n = 0;  // 0: exhausted
    std::string              outcome;  // commute, free
    std::size_t              verified_length = 0;
    std::vector<std::string> evidence;  // for smaller exponents
  };

  PAEstimate pa_estimate(Group const& G,
                         Word const&  g,
                         Word const&  h,
                         long long    n_max,
                         std::size_t  L,
                         int          jobs = 1);

  nlohmann::json to_json(LawResult const& r, Group const& G);
  nlohmann::json to_json(PAEstimate const& r, Group const& G);

}  // namespace powalt
