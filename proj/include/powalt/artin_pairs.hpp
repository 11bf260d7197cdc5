#pragma once

#include <string>
#include <vector>

#include "powalt/alternative.hpp"
#include "powalt/artin_graph.hpp"
#include "powalt/artin_group.hpp"

namespace powalt {

  struct ArtinPairResult {
    GroupPtr                 group;  // the group the verdict's words live in
    PairVerdict              verdict;
    long long                exponent = 0;  // adjusted exponent of the graph
    std::vector<std::string> trace;         // parabolic descent
  };

  // Needs a (2,2)-free, triangle-free graph; otherwise throws
  // unsupported-word-problem.  Words are over the vertex names.
  ArtinPairResult pair_check_artin(PresentationGraph const& graph,
                                   std::string const&       g,
                                   std::string const&       h,
                                   PairOptions              opts = {});

  struct GrowthWitness {
    GroupPtr                 group;
    bool                     found = false;
    std::string              s, t;
    long long                m = 0;
    PairVerdict              certificate;  // free certificate for (s, t) at n = m
    std::vector<std::string> tried;
  };

  // First pair (in the given order) whose m-th powers have no relation of
  // length <= L.  The graph must be (2,2)-free, triangle-free and not
  // spherical; otherwise throws input-error.
  GrowthWitness growth_witness(PresentationGraph const&        graph,
                               std::vector<std::string> const& gens,
                               long long                       m,
                               std::size_t                     L    = 8,
                               int                             jobs = 1);

  nlohmann::json to_json(ArtinPairResult const& r);
  nlohmann::json to_json(GrowthWitness const& w);

}  // namespace powalt
