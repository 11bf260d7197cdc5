#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "powalt/artin_graph.hpp"
#include "powalt/bass_serre.hpp"
#include "powalt/presentation.hpp"

namespace powalt {

  // Artin group with a solved word problem.  Supported graphs split
  // recursively over at most one vertex down to complete pieces on at most
  // two vertices (or complete right-angled pieces).  Anything else throws
  // unsupported-word-problem.
  GroupPtr artin_group(PresentationGraph const& g);

  // The preferred visual splitting as an amalgam with its Bass-Serre tree.
  struct ArtinSplitting {
    VisualSplitting                split;
    std::shared_ptr<Amalgam const> group;
    std::shared_ptr<BassSerreTree> tree;
    PresentationGraph              piece[2];
  };

  std::optional<ArtinSplitting> artin_splitting(PresentationGraph const& g);

  struct DihedralStructure {
    int                    m       = 0;
    long long              m_prime = 0;
    long long              k       = 0;
    std::vector<long long> images;  // of a and b in Z/m'
    std::size_t            abelian_rank = 0;
    std::vector<long long> torsion;
    FinitePresentation     kernel;      // Reidemeister-Schreier output
    FinitePresentation     simplified;  // after Tietze moves
    std::size_t            tietze_steps      = 0;
    bool                   tietze_budget_hit = false;
    Word                   central;  // Delta (m even) or Delta^2 (m odd)
    std::vector<long long> central_image;
    bool                   central_primitive = false;
    std::vector<std::string> transcript;
  };

  // Kernel of a, b -> 1 in Z/m' (a -> 0 when 4 divides m) for the dihedral
  // Artin group of label m.
  DihedralStructure dihedral_structure(int m);

  nlohmann::json to_json(DihedralStructure const& d);

}  // namespace powalt
