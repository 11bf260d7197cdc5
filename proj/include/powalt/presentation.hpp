#pragma once

#include <cstddef>
#include <vector>

#include "powalt/word.hpp"

namespace powalt {

  struct FinitePresentation {
    Alphabet          generators;
    std::vector<Word> relators;
  };

  std::vector<long long> exponent_sums(Word const& w, std::size_t n);

  // Z^n modulo the row lattice, in Smith normal form.  image() gives the
  // coordinates of a vector: free coordinates as integers, torsion
  // coordinates reduced into [0, d).
  class AbelianInvariants {
   public:
    AbelianInvariants() = default;
    AbelianInvariants(std::size_t n, std::vector<std::vector<long long>> rows);

    std::size_t            free_rank() const;
    std::vector<long long> torsion() const;
    std::vector<long long> image(std::vector<long long> const& v) const;
    std::size_t            dimension() const noexcept {
      return _n;
    }

   private:
    std::size_t                         _n = 0;
    std::vector<std::vector<long long>> _q;     // n x n column transform
    std::vector<long long>              _diag;  // length n, 0 = free
  };

  AbelianInvariants abelianization(FinitePresentation const& p);

  // A homomorphism onto Z/order given by generator images.
  struct CyclicQuotient {
    long long              order;
    std::vector<long long> images;
  };

  struct SchreierResult {
    FinitePresentation presentation;
    long long          index = 1;
    // residue of each coset and its transversal word in the original gens
    std::vector<long long> residues;
    std::vector<Word>      transversal;
    // (coset, generator) -> Schreier generator, -1 on tree edges
    std::vector<std::vector<int>> schreier;
    std::vector<long long>        images;
    long long                     order = 1;

    // Rewrite a kernel element into the Schreier generators.
    Word rewrite(Word const& w) const;
  };

  SchreierResult reidemeister_schreier(FinitePresentation const& p,
                                       CyclicQuotient const&     q);

  struct TietzeResult {
    FinitePresentation presentation;
    std::size_t        steps      = 0;
    bool               budget_hit = false;
  };

  // Removes trivial and duplicate relators and eliminates generators that
  // occur exactly once in some relator.  Stops after `budget` letter
  // rewrites.
  TietzeResult tietze_simplify(FinitePresentation p, std::size_t budget = 10000);

  // Cyclically reduced representative; the relator is unchanged as a
  // normal-closure generator.
  Word cyclic_reduce(Word const& w);

}  // namespace powalt
