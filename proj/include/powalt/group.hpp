#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "powalt/presentation.hpp"
#include "powalt/word.hpp"

namespace powalt {

  // g = rep * u^exp with rep the canonical representative of g<u>.
  struct CosetSplit {
    Word      rep;
    long long exp = 0;
  };

  // <u> meet <v>: trivial, or generated by u^p = v^q.
  struct CyclicMeet {
    bool      trivial = true;
    long long p       = 0;
    long long q       = 0;
  };

  struct CosetList {
    std::vector<Word> reps;
    bool              exhaustive = true;
  };

  // Default cap on coset enumeration.
  inline constexpr std::size_t default_coset_limit = 64;

  class Group {
   public:
    explicit Group(Alphabet alphabet) : _alphabet(std::move(alphabet)) {}
    virtual ~Group() = default;

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    virtual std::string kind() const = 0;

    // Canonical form: u == v in the group iff normalize(u) == normalize(v).
    virtual Word normalize(Word const& w) const = 0;

    bool is_identity(Word const& w) const {
      return normalize(w).empty();
    }
    bool equal(Word const& u, Word const& v) const {
      return normalize(concat(u, inverse(v))).empty();
    }
    Word multiply(Word const& u, Word const& v) const {
      return normalize(concat(u, v));
    }

    // Image in the abelianization (free coordinates, then torsion).
    virtual std::vector<long long> abelianize(Word const& w) const;

    virtual FinitePresentation presentation() const = 0;

    // Canonical coset representative of g<u>.  Throws
    // unsupported-membership when <u> has no transversal oracle here.
    CosetSplit cyclic_coset(Word const& u, Word const& g) const;

    bool in_cyclic(Word const& u, Word const& g) const {
      return cyclic_coset(u, g).rep.empty();
    }

    // Throws no-intersection-oracle when unsupported.
    virtual CyclicMeet cyclic_intersection(Word const& u, Word const& v) const;

    // Cosets x<u> with x^-1 y x in <u>.
    virtual CosetList fixed_cosets(Word const&  u,
                                   Word const&  y,
                                   std::size_t  limit = default_coset_limit) const;

    // Breadth-first enumeration of left cosets of <u>, identity first.
    CosetList coset_reps(Word const& u,
                         std::size_t limit = default_coset_limit) const;

    virtual bool is_abelian() const {
      return false;
    }
    virtual bool is_free() const {
      return false;
    }

   protected:
    // u is normalized and nontrivial.
    virtual CosetSplit cyclic_coset_impl(Word const& u, Word const& g) const;

    // For groups that only know cosets of <x> for a generator x:
    // reduces <x^s> cosets to <x> cosets.
    CosetSplit generator_power_coset(Word const& u, Word const& g) const;

    virtual CosetSplit generator_coset(int gen, Word const& g) const;

    Alphabet _alphabet;

   private:
    mutable std::once_flag    _ab_once;
    mutable AbelianInvariants _ab;
  };

  using GroupPtr = std::shared_ptr<Group const>;

}  // namespace powalt
