#pragma once

#include <vector>

#include "powalt/group.hpp"

namespace powalt {

  class TrivialGroup : public Group {
   public:
    TrivialGroup() : Group(Alphabet()) {}
    std::string kind() const override {
      return "trivial";
    }
    Word normalize(Word const&) const override {
      return {};
    }
    std::vector<long long> abelianize(Word const&) const override {
      return {};
    }
    FinitePresentation presentation() const override {
      return {};
    }
    bool is_abelian() const override {
      return true;
    }
    CosetList fixed_cosets(Word const&, Word const&, std::size_t) const override {
      return {{Word{}}, true};
    }

   protected:
    CosetSplit cyclic_coset_impl(Word const&, Word const&) const override {
      return {};
    }
  };

  class FiniteCyclic : public Group {
   public:
    FiniteCyclic(std::string name, long long order);
    std::string kind() const override {
      return "cyclic";
    }
    long long order() const noexcept {
      return _order;
    }
    Word                   normalize(Word const& w) const override;
    std::vector<long long> abelianize(Word const& w) const override;
    FinitePresentation     presentation() const override;
    bool                   is_abelian() const override {
      return true;
    }
    CosetList fixed_cosets(Word const& u, Word const& y, std::size_t limit) const override;

   protected:
    CosetSplit cyclic_coset_impl(Word const& u, Word const& g) const override;

   private:
    long long _order;
  };

  class FreeAbelian : public Group {
   public:
    explicit FreeAbelian(std::vector<std::string> names);
    std::string kind() const override {
      return "free_abelian";
    }
    Word                   normalize(Word const& w) const override;
    std::vector<long long> abelianize(Word const& w) const override;
    FinitePresentation     presentation() const override;
    bool                   is_abelian() const override {
      return true;
    }
    CyclicMeet cyclic_intersection(Word const& u, Word const& v) const override;
    CosetList fixed_cosets(Word const& u, Word const& y, std::size_t limit) const override;

   protected:
    CosetSplit cyclic_coset_impl(Word const& u, Word const& g) const override;
  };

  class FreeGroup : public Group {
   public:
    explicit FreeGroup(std::vector<std::string> names);
    std::string kind() const override {
      return "free";
    }
    Word normalize(Word const& w) const override {
      return reduce(w);
    }
    std::vector<long long> abelianize(Word const& w) const override;
    FinitePresentation     presentation() const override;
    bool                   is_abelian() const override {
      return _alphabet.size() <= 1;
    }
    bool is_free() const override {
      return true;
    }
    CyclicMeet cyclic_intersection(Word const& u, Word const& v) const override;
    CosetList fixed_cosets(Word const& u, Word const& y, std::size_t limit) const override;

   protected:
    CosetSplit cyclic_coset_impl(Word const& u, Word const& g) const override;
  };

  // Free-group helpers on reduced words.
  namespace free_words {
    // w = c x c^-1 with x cyclically reduced
    void split_conjugate(Word const& w, Word& c, Word& x);
    // r with w = r^k, k >= 1 maximal
    Word root(Word const& w, long long& k);
    bool is_proper_power(Word const& w);
    // some z with z^-1 a z = b, if a and b are conjugate
    std::optional<Word> conjugator(Word const& a, Word const& b);
  }  // namespace free_words

  // Right-angled Artin group on a commutation graph.
  class GraphProductZ : public Group {
   public:
    GraphProductZ(std::vector<std::string>         names,
                  std::vector<std::pair<int, int>> commuting);
    std::string kind() const override {
      return "graph_product_z";
    }
    bool commute(int a, int b) const {
      return a == b || _commute[a][b];
    }
    std::vector<std::pair<int, int>> commuting_pairs() const;
    Word                             normalize(Word const& w) const override;
    std::vector<long long>           abelianize(Word const& w) const override;
    FinitePresentation               presentation() const override;
    bool                             is_abelian() const override;

   protected:
    CosetSplit cyclic_coset_impl(Word const& u, Word const& g) const override;
    CosetSplit generator_coset(int gen, Word const& g) const override;

   private:
    std::vector<std::vector<bool>> _commute;
  };

  // Dihedral Artin group <a, b | aba... = bab...> with Garside normal form.
  class DihedralArtin : public Group {
   public:
    DihedralArtin(std::vector<std::string> names, int m);
    std::string kind() const override {
      return "dihedral_artin";
    }
    int label() const noexcept {
      return _m;
    }
    Word                   normalize(Word const& w) const override;
    std::vector<long long> abelianize(Word const& w) const override;
    FinitePresentation     presentation() const override;
    bool                   is_abelian() const override {
      return _m == 2;
    }
    CyclicMeet cyclic_intersection(Word const& u, Word const& v) const override;

    struct Simple {
      int start;
      int len;
      bool operator==(Simple const&) const = default;
    };
    // Delta^inf * factors, left-weighted
    struct Form {
      long long           inf = 0;
      std::vector<Simple> factors;
    };
    Form form(Word const& w) const;
    Word word(Form const& f) const;
    void mul_atom(Form& f, int x) const;
    void mul_atom_inverse(Form& f, int x) const;
    Word delta() const;
    long long height(Word const& w) const;

   protected:
    CosetSplit cyclic_coset_impl(Word const& u, Word const& g) const override;
    CosetSplit generator_coset(int gen, Word const& g) const override;

   private:
    int _m;
    Simple tau(Simple s) const;
    int    last_letter(Simple s) const;
  };

  class DirectProduct : public Group {
   public:
    explicit DirectProduct(std::vector<GroupPtr> factors);
    std::string kind() const override {
      return "direct_product";
    }
    std::vector<GroupPtr> const& factors() const noexcept {
      return _factors;
    }
    Word                   normalize(Word const& w) const override;
    std::vector<long long> abelianize(Word const& w) const override;
    FinitePresentation     presentation() const override;
    bool                   is_abelian() const override;
    CyclicMeet cyclic_intersection(Word const& u, Word const& v) const override;

    // split into per-factor words (factor-local letters); -1 if mixed
    int  factor_of(Word const& w) const;
    Word to_factor(std::size_t i, Word const& w) const;
    Word from_factor(std::size_t i, Word const& w) const;

   protected:
    CosetSplit cyclic_coset_impl(Word const& u, Word const& g) const override;

   private:
    std::vector<GroupPtr>                 _factors;
    std::vector<std::pair<int, int>>      _owner;   // G gen -> (factor, local)
    std::vector<std::vector<int>>         _global;  // factor, local -> G gen
  };

}  // namespace powalt
