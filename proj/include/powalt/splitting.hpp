#pragma once

#include <utility>
#include <vector>

#include "powalt/group.hpp"

namespace powalt {

  // P *_C Q with C trivial or infinite cyclic, C = <left_image> in P and
  // <right_image> in Q.  Generators with the same name in P and Q are
  // identified and must be the edge generator on both sides.
  class Amalgam : public Group {
   public:
    Amalgam(GroupPtr left, GroupPtr right, Word left_image, Word right_image);

    std::string kind() const override {
      return "amalgam";
    }
    GroupPtr const& factor(int side) const {
      return side == 0 ? _left : _right;
    }
    Word const& edge_image(int side) const {
      return side == 0 ? _left_image : _right_image;
    }
    bool trivial_edge() const {
      return _left_image.empty();
    }

    // Alternating normal form: reps from alternating factors, each a
    // nontrivial canonical coset representative, then an edge element.
    struct Form {
      std::vector<std::pair<int, Word>> reps;  // (side, factor word)
      long long                         edge_exp = 0;
    };
    Form decompose(Word const& w) const;
    Word compose(Form const& f) const;
    Word compose(std::vector<std::pair<int, Word>> const& reps,
                 std::size_t                              count) const;

    // -1 if the word mixes letters of both factors
    int  side_of(Word const& w) const;
    Word to_factor(int side, Word const& w) const;
    Word from_factor(int side, Word const& w) const;

    Word               normalize(Word const& w) const override;
    FinitePresentation presentation() const override;

   protected:
    CosetSplit cyclic_coset_impl(Word const& u, Word const& g) const override;

   private:
    GroupPtr _left, _right;
    Word     _left_image, _right_image;
    // G gen -> side (-2 shared) and local index on each side (-1 absent)
    std::vector<int>              _side;
    std::vector<std::vector<int>> _local;   // [side][G gen]
    std::vector<std::vector<int>> _global;  // [side][local gen]
  };

  // B*_{t}: t * from_image * t^-1 = to_image, both infinite cyclic (or
  // both trivial) subgroups of B.
  class Hnn : public Group {
   public:
    Hnn(GroupPtr base, Word from_image, Word to_image, std::string stable);

    std::string kind() const override {
      return "hnn";
    }
    GroupPtr const& base() const {
      return _base;
    }
    // subgroup conjugated by t^eps into the other: eps=+1 -> from_image
    Word const& from_image() const {
      return _from;
    }
    Word const& to_image() const {
      return _to;
    }
    int stable_letter() const {
      return _t;
    }

    // Britton normal form: g0 t^e1 g1 ... t^ek tail
    struct Form {
      std::vector<std::pair<Word, int>> steps;  // (base rep, eps)
      Word                              tail;
    };
    Form decompose(Word const& w) const;
    Word compose(Form const& f) const;
    Word compose(std::vector<std::pair<Word, int>> const& steps,
                 std::size_t                              count) const;

    Word to_base(Word const& w) const;  // w must avoid t
    Word from_base(Word const& w) const;

    Word               normalize(Word const& w) const override;
    FinitePresentation presentation() const override;

   protected:
    CosetSplit cyclic_coset_impl(Word const& u, Word const& g) const override;

   private:
    GroupPtr _base;
    Word     _from, _to;
    int      _t;
    void     append_stable(Form& f, int eps) const;
  };

}  // namespace powalt
