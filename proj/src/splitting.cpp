#include "powalt/splitting.hpp"

#include <algorithm>
#include <cstdlib>

#include "powalt/error.hpp"

namespace powalt {

  ////////////////////////////////////////////////////////////////////////
  // Amalgam
  ////////////////////////////////////////////////////////////////////////

  Amalgam::Amalgam(GroupPtr left, GroupPtr right, Word left_image, Word right_image)
      : Group(Alphabet()),
        _left(std::move(left)),
        _right(std::move(right)),
        _left_image(_left->normalize(left_image)),
        _right_image(_right->normalize(right_image)) {
    if (_left_image.empty() != _right_image.empty()) {
      throw Error(ErrorCode::input_error,
                  "edge group images must be both trivial or both nontrivial");
    }
    std::vector<std::string> names = _left->alphabet().names();
    for (auto const& n : _right->alphabet().names()) {
      if (std::find(names.begin(), names.end(), n) == names.end()) {
        names.push_back(n);
      }
    }
    _alphabet = Alphabet(names);
    std::size_t N = names.size();
    _side.assign(N, 0);
    _local.assign(2, std::vector<int>(N, -1));
    _global.resize(2);
    for (int side = 0; side < 2; ++side) {
      auto const& a = factor(side)->alphabet();
      for (std::size_t j = 0; j < a.size(); ++j) {
        int g                = _alphabet.index(a.name(static_cast<int>(j)));
        _local[side][g]      = static_cast<int>(j);
        _global[side].push_back(g);
      }
    }
    for (std::size_t g = 0; g < N; ++g) {
      if (_local[0][g] >= 0 && _local[1][g] >= 0) {
        _side[g] = -2;
        Word l   = generator(_local[0][g]);
        Word r   = generator(_local[1][g]);
        if (!(_left_image == l && _right_image == r)) {
          throw Error(ErrorCode::input_error,
                      "shared generator '" + names[g]
                          + "' must be the edge generator on both sides");
        }
      } else {
        _side[g] = _local[0][g] >= 0 ? 0 : 1;
      }
    }
  }

  int Amalgam::side_of(Word const& w) const {
    for (int side = 0; side < 2; ++side) {
      bool ok = std::all_of(w.begin(), w.end(), [&](Syllable const& s) {
        return _local[side][s.gen] >= 0;
      });
      if (ok) {
        return side;
      }
    }
    return -1;
  }

  Word Amalgam::to_factor(int side, Word const& w) const {
    Word out;
    for (auto const& s : w) {
      int l = _local[side][s.gen];
      if (l < 0) {
        throw Error(ErrorCode::input_error,
                    "letter " + _alphabet.name(s.gen) + " is not in the factor");
      }
      out = concat(out, Word{{l, s.exp}});
    }
    return out;
  }

  Word Amalgam::from_factor(int side, Word const& w) const {
    return relabel(w, _global[side]);
  }

  Amalgam::Form Amalgam::decompose(Word const& w) const {
    Form f;
    for (auto const& s : w) {
      int         X   = _side[s.gen] == 1 ? 1 : 0;
      Group const& F  = *factor(X);
      Word        p   = {{_local[X][s.gen], s.exp}};
      Word        c   = power(edge_image(X), f.edge_exp);
      Word        y;
      if (!f.reps.empty() && f.reps.back().first == X) {
        y = F.normalize(concat(concat(f.reps.back().second, c), p));
        f.reps.pop_back();
      } else {
        y = F.normalize(concat(c, p));
      }
      auto split = F.cyclic_coset(edge_image(X), y);
      if (!split.rep.empty()) {
        f.reps.emplace_back(X, split.rep);
      }
      f.edge_exp = split.exp;
    }
    return f;
  }

  Word Amalgam::compose(std::vector<std::pair<int, Word>> const& reps,
                        std::size_t                              count) const {
    Word out;
    for (std::size_t i = 0; i < count; ++i) {
      out = concat(out, from_factor(reps[i].first, reps[i].second));
    }
    return out;
  }

  Word Amalgam::compose(Form const& f) const {
    return concat(compose(f.reps, f.reps.size()),
                  from_factor(0, power(_left_image, f.edge_exp)));
  }

  Word Amalgam::normalize(Word const& w) const {
    return compose(decompose(w));
  }

  FinitePresentation Amalgam::presentation() const {
    FinitePresentation p{_alphabet, {}};
    for (int side = 0; side < 2; ++side) {
      for (auto const& r : factor(side)->presentation().relators) {
        p.relators.push_back(from_factor(side, r));
      }
    }
    Word e = concat(from_factor(0, _left_image), inverse(from_factor(1, _right_image)));
    if (!e.empty()) {
      p.relators.push_back(e);
    }
    return p;
  }

  CosetSplit Amalgam::cyclic_coset_impl(Word const& u, Word const& g) const {
    int X = side_of(u);
    if (X < 0) {
      return Group::cyclic_coset_impl(u, g);
    }
    Group const& F    = *factor(X);
    Form         f    = decompose(g);
    Word         c    = power(edge_image(X), f.edge_exp);
    Word         tail = F.normalize(c);
    std::size_t  k    = f.reps.size();
    if (k > 0 && f.reps.back().first == X) {
      tail = F.normalize(concat(f.reps.back().second, c));
      --k;
    }
    auto split = F.cyclic_coset(to_factor(X, u), tail);
    return {normalize(concat(compose(f.reps, k), from_factor(X, split.rep))),
            split.exp};
  }

  ////////////////////////////////////////////////////////////////////////
  // HNN
  ////////////////////////////////////////////////////////////////////////

  Hnn::Hnn(GroupPtr base, Word from_image, Word to_image, std::string stable)
      : Group(Alphabet()),
        _base(std::move(base)),
        _from(_base->normalize(from_image)),
        _to(_base->normalize(to_image)) {
    if (_from.empty() != _to.empty()) {
      throw Error(ErrorCode::input_error,
                  "associated subgroups must be both trivial or both nontrivial");
    }
    auto names = _base->alphabet().names();
    if (std::find(names.begin(), names.end(), stable) != names.end()) {
      throw Error(ErrorCode::input_error, "stable letter clashes with a base generator");
    }
    names.push_back(stable);
    _t        = static_cast<int>(names.size()) - 1;
    _alphabet = Alphabet(names);
  }

  Word Hnn::to_base(Word const& w) const {
    for (auto const& s : w) {
      if (s.gen == _t) {
        throw Error(ErrorCode::input_error, "stable letter in a base word");
      }
    }
    return w;
  }

  Word Hnn::from_base(Word const& w) const {
    return w;
  }

  void Hnn::append_stable(Form& f, int eps) const {
    Group const& B = *_base;
    if (!f.steps.empty() && f.steps.back().second == -eps) {
      // t c t^-1 with c in <from>, or t^-1 c t with c in <to>
      Word const& sub   = eps == -1 ? _from : _to;
      Word const& other = eps == -1 ? _to : _from;
      auto        split = B.cyclic_coset(sub, f.tail);
      if (split.rep.empty()) {
        Word g = f.steps.back().first;
        f.steps.pop_back();
        f.tail = B.normalize(concat(g, power(other, split.exp)));
        return;
      }
    }
    // tail = r * sub^k and sub^k t^eps = t^eps other^k
    Word const& sub   = eps == 1 ? _to : _from;
    Word const& other = eps == 1 ? _from : _to;
    auto        split = B.cyclic_coset(sub, f.tail);
    f.steps.emplace_back(split.rep, eps);
    f.tail = B.normalize(power(other, split.exp));
  }

  Hnn::Form Hnn::decompose(Word const& w) const {
    Form f;
    for (auto const& s : w) {
      if (s.gen == _t) {
        int eps = s.exp > 0 ? 1 : -1;
        for (long long i = 0; i < std::llabs(s.exp); ++i) {
          append_stable(f, eps);
        }
      } else {
        f.tail = _base->normalize(concat(f.tail, Word{s}));
      }
    }
    return f;
  }

  Word Hnn::compose(std::vector<std::pair<Word, int>> const& steps,
                    std::size_t                              count) const {
    Word out;
    for (std::size_t i = 0; i < count; ++i) {
      out = concat(out, from_base(steps[i].first));
      out = concat(out, generator(_t, steps[i].second));
    }
    return out;
  }

  Word Hnn::compose(Form const& f) const {
    return concat(compose(f.steps, f.steps.size()), from_base(f.tail));
  }

  Word Hnn::normalize(Word const& w) const {
    return compose(decompose(w));
  }

  FinitePresentation Hnn::presentation() const {
    FinitePresentation p{_alphabet, {}};
    for (auto const& r : _base->presentation().relators) {
      p.relators.push_back(from_base(r));
    }
    Word t = generator(_t);
    p.relators.push_back(concat(conjugate(t, _from), inverse(_to)));
    return p;
  }

  CosetSplit Hnn::cyclic_coset_impl(Word const& u, Word const& g) const {
    for (auto const& s : u) {
      if (s.gen == _t) {
        return Group::cyclic_coset_impl(u, g);
      }
    }
    Form f     = decompose(g);
    auto split = _base->cyclic_coset(to_base(u), f.tail);
    f.tail     = split.rep;
    return {compose(f), split.exp};
  }

}  // namespace powalt
