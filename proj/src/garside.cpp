#include <cstdlib>

#include "powalt/error.hpp"
#include "powalt/groups.hpp"

namespace powalt {

  DihedralArtin::DihedralArtin(std::vector<std::string> names, int m)
      : Group(Alphabet(std::move(names))), _m(m) {
    if (_alphabet.size() != 2) {
      throw Error(ErrorCode::input_error, "dihedral Artin group needs two generators");
    }
    if (m < 2) {
      throw Error(ErrorCode::input_error, "dihedral label must be at least 2");
    }
  }

  DihedralArtin::Simple DihedralArtin::tau(Simple s) const {
    if (_m % 2 == 1) {
      s.start = 1 - s.start;
    }
    return s;
  }

  int DihedralArtin::last_letter(Simple s) const {
    return s.len % 2 == 1 ? s.start : 1 - s.start;
  }

  void DihedralArtin::mul_atom(Form& f, int x) const {
    if (f.factors.empty() || last_letter(f.factors.back()) == x) {
      f.factors.push_back({x, 1});
      return;
    }
    Simple& s = f.factors.back();
    if (s.len + 1 < _m) {
      ++s.len;
      return;
    }
    // s * x = Delta: move it to the front
    f.factors.pop_back();
    for (auto& t : f.factors) {
      t = tau(t);
    }
    ++f.inf;
  }

  void DihedralArtin::mul_atom_inverse(Form& f, int x) const {
    // x^-1 = d * Delta^-1 where x * d = Delta
    int y = 1 - x;
    for (int i = 0; i < _m - 1; ++i) {
      mul_atom(f, i % 2 == 0 ? y : x);
    }
    for (auto& t : f.factors) {
      t = tau(t);
    }
    --f.inf;
  }

  DihedralArtin::Form DihedralArtin::form(Word const& w) const {
    Form f;
    for (auto const& s : w) {
      if (s.gen < 0 || s.gen > 1) {
        throw Error(ErrorCode::input_error, "letter outside the dihedral alphabet");
      }
      for (long long i = 0; i < std::llabs(s.exp); ++i) {
        if (s.exp > 0) {
          mul_atom(f, s.gen);
        } else {
          mul_atom_inverse(f, s.gen);
        }
      }
    }
    return f;
  }

  Word DihedralArtin::delta() const {
    Word d;
    for (int i = 0; i < _m; ++i) {
      d = concat(d, generator(i % 2));
    }
    return d;
  }

  Word DihedralArtin::word(Form const& f) const {
    Word out = power(delta(), f.inf);
    for (auto const& s : f.factors) {
      for (int i = 0; i < s.len; ++i) {
        out = concat(out, generator(i % 2 == 0 ? s.start : 1 - s.start));
      }
    }
    return out;
  }

  Word DihedralArtin::normalize(Word const& w) const {
    return word(form(w));
  }

  long long DihedralArtin::height(Word const& w) const {
    long long h = 0;
    for (auto const& s : w) {
      h += s.exp;
    }
    return h;
  }

  std::vector<long long> DihedralArtin::abelianize(Word const& w) const {
    if (_m % 2 == 1) {
      return {height(w)};
    }
    return exponent_sums(w, 2);
  }

  FinitePresentation DihedralArtin::presentation() const {
    Word ab, ba;
    for (int i = 0; i < _m; ++i) {
      ab = concat(ab, generator(i % 2));
      ba = concat(ba, generator(1 - i % 2));
    }
    return {_alphabet, {concat(ab, inverse(ba))}};
  }

  CosetSplit DihedralArtin::cyclic_coset_impl(Word const& u, Word const& g) const {
    return generator_power_coset(u, g);
  }

  // inf(g x^k) is nondecreasing in k and bounded; the representative is
  // g x^k for the least k attaining the maximum.
  CosetSplit DihedralArtin::generator_coset(int x, Word const& g) const {
    Form      f = form(g);
    long long k = 0;
    while (true) {
      Form next = f;
      mul_atom(next, x);
      if (next.inf <= f.inf) {
        break;
      }
      f = std::move(next);
      ++k;
    }
    while (true) {
      Form prev = f;
      mul_atom_inverse(prev, x);
      if (prev.inf < f.inf) {
        break;
      }
      f = std::move(prev);
      --k;
    }
    return {word(f), -k};
  }

  // Valid for conjugates of standard generators: cyclic parabolic
  // subgroups are closed under roots, so two of them coincide or meet
  // trivially.
  CyclicMeet DihedralArtin::cyclic_intersection(Word const& u, Word const& v) const {
    if (std::llabs(height(u)) != 1 || std::llabs(height(v)) != 1) {
      return Group::cyclic_intersection(u, v);
    }
    if (equal(u, v)) {
      return {false, 1, 1};
    }
    if (equal(u, inverse(v))) {
      return {false, 1, -1};
    }
    return {};
  }

}  // namespace powalt
