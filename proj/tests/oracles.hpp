#pragma once

// Test-side reference computations.  None of these call into the library's
// normal forms.

#include <map>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "powalt/tree.hpp"
#include "powalt/word.hpp"

namespace oracle {

  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  using powalt::Word;

  inline Word random_word(std::mt19937_64& rng, int gens, int syllables, int max_exp) {
    std::uniform_int_distribution<int> g(0, gens - 1), e(1, max_exp), s(0, 1);
    Word w;
    for (int i = 0; i < syllables; ++i) {
      int x = g(rng);
      if (!w.empty() && w.back().gen == x) {
        x = (x + 1) % gens;
      }
      w.push_back({x, s(rng) ? e(rng) : -e(rng)});
    }
    return w;
  }

  // Free reduction on single letters with a stack.
  inline bool free_trivial(Word const& w) {
    std::vector<int> st;
    for (auto const& s : w) {
      int l = s.exp > 0 ? s.gen + 1 : -(s.gen + 1);
      for (long long i = 0; i < (s.exp > 0 ? s.exp : -s.exp); ++i) {
        if (!st.empty() && st.back() == -l) {
          st.pop_back();
        } else {
          st.push_back(l);
        }
      }
    }
    return st.empty();
  }

  // BS(1,2) = <a, b | b^-1 a b = a^2> inside Aff(Q): a = x + 1, b = x / 2.
  struct Affine {
    cpp_rational scale = 1, shift = 0;

    Affine operator*(Affine const& o) const {
      return {scale * o.scale, scale * o.shift + shift};
    }
    bool identity() const {
      return scale == 1 && shift == 0;
    }
    bool operator==(Affine const&) const = default;
  };

  inline Affine affine_pow(Affine x, long long k) {
    if (k < 0) {
      x = {1 / x.scale, -x.shift / x.scale};
      k = -k;
    }
    Affine r;
    for (long long i = 0; i < k; ++i) {
      r = r * x;
    }
    return r;
  }

  // gen_a, gen_b: generator indices of a and b in the word's alphabet
  inline Affine affine(Word const& w, int gen_a, int gen_b) {
    Affine const a{1, 1}, b{cpp_rational(1, 2), 0};
    Affine       r;
    for (auto const& s : w) {
      r = r * affine_pow(s.gen == gen_a ? a : (s.gen == gen_b ? b : Affine{}), s.exp);
    }
    return r;
  }

  // Reduced Burau representation of B_3 = A(3), faithful.  Entries are
  // Laurent polynomials in t, exponent -> coefficient.
  using Laurent = std::map<int, cpp_int>;

  inline Laurent add(Laurent a, Laurent const& b) {
    for (auto const& [e, c] : b) {
      if ((a[e] += c) == 0) {
        a.erase(e);
      }
    }
    return a;
  }

  inline Laurent mul(Laurent const& a, Laurent const& b) {
    Laurent r;
    for (auto const& [e1, c1] : a) {
      for (auto const& [e2, c2] : b) {
        if ((r[e1 + e2] += c1 * c2) == 0) {
          r.erase(e1 + e2);
        }
      }
    }
    return r;
  }

  struct Burau {
    Laurent m[2][2] = {{{{0, 1}}, {}}, {{}, {{0, 1}}}};

    Burau operator*(Burau const& o) const {
      Burau r;
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          r.m[i][j] = add(mul(m[i][0], o.m[0][j]), mul(m[i][1], o.m[1][j]));
        }
      }
      return r;
    }
    bool operator==(Burau const& o) const {
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          if (m[i][j] != o.m[i][j]) {
            return false;
          }
        }
      }
      return true;
    }
    bool identity() const {
      return *this == Burau{};
    }
  };

  inline Burau burau_letter(int gen, bool inverse) {
    Burau b;
    if (gen == 0) {
      // s1 = [[-t, 1], [0, 1]], s1^-1 = [[-1/t, 1/t], [0, 1]]
      b.m[0][0] = inverse ? Laurent{{-1, -1}} : Laurent{{1, -1}};
      b.m[0][1] = inverse ? Laurent{{-1, 1}} : Laurent{{0, 1}};
    } else {
      // s2 = [[1, 0], [t, -t]], s2^-1 = [[1, 0], [1, -1/t]]
      b.m[1][0] = inverse ? Laurent{{0, 1}} : Laurent{{1, 1}};
      b.m[1][1] = inverse ? Laurent{{-1, -1}} : Laurent{{1, -1}};
    }
    return b;
  }

  inline Burau burau(Word const& w) {
    Burau r;
    for (auto const& s : w) {
      Burau l = burau_letter(s.gen, s.exp < 0);
      for (long long i = 0; i < (s.exp > 0 ? s.exp : -s.exp); ++i) {
        r = r * l;
      }
    }
    return r;
  }

  // Minimum displacement of g over a ball around the base, with the
  // geodesic [base, g base] added so truncated branching cannot miss the
  // minimum set.
  struct Displacement {
    std::size_t min     = 0;
    std::size_t sampled = 0;
  };

  inline Displacement brute_displacement(powalt::ActingTree const& t,
                                         Word const&               g,
                                         std::size_t               R,
                                         std::size_t               branch) {
    auto sample = powalt::ball(t, t.base(), R, branch).vertices;
    for (auto const& v : powalt::geodesic(t, t.base(), t.act(g, t.base())).vertices) {
      sample.push_back(v);
    }
    Displacement d{SIZE_MAX, sample.size()};
    for (auto const& x : sample) {
      d.min = std::min(d.min, powalt::distance(t, x, t.act(g, x)));
    }
    return d;
  }

}  // namespace oracle
