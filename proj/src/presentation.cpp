#include "powalt/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>

namespace powalt {

  std::vector<long long> exponent_sums(Word const& w, std::size_t n) {
    std::vector<long long> v(n, 0);
    for (auto const& s : w) {
      v.at(s.gen) += s.exp;
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Smith normal form
  ////////////////////////////////////////////////////////////////////////

  namespace {
    long long floor_div(long long a, long long b) {
      long long q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
      }
      return q;
    }

    long long mod_pos(long long a, long long m) {
      long long r = a % m;
      return r < 0 ? r + m : r;
    }
  }  // namespace

  AbelianInvariants::AbelianInvariants(std::size_t                         n,
                                       std::vector<std::vector<long long>> a)
      : _n(n), _q(n, std::vector<long long>(n, 0)), _diag(n, 0) {
    for (std::size_t i = 0; i < n; ++i) {
      _q[i][i] = 1;
    }
    std::size_t m = a.size();

    auto col_op = [&](std::size_t dst, std::size_t src, long long k) {
      // column dst -= k * column src
      for (std::size_t r = 0; r < m; ++r) {
        a[r][dst] -= k * a[r][src];
      }
      for (std::size_t r = 0; r < n; ++r) {
        _q[r][dst] -= k * _q[r][src];
      }
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
      for (std::size_t r = 0; r < m; ++r) {
        std::swap(a[r][x], a[r][y]);
      }
      for (std::size_t r = 0; r < n; ++r) {
        std::swap(_q[r][x], _q[r][y]);
      }
    };
    auto col_neg = [&](std::size_t x) {
      for (std::size_t r = 0; r < m; ++r) {
        a[r][x] = -a[r][x];
      }
      for (std::size_t r = 0; r < n; ++r) {
        _q[r][x] = -_q[r][x];
      }
    };

    std::size_t t = 0;
    while (t < m && t < n) {
      // smallest nonzero entry in the lower-right block
      std::size_t pr = m, pc = n;
      long long   best = 0;
      for (std::size_t r = t; r < m; ++r) {
        for (std::size_t c = t; c < n; ++c) {
          if (a[r][c] != 0 && (best == 0 || std::llabs(a[r][c]) < best)) {
            best = std::llabs(a[r][c]);
            pr   = r;
            pc   = c;
          }
        }
      }
      if (best == 0) {
        break;
      }
      std::swap(a[t], a[pr]);
      if (pc != t) {
        col_swap(t, pc);
      }
      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        long long k = floor_div(a[r][t], a[t][t]);
        if (k != 0) {
          for (std::size_t c = t; c < n; ++c) {
            a[r][c] -= k * a[t][c];
          }
        }
        clean = clean && a[r][t] == 0;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        long long k = floor_div(a[t][c], a[t][t]);
        if (k != 0) {
          col_op(c, t, k);
        }
        clean = clean && a[t][c] == 0;
      }
      if (!clean) {
        continue;
      }
      // divisibility: fold any row that the pivot does not divide
      bool divides = true;
      for (std::size_t r = t + 1; r < m && divides; ++r) {
        for (std::size_t c = t + 1; c < n; ++c) {
          if (a[r][c] % a[t][t] != 0) {
            for (std::size_t cc = t; cc < n; ++cc) {
              a[t][cc] += a[r][cc];
            }
            divides = false;
            break;
          }
        }
      }
      if (!divides) {
        continue;
      }
      if (a[t][t] < 0) {
        col_neg(t);
      }
      _diag[t] = a[t][t];
      ++t;
    }
  }

  std::size_t AbelianInvariants::free_rank() const {
    return std::count(_diag.begin(), _diag.end(), 0);
  }

  std::vector<long long> AbelianInvariants::torsion() const {
    std::vector<long long> out;
    for (auto d : _diag) {
      if (d > 1) {
        out.push_back(d);
      }
    }
    return out;
  }

  std::vector<long long>
  AbelianInvariants::image(std::vector<long long> const& v) const {
    std::vector<long long> freec, tors;
    for (std::size_t c = 0; c < _n; ++c) {
      long long y = 0;
      for (std::size_t r = 0; r < _n; ++r) {
        y += v[r] * _q[r][c];
      }
      if (_diag[c] == 0) {
        freec.push_back(y);
      } else if (_diag[c] > 1) {
        tors.push_back(mod_pos(y, _diag[c]));
      }
    }
    freec.insert(freec.end(), tors.begin(), tors.end());
    return freec;
  }

  AbelianInvariants abelianization(FinitePresentation const& p) {
    std::size_t                         n = p.generators.size();
    std::vector<std::vector<long long>> rows;
    for (auto const& r : p.relators) {
      rows.push_back(exponent_sums(r, n));
    }
    return AbelianInvariants(n, std::move(rows));
  }

  ////////////////////////////////////////////////////////////////////////
  // Reidemeister-Schreier
  ////////////////////////////////////////////////////////////////////////

  Word SchreierResult::rewrite(Word const& w) const {
    auto coset_of = [&](long long residue) {
      auto it = std::find(residues.begin(), residues.end(), residue);
      return static_cast<std::size_t>(it - residues.begin());
    };
    long long r   = 0;
    Word      out;
    for (int l : letters(w)) {
      int g = std::abs(l) - 1;
      if (l > 0) {
        int s = schreier[coset_of(r)][g];
        if (s >= 0) {
          out = concat(out, Word{{s, 1}});
        }
        r = mod_pos(r + images[g], order);
      } else {
        r     = mod_pos(r - images[g], order);
        int s = schreier[coset_of(r)][g];
        if (s >= 0) {
          out = concat(out, Word{{s, -1}});
        }
      }
    }
    return out;
  }

  SchreierResult reidemeister_schreier(FinitePresentation const& p,
                                       CyclicQuotient const&     q) {
    SchreierResult res;
    std::size_t    n = p.generators.size();
    res.order        = q.order;
    res.images.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      res.images[i] = mod_pos(q.images.at(i), q.order);
    }
    // cosets = elements of the image, found by BFS from 0
    res.residues    = {0};
    res.transversal = {Word{}};
    std::deque<std::size_t>           queue = {0};
    std::vector<std::pair<long long, int>> tree_edges;
    while (!queue.empty()) {
      std::size_t c = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < n; ++g) {
        long long r2 = mod_pos(res.residues[c] + res.images[g], q.order);
        if (std::find(res.residues.begin(), res.residues.end(), r2)
            == res.residues.end()) {
          res.residues.push_back(r2);
          res.transversal.push_back(
              concat(res.transversal[c], Word{{static_cast<int>(g), 1}}));
          tree_edges.emplace_back(res.residues[c], static_cast<int>(g));
          queue.push_back(res.residues.size() - 1);
        }
      }
    }
    res.index = static_cast<long long>(res.residues.size());
    std::vector<std::string> names;
    res.schreier.assign(res.residues.size(), std::vector<int>(n, -1));
    for (std::size_t c = 0; c < res.residues.size(); ++c) {
      for (std::size_t g = 0; g < n; ++g) {
        bool is_tree = std::find(tree_edges.begin(),
                                 tree_edges.end(),
                                 std::make_pair(res.residues[c], static_cast<int>(g)))
                       != tree_edges.end();
        if (!is_tree) {
          res.schreier[c][g] = static_cast<int>(names.size());
          names.push_back(p.generators.name(static_cast<int>(g)) + "_"
                          + std::to_string(res.residues[c]));
        }
      }
    }
    res.presentation.generators = Alphabet(names);
    for (std::size_t c = 0; c < res.residues.size(); ++c) {
      for (auto const& rel : p.relators) {
        Word conj = concat(concat(res.transversal[c], rel), inverse(res.transversal[c]));
        Word rw   = cyclic_reduce(res.rewrite(conj));
        if (!rw.empty()) {
          res.presentation.relators.push_back(rw);
        }
      }
    }
    return res;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tietze
  ////////////////////////////////////////////////////////////////////////

  Word cyclic_reduce(Word const& w) {
    Word v = reduce(w);
    while (v.size() >= 2 && v.front().gen == v.back().gen) {
      long long e = v.front().exp + v.back().exp;
      v.pop_back();
      if (e == 0) {
        v.erase(v.begin());
      } else {
        v.front().exp = e;
      }
    }
    return v;
  }

  namespace {
    // canonical representative of a relator up to rotation and inversion
    std::vector<int> relator_key(Word const& w) {
      std::vector<int> best;
      for (auto const& base : {letters(w), letters(inverse(w))}) {
        for (std::size_t i = 0; i < base.size(); ++i) {
          std::vector<int> rot(base.begin() + i, base.end());
          rot.insert(rot.end(), base.begin(), base.begin() + i);
          if (best.empty() || rot < best) {
            best = rot;
          }
        }
      }
      return best;
    }

    Word substitute(Word const& w, int gen, Word const& value) {
      Word out;
      for (auto const& s : w) {
        if (s.gen == gen) {
          out = concat(out, power(value, s.exp));
        } else {
          out = concat(out, Word{s});
        }
      }
      return out;
    }
  }  // namespace

  TietzeResult tietze_simplify(FinitePresentation p, std::size_t budget) {
    TietzeResult res;
    std::size_t  n = p.generators.size();
    std::vector<bool> alive(n, true);
    auto& rels = p.relators;

    auto tidy = [&]() {
      std::set<std::vector<int>> seen;
      std::vector<Word>          kept;
      for (auto& r : rels) {
        Word c = cyclic_reduce(r);
        if (c.empty()) {
          continue;
        }
        if (seen.insert(relator_key(c)).second) {
          kept.push_back(c);
        }
      }
      std::stable_sort(kept.begin(), kept.end(), [](Word const& x, Word const& y) {
        return length(x) < length(y);
      });
      rels = std::move(kept);
    };

    tidy();
    while (true) {
      int         rel_idx = -1, gen = -1;
      for (std::size_t i = 0; i < rels.size() && rel_idx < 0; ++i) {
        std::vector<long long> count(n, 0);
        for (auto const& s : rels[i]) {
          count[s.gen] += std::llabs(s.exp);
        }
        for (std::size_t g = 0; g < n; ++g) {
          if (count[g] == 1) {
            rel_idx = static_cast<int>(i);
            gen     = static_cast<int>(g);
            break;
          }
        }
      }
      if (rel_idx < 0) {
        break;
      }
      // rotate so the generator is first: x^e * rest = 1
      Word r   = rels[rel_idx];
      auto pos = std::find_if(r.begin(), r.end(), [&](Syllable const& s) {
        return s.gen == gen;
      });
      Word rot(pos, r.end());
      rot.insert(rot.end(), r.begin(), pos);
      long long e    = rot.front().exp;
      Word      rest(rot.begin() + 1, rot.end());
      Word      value = e == 1 ? inverse(rest) : rest;
      std::size_t cost = 0;
      rels.erase(rels.begin() + rel_idx);
      for (auto& other : rels) {
        cost += static_cast<std::size_t>(length(other));
        other = substitute(other, gen, value);
      }
      alive[gen] = false;
      res.steps += cost + 1;
      tidy();
      if (res.steps >= budget) {
        res.budget_hit = true;
        break;
      }
    }
    // compact the generator list
    std::vector<int>         map(n, -1);
    std::vector<std::string> names;
    for (std::size_t g = 0; g < n; ++g) {
      if (alive[g]) {
        map[g] = static_cast<int>(names.size());
        names.push_back(p.generators.name(static_cast<int>(g)));
      }
    }
    res.presentation.generators = Alphabet(names);
    for (auto const& r : rels) {
      res.presentation.relators.push_back(relabel(r, map));
    }
    return res;
  }

}  // namespace powalt
