#include "powalt/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "powalt/error.hpp"

namespace powalt {

  namespace {
    long long mod_pos(long long a, long long m) {
      long long r = a % m;
      return r < 0 ? r + m : r;
    }

    long long floor_div(long long a, long long b) {
      long long q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
      }
      return q;
    }

    // inverse of a modulo m, gcd(a, m) = 1
    long long mod_inverse(long long a, long long m) {
      long long t = 0, nt = 1, r = m, nr = mod_pos(a, m);
      while (nr != 0) {
        long long q = r / nr;
        t           = std::exchange(nt, t - q * nt);
        r           = std::exchange(nr, r - q * nr);
      }
      return mod_pos(t, m);
    }

    std::vector<std::string> single(std::string name) {
      return {std::move(name)};
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Group
  ////////////////////////////////////////////////////////////////////////

  std::vector<long long> Group::abelianize(Word const& w) const {
    std::call_once(_ab_once, [this] { _ab = abelianization(presentation()); });
    return _ab.image(exponent_sums(w, _alphabet.size()));
  }

  CosetSplit Group::cyclic_coset(Word const& u, Word const& g) const {
    Word nu = normalize(u);
    if (nu.empty()) {
      return {normalize(g), 0};
    }
    return cyclic_coset_impl(nu, g);
  }

  CosetSplit Group::cyclic_coset_impl(Word const& u, Word const&) const {
    throw Error(ErrorCode::unsupported_membership,
                "no transversal for <" + format_word(u, _alphabet) + "> in "
                    + kind());
  }

  CosetSplit Group::generator_coset(int gen, Word const&) const {
    throw Error(ErrorCode::unsupported_membership,
                "no transversal for <" + _alphabet.name(gen) + "> in " + kind());
  }

  CosetSplit Group::generator_power_coset(Word const& u, Word const& g) const {
    if (u.size() != 1) {
      throw Error(ErrorCode::unsupported_membership,
                  "cyclic subgroup <" + format_word(u, _alphabet)
                      + "> is not generated by a generator power in " + kind());
    }
    int        x     = u[0].gen;
    long long  s     = u[0].exp;
    CosetSplit split = generator_coset(x, g);
    long long  r     = mod_pos(split.exp, std::llabs(s));
    long long  q     = (split.exp - r) / s;
    return {normalize(concat(split.rep, generator(x, r))), q};
  }

  CyclicMeet Group::cyclic_intersection(Word const& u, Word const& v) const {
    throw Error(ErrorCode::no_intersection_oracle,
                "cannot intersect <" + format_word(u, _alphabet) + "> and <"
                    + format_word(v, _alphabet) + "> in " + kind());
  }

  CosetList Group::coset_reps(Word const& u, std::size_t limit) const {
    CosetList                              out;
    std::unordered_set<Word, WordHash>     seen;
    std::deque<Word>                       queue;
    Word                                   start = cyclic_coset(u, Word{}).rep;
    seen.insert(start);
    out.reps.push_back(start);
    queue.push_back(start);
    while (!queue.empty()) {
      Word r = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < _alphabet.size(); ++x) {
        for (long long e : {1ll, -1ll}) {
          Word c = cyclic_coset(u, concat(generator(static_cast<int>(x), e), r)).rep;
          if (seen.insert(c).second) {
            if (out.reps.size() >= limit) {
              out.exhaustive = false;
              return out;
            }
            out.reps.push_back(c);
            queue.push_back(c);
          }
        }
      }
    }
    return out;
  }

  CosetList
  Group::fixed_cosets(Word const& u, Word const& y, std::size_t limit) const {
    CosetList all = coset_reps(u, limit);
    CosetList out;
    out.exhaustive = all.exhaustive;
    for (auto const& x : all.reps) {
      Word c = concat(concat(inverse(x), y), x);
      if (in_cyclic(u, c)) {
        out.reps.push_back(x);
      }
    }
    return out;
  }

  namespace {
    // In an abelian group y is fixed by every coset or by none.
    CosetList abelian_fixed(Group const& G, Word const& u, Word const& y,
                            std::size_t limit) {
      if (G.in_cyclic(u, y)) {
        return G.coset_reps(u, limit);
      }
      return {{}, true};
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteCyclic
  ////////////////////////////////////////////////////////////////////////

  FiniteCyclic::FiniteCyclic(std::string name, long long order)
      : Group(Alphabet(single(std::move(name)))), _order(order) {
    if (order < 1) {
      throw Error(ErrorCode::input_error, "cyclic group order must be positive");
    }
  }

  Word FiniteCyclic::normalize(Word const& w) const {
    long long e = 0;
    for (auto const& s : w) {
      e = mod_pos(e + mod_pos(s.exp, _order), _order);
    }
    return generator(0, e);
  }

  std::vector<long long> FiniteCyclic::abelianize(Word const& w) const {
    if (_order == 1) {
      return {};
    }
    auto n = normalize(w);
    return {n.empty() ? 0 : n[0].exp};
  }

  FinitePresentation FiniteCyclic::presentation() const {
    return {_alphabet, {generator(0, _order)}};
  }

  CosetSplit FiniteCyclic::cyclic_coset_impl(Word const& u, Word const& g) const {
    long long s = mod_pos(u[0].exp, _order);
    long long e = mod_pos(normalize(g).empty() ? 0 : normalize(g)[0].exp, _order);
    if (s == 0) {
      return {generator(0, e), 0};
    }
    long long d  = std::gcd(s, _order);
    long long r  = e % d;
    long long n1 = _order / d;
    long long k  = n1 == 1 ? 0 : mod_pos(((e - r) / d) * mod_inverse(s / d, n1), n1);
    return {generator(0, r), k};
  }

  CosetList
  FiniteCyclic::fixed_cosets(Word const& u, Word const& y, std::size_t limit) const {
    return abelian_fixed(*this, u, y, limit);
  }

  ////////////////////////////////////////////////////////////////////////
  // FreeAbelian
  ////////////////////////////////////////////////////////////////////////

  FreeAbelian::FreeAbelian(std::vector<std::string> names)
      : Group(Alphabet(std::move(names))) {}

  Word FreeAbelian::normalize(Word const& w) const {
    auto v = exponent_sums(w, _alphabet.size());
    Word out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) {
        out.push_back({static_cast<int>(i), v[i]});
      }
    }
    return out;
  }

  std::vector<long long> FreeAbelian::abelianize(Word const& w) const {
    return exponent_sums(w, _alphabet.size());
  }

  FinitePresentation FreeAbelian::presentation() const {
    FinitePresentation p{_alphabet, {}};
    int                n = static_cast<int>(_alphabet.size());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        p.relators.push_back(commutator(generator(i), generator(j)));
      }
    }
    return p;
  }

  CosetSplit FreeAbelian::cyclic_coset_impl(Word const& u, Word const& g) const {
    auto uv = exponent_sums(u, _alphabet.size());
    auto gv = exponent_sums(g, _alphabet.size());
    std::size_t i = 0;
    while (uv[i] == 0) {
      ++i;
    }
    // choose k with gv[i] - k*uv[i] in [0, |uv[i]|)
    long long k = uv[i] > 0 ? floor_div(gv[i], uv[i]) : -floor_div(gv[i], -uv[i]);
    for (std::size_t j = 0; j < gv.size(); ++j) {
      gv[j] -= k * uv[j];
    }
    Word rep;
    for (std::size_t j = 0; j < gv.size(); ++j) {
      if (gv[j] != 0) {
        rep.push_back({static_cast<int>(j), gv[j]});
      }
    }
    return {rep, k};
  }

  CyclicMeet FreeAbelian::cyclic_intersection(Word const& u, Word const& v) const {
    auto uv = exponent_sums(u, _alphabet.size());
    auto vv = exponent_sums(v, _alphabet.size());
    std::size_t i = 0;
    while (i < uv.size() && uv[i] == 0) {
      ++i;
    }
    if (i == uv.size() || vv[i] == 0) {
      return {};
    }
    long long d = std::gcd(uv[i], vv[i]);
    long long p = vv[i] / d, q = uv[i] / d;
    if (p < 0) {
      p = -p;
      q = -q;
    }
    for (std::size_t j = 0; j < uv.size(); ++j) {
      if (p * uv[j] != q * vv[j]) {
        return {};
      }
    }
    return {false, p, q};
  }

  CosetList
  FreeAbelian::fixed_cosets(Word const& u, Word const& y, std::size_t limit) const {
    return abelian_fixed(*this, u, y, limit);
  }

  ////////////////////////////////////////////////////////////////////////
  // Free groups
  ////////////////////////////////////////////////////////////////////////

  namespace free_words {
    void split_conjugate(Word const& w, Word& c, Word& x) {
      auto ls = letters(reduce(w));
      std::size_t i = 0, j = ls.size();
      while (j - i >= 2 && ls[i] == -ls[j - 1]) {
        ++i;
        --j;
      }
      c = from_letters(std::vector<int>(ls.begin(), ls.begin() + i));
      x = from_letters(std::vector<int>(ls.begin() + i, ls.begin() + j));
    }

    Word root(Word const& w, long long& k) {
      Word c, x;
      split_conjugate(w, c, x);
      auto        ls = letters(x);
      std::size_t n  = ls.size();
      for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) {
          continue;
        }
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) {
          ok = ls[i] == ls[i - d];
        }
        if (ok) {
          k = n == 0 ? 1 : static_cast<long long>(n / d);
          Word y = from_letters(std::vector<int>(ls.begin(), ls.begin() + d));
          return conjugate(c, y);
        }
      }
      k = 1;
      return w;
    }

    bool is_proper_power(Word const& w) {
      long long k = 1;
      root(w, k);
      return k > 1;
    }

    std::optional<Word> conjugator(Word const& a, Word const& b) {
      Word c1, x1, c2, x2;
      split_conjugate(a, c1, x1);
      split_conjugate(b, c2, x2);
      auto l1 = letters(x1), l2 = letters(x2);
      if (l1.size() != l2.size()) {
        return std::nullopt;
      }
      std::size_t n = l1.size();
      for (std::size_t i = 0; i < std::max<std::size_t>(n, 1); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
          ok = l2[j] == l1[(i + j) % n];
        }
        if (ok) {
          Word s = from_letters(std::vector<int>(l1.begin(), l1.begin() + i));
          return concat(concat(c1, s), inverse(c2));
        }
      }
      return std::nullopt;
    }
  }  // namespace free_words

  FreeGroup::FreeGroup(std::vector<std::string> names)
      : Group(Alphabet(std::move(names))) {}

  std::vector<long long> FreeGroup::abelianize(Word const& w) const {
    return exponent_sums(w, _alphabet.size());
  }

  FinitePresentation FreeGroup::presentation() const {
    return {_alphabet, {}};
  }

  // The shortest, then shortlex-least, element of g<u>.
  CosetSplit FreeGroup::cyclic_coset_impl(Word const& u, Word const& g) const {
    Word c, x;
    free_words::split_conjugate(u, c, x);
    Word      ng = reduce(g);
    long long K  = 2 * length(ng) / length(x) + 1;
    Word      cur  = concat(ng, power(u, -K));
    Word      best = cur;
    long long bestk = -K;
    for (long long k = -K + 1; k <= K; ++k) {
      cur = concat(cur, u);
      if (shortlex_less(cur, best)) {
        best  = cur;
        bestk = k;
      }
    }
    return {best, -bestk};
  }

  CyclicMeet FreeGroup::cyclic_intersection(Word const& u, Word const& v) const {
    long long a = 1, b = 1;
    Word      ru = free_words::root(reduce(u), a);
    Word      rv = free_words::root(reduce(v), b);
    long long l  = std::lcm(a, b);
    if (ru == rv) {
      return {false, l / a, l / b};
    }
    if (ru == inverse(rv)) {
      return {false, l / a, -(l / b)};
    }
    return {};
  }

  CosetList
  FreeGroup::fixed_cosets(Word const& u, Word const& y, std::size_t limit) const {
    Word ny = reduce(y);
    if (ny.empty()) {
      return coset_reps(u, limit);
    }
    long long a = 1, b = 1;
    Word      r = free_words::root(reduce(u), a);
    free_words::root(ny, b);
    CosetList out;
    if (b % a != 0) {
      return out;
    }
    for (long long j : {b / a, -(b / a)}) {
      auto z0 = free_words::conjugator(ny, power(reduce(u), j));
      if (!z0) {
        continue;
      }
      for (long long i = 0; i < a; ++i) {
        out.reps.push_back(cyclic_coset(u, concat(*z0, power(r, i))).rep);
      }
      break;
    }
    std::sort(out.reps.begin(), out.reps.end(), shortlex_less);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // GraphProductZ
  ////////////////////////////////////////////////////////////////////////

  GraphProductZ::GraphProductZ(std::vector<std::string>         names,
                               std::vector<std::pair<int, int>> commuting)
      : Group(Alphabet(std::move(names))),
        _commute(_alphabet.size(), std::vector<bool>(_alphabet.size(), false)) {
    for (auto [a, b] : commuting) {
      _commute.at(a).at(b) = true;
      _commute.at(b).at(a) = true;
    }
  }

  std::vector<std::pair<int, int>> GraphProductZ::commuting_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t a = 0; a < _commute.size(); ++a) {
      for (std::size_t b = a + 1; b < _commute.size(); ++b) {
        if (_commute[a][b]) {
          out.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
      }
    }
    return out;
  }

  Word GraphProductZ::normalize(Word const& w) const {
    // reduce as a trace: merge each syllable into the latest syllable of
    // the same generator that it can be shuffled next to
    Word red;
    for (auto const& s : reduce(w)) {
      std::size_t p     = red.size();
      bool        found = false;
      while (p > 0) {
        auto const& t = red[p - 1];
        if (t.gen == s.gen) {
          found = true;
          break;
        }
        if (!commute(t.gen, s.gen)) {
          break;
        }
        --p;
      }
      if (found) {
        red[p - 1].exp += s.exp;
        if (red[p - 1].exp == 0) {
          red.erase(red.begin() + (p - 1));
        }
      } else {
        red.push_back(s);
      }
    }
    // lexicographic normal form: repeatedly emit the least available syllable
    Word out;
    while (!red.empty()) {
      std::size_t best = red.size();
      for (std::size_t i = 0; i < red.size(); ++i) {
        bool avail = true;
        for (std::size_t j = 0; j < i && avail; ++j) {
          avail = commute(red[j].gen, red[i].gen);
        }
        if (avail && (best == red.size() || red[i].gen < red[best].gen)) {
          best = i;
        }
      }
      out = concat(out, Word{red[best]});
      red.erase(red.begin() + best);
    }
    return out;
  }

  std::vector<long long> GraphProductZ::abelianize(Word const& w) const {
    return exponent_sums(w, _alphabet.size());
  }

  FinitePresentation GraphProductZ::presentation() const {
    FinitePresentation p{_alphabet, {}};
    for (auto [a, b] : commuting_pairs()) {
      p.relators.push_back(commutator(generator(a), generator(b)));
    }
    return p;
  }

  bool GraphProductZ::is_abelian() const {
    return commuting_pairs().size() * 2 == _alphabet.size() * (_alphabet.size() - 1)
           || _alphabet.size() <= 1;
  }

  CosetSplit GraphProductZ::cyclic_coset_impl(Word const& u, Word const& g) const {
    return generator_power_coset(u, g);
  }

  CosetSplit GraphProductZ::generator_coset(int x, Word const& g) const {
    Word n = normalize(g);
    // exponent of the x-syllable that shuffles to the right end
    for (std::size_t p = n.size(); p > 0; --p) {
      if (n[p - 1].gen == x) {
        long long e = n[p - 1].exp;
        return {normalize(concat(n, generator(x, -e))), e};
      }
      if (!commute(n[p - 1].gen, x)) {
        break;
      }
    }
    return {n, 0};
  }

  ////////////////////////////////////////////////////////////////////////
  // DirectProduct
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::string> joined_names(std::vector<GroupPtr> const& fs) {
      std::vector<std::string> names;
      for (auto const& f : fs) {
        for (auto const& n : f->alphabet().names()) {
          if (std::find(names.begin(), names.end(), n) != names.end()) {
            throw Error(ErrorCode::input_error,
                        "generator '" + n + "' appears in two direct factors");
          }
          names.push_back(n);
        }
      }
      return names;
    }
  }  // namespace

  DirectProduct::DirectProduct(std::vector<GroupPtr> factors)
      : Group(Alphabet(joined_names(factors))), _factors(std::move(factors)) {
    int g = 0;
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      _global.emplace_back();
      for (std::size_t j = 0; j < _factors[i]->alphabet().size(); ++j) {
        _owner.emplace_back(static_cast<int>(i), static_cast<int>(j));
        _global.back().push_back(g++);
      }
    }
  }

  int DirectProduct::factor_of(Word const& w) const {
    int f = w.empty() ? 0 : _owner[w[0].gen].first;
    for (auto const& s : w) {
      if (_owner[s.gen].first != f) {
        return -1;
      }
    }
    return f;
  }

  Word DirectProduct::to_factor(std::size_t i, Word const& w) const {
    Word out;
    for (auto const& s : w) {
      if (_owner[s.gen].first == static_cast<int>(i)) {
        out = concat(out, Word{{_owner[s.gen].second, s.exp}});
      }
    }
    return out;
  }

  Word DirectProduct::from_factor(std::size_t i, Word const& w) const {
    return relabel(w, _global[i]);
  }

  Word DirectProduct::normalize(Word const& w) const {
    Word out;
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      out = concat(out, from_factor(i, _factors[i]->normalize(to_factor(i, w))));
    }
    return out;
  }

  std::vector<long long> DirectProduct::abelianize(Word const& w) const {
    std::vector<long long> out;
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      auto v = _factors[i]->abelianize(to_factor(i, w));
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  }

  FinitePresentation DirectProduct::presentation() const {
    FinitePresentation p{_alphabet, {}};
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      for (auto const& r : _factors[i]->presentation().relators) {
        p.relators.push_back(from_factor(i, r));
      }
    }
    for (std::size_t a = 0; a < _owner.size(); ++a) {
      for (std::size_t b = a + 1; b < _owner.size(); ++b) {
        if (_owner[a].first != _owner[b].first) {
          p.relators.push_back(commutator(generator(static_cast<int>(a)),
                                          generator(static_cast<int>(b))));
        }
      }
    }
    return p;
  }

  bool DirectProduct::is_abelian() const {
    return std::all_of(_factors.begin(), _factors.end(), [](GroupPtr const& f) {
      return f->is_abelian();
    });
  }

  CosetSplit DirectProduct::cyclic_coset_impl(Word const& u, Word const& g) const {
    int f = factor_of(u);
    if (f < 0) {
      return Group::cyclic_coset_impl(u, g);
    }
    auto split = _factors[f]->cyclic_coset(to_factor(f, u), to_factor(f, g));
    Word rep;
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      Word part = static_cast<int>(i) == f ? split.rep
                                           : _factors[i]->normalize(to_factor(i, g));
      rep       = concat(rep, from_factor(i, part));
    }
    return {rep, split.exp};
  }

  CyclicMeet DirectProduct::cyclic_intersection(Word const& u, Word const& v) const {
    int fu = factor_of(u), fv = factor_of(v);
    if (fu < 0 || fv < 0) {
      return Group::cyclic_intersection(u, v);
    }
    if (fu != fv) {
      return {};
    }
    return _factors[fu]->cyclic_intersection(to_factor(fu, u), to_factor(fu, v));
  }

}  // namespace powalt
