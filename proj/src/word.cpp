#include "powalt/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "powalt/error.hpp"

namespace powalt {

  std::string code_name(ErrorCode code) {
    switch (code) {
      case ErrorCode::parse_error:
        return "parse-error";
      case ErrorCode::input_error:
        return "input-error";
      case ErrorCode::budget_exceeded:
        return "expansion-budget-exceeded";
      case ErrorCode::unsupported_word_problem:
        return "unsupported-word-problem";
      case ErrorCode::unsupported_membership:
        return "unsupported-membership";
      case ErrorCode::not_elliptic:
        return "not-elliptic";
      case ErrorCode::not_loxodromic:
        return "not-loxodromic";
      case ErrorCode::no_intersection_oracle:
        return "no-intersection-oracle";
      case ErrorCode::not_a_stabiliser:
        return "not-a-stabiliser";
      case ErrorCode::cyclic_fact_dependency:
        return "cyclic-fact-dependency";
    }
    return "error";
  }

  Alphabet::Alphabet(std::vector<std::string> names) : _names(std::move(names)) {}

  int Alphabet::index(std::string_view name) const {
    for (std::size_t i = 0; i < _names.size(); ++i) {
      if (_names[i] == name) {
        return static_cast<int>(i);
      }
    }
    return -1;
  }

  namespace {
    long long add_exp(long long a, long long b) {
      long long r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw Error(ErrorCode::budget_exceeded, "exponent overflow");
      }
      return r;
    }
  }  // namespace

  Word reduce(Word w) {
    Word out;
    out.reserve(w.size());
    for (auto const& s : w) {
      if (s.exp == 0) {
        continue;
      }
      if (!out.empty() && out.back().gen == s.gen) {
        out.back().exp = add_exp(out.back().exp, s.exp);
        if (out.back().exp == 0) {
          out.pop_back();
        }
      } else {
        out.push_back(s);
      }
    }
    return out;
  }

  Word inverse(Word const& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& s : out) {
      s.exp = -s.exp;
    }
    return out;
  }

  Word concat(Word const& a, Word const& b) {
    Word out = a;
    for (auto const& s : b) {
      if (!out.empty() && out.back().gen == s.gen) {
        out.back().exp = add_exp(out.back().exp, s.exp);
        if (out.back().exp == 0) {
          out.pop_back();
        }
      } else if (s.exp != 0) {
        out.push_back(s);
      }
    }
    return out;
  }

  Word concat(std::initializer_list<Word const*> parts) {
    Word out;
    for (auto const* p : parts) {
      out = concat(out, *p);
    }
    return out;
  }

  Word power(Word const& w, long long k) {
    Word base = k < 0 ? inverse(w) : w;
    k         = k < 0 ? -k : k;
    if (base.size() == 1) {
      long long e;
      if (__builtin_mul_overflow(base[0].exp, k, &e)) {
        throw Error(ErrorCode::budget_exceeded, "exponent overflow");
      }
      return k == 0 ? Word{} : Word{{base[0].gen, e}};
    }
    Word out;
    for (long long i = 0; i < k; ++i) {
      out = concat(out, base);
    }
    return out;
  }

  Word commutator(Word const& a, Word const& b) {
    Word ia = inverse(a), ib = inverse(b);
    return concat({&a, &b, &ia, &ib});
  }

  Word conjugate(Word const& x, Word const& w) {
    return concat(concat(x, w), inverse(x));
  }

  long long length(Word const& w) {
    long long n = 0;
    for (auto const& s : w) {
      n += std::llabs(s.exp);
    }
    return n;
  }

  Word generator(int gen, long long exp) {
    return exp == 0 ? Word{} : Word{{gen, exp}};
  }

  std::vector<int> letters(Word const& w) {
    std::vector<int> out;
    for (auto const& s : w) {
      int l = s.exp > 0 ? s.gen + 1 : -(s.gen + 1);
      for (long long i = 0; i < std::llabs(s.exp); ++i) {
        out.push_back(l);
      }
    }
    return out;
  }

  Word from_letters(std::vector<int> const& ls) {
    Word out;
    for (int l : ls) {
      out = concat(out, Word{{std::abs(l) - 1, l > 0 ? 1 : -1}});
    }
    return out;
  }

  namespace {
    // positive letters of a generator sort before its inverse
    int letter_key(int l) {
      return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0);
    }
  }  // namespace

  bool shortlex_less(Word const& a, Word const& b) {
    auto la = length(a), lb = length(b);
    if (la != lb) {
      return la < lb;
    }
    auto xa = letters(a), xb = letters(b);
    return std::lexicographical_compare(
        xa.begin(), xa.end(), xb.begin(), xb.end(), [](int x, int y) {
          return letter_key(x) < letter_key(y);
        });
  }

  Word relabel(Word const& w, std::vector<int> const& map) {
    Word out;
    for (auto const& s : w) {
      out = concat(out, Word{{map.at(s.gen), s.exp}});
    }
    return out;
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto const& s : w) {
      h ^= static_cast<std::size_t>(s.gen) + 0x9e3779b97f4a7c15ull + (h << 6)
           + (h >> 2);
      h ^= static_cast<std::size_t>(s.exp) + 0x9e3779b97f4a7c15ull + (h << 6)
           + (h >> 2);
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class WordParser {
     public:
      WordParser(std::string_view text, Alphabet const& alphabet)
          : _text(text), _alphabet(alphabet) {}

      Word parse() {
        skip_space();
        if (at_end()) {
          return {};
        }
        Word w = word();
        skip_space();
        if (!at_end()) {
          fail("unexpected token");
        }
        return w;
      }

     private:
      std::string_view _text;
      Alphabet const&  _alphabet;
      std::size_t      _pos = 0;

      bool at_end() const {
        return _pos >= _text.size();
      }
      char peek() const {
        return at_end() ? '\0' : _text[_pos];
      }
      void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
          ++_pos;
        }
      }
      [[noreturn]] void fail(std::string const& msg) const {
        std::string tok = at_end() ? "<end>" : std::string(1, peek());
        throw ParseError(tok, _pos, msg);
      }

      bool starts_factor() const {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_'
               || c == '(' || c == '[' || c == '1';
      }

      Word word() {
        Word w = factor();
        while (true) {
          skip_space();
          if (peek() == '*') {
            ++_pos;
            skip_space();
            w = concat(w, factor());
          } else if (starts_factor()) {
            w = concat(w, factor());
          } else {
            return w;
          }
        }
      }

      Word factor() {
        Word a = atom();
        skip_space();
        if (peek() == '^') {
          ++_pos;
          skip_space();
          a = power(a, integer());
        }
        return a;
      }

      long long integer() {
        std::size_t start = _pos;
        bool        neg   = false;
        if (peek() == '-' || peek() == '+') {
          neg = peek() == '-';
          ++_pos;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("expected integer exponent");
        }
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          v = v * 10 + (peek() - '0');
          if (v > (1ll << 50)) {
            _pos = start;
            fail("exponent out of range");
          }
          ++_pos;
        }
        return neg ? -v : v;
      }

      Word atom() {
        skip_space();
        char c = peek();
        if (c == '(') {
          ++_pos;
          skip_space();
          Word w = peek() == ')' ? Word{} : word();
          skip_space();
          if (peek() != ')') {
            fail("expected ')'");
          }
          ++_pos;
          return w;
        }
        if (c == '[') {
          ++_pos;
          skip_space();
          Word x = word();
          skip_space();
          if (peek() != ',') {
            fail("expected ','");
          }
          ++_pos;
          skip_space();
          Word y = word();
          skip_space();
          if (peek() != ']') {
            fail("expected ']'");
          }
          ++_pos;
          return commutator(x, y);
        }
        if (c == '1') {
          ++_pos;
          return {};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          std::size_t start = _pos;
          while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
            ++_pos;
          }
          return identifier(_text.substr(start, _pos - start), start);
        }
        fail("expected generator");
      }

      Word identifier(std::string_view id, std::size_t start) {
        int g = _alphabet.index(id);
        if (g >= 0) {
          return {{g, 1}};
        }
        // greedy longest match against generator names
        Word        w;
        std::size_t i = 0;
        while (i < id.size()) {
          int         best     = -1;
          std::size_t best_len = 0;
          for (std::size_t k = 0; k < _alphabet.size(); ++k) {
            auto const& n = _alphabet.name(static_cast<int>(k));
            if (n.size() > best_len && id.substr(i, n.size()) == n) {
              best     = static_cast<int>(k);
              best_len = n.size();
            }
          }
          if (best < 0) {
            throw ParseError(std::string(id), start, "unknown generator");
          }
          w = concat(w, Word{{best, 1}});
          i += best_len;
        }
        return w;
      }
    };
  }  // namespace

  Word parse_word(std::string_view text, Alphabet const& alphabet) {
    return WordParser(text, alphabet).parse();
  }

  std::string format_word(Word const& w, Alphabet const& alphabet) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out += '*';
      }
      out += alphabet.name(w[i].gen);
      if (w[i].exp != 1) {
        out += '^' + std::to_string(w[i].exp);
      }
    }
    return out;
  }

}  // namespace powalt
