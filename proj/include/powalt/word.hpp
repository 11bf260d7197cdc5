#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace powalt {

  struct Syllable {
    int       gen;
    long long exp;

    bool operator==(Syllable const&) const = default;
  };

  // A product of syllables gen^exp.  Functions here keep words freely
  // reduced: exponents nonzero and adjacent generators distinct.
  using Word = std::vector<Syllable>;

  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const noexcept {
      return _names.size();
    }
    std::string const& name(int gen) const {
      return _names.at(gen);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    // -1 if absent
    int index(std::string_view name) const;
    bool contains(std::string_view name) const {
      return index(name) >= 0;
    }

   private:
    std::vector<std::string> _names;
  };

  Word      reduce(Word w);
  Word      inverse(Word const& w);
  Word      concat(Word const& a, Word const& b);
  Word      concat(std::initializer_list<Word const*> parts);
  Word      power(Word const& w, long long k);
  Word      commutator(Word const& a, Word const& b);
  Word      conjugate(Word const& x, Word const& w);  // x w x^-1
  long long length(Word const& w);
  Word      generator(int gen, long long exp = 1);

  // Letters as signed integers: +(gen+1) or -(gen+1).
  std::vector<int> letters(Word const& w);
  Word             from_letters(std::vector<int> const& ls);

  // Shortlex on letters, generator order first, positive before inverse.
  bool shortlex_less(Word const& a, Word const& b);

  // Grammar:
  //   word    := factor (('*')? factor)*  |  '1'  |  empty
  //   factor  := atom ('^' int)?
  //   atom    := ident | '(' word ')' | '[' word ',' word ']'
  //   int     := '-'? digits
  // An identifier that is not a generator name is split greedily into
  // generator names, so "aba" means a*b*a over the alphabet {a, b}.
  Word        parse_word(std::string_view text, Alphabet const& alphabet);
  std::string format_word(Word const& w, Alphabet const& alphabet);

  // Relabel generators through a map (old index -> new index).
  Word relabel(Word const& w, std::vector<int> const& map);

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

}  // namespace powalt
