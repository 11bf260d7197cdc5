#include "powalt/artin_graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "powalt/error.hpp"

namespace powalt {

  using nlohmann::json;

  namespace {
    std::pair<std::string, std::string> key(std::string a, std::string b) {
      if (b < a) {
        std::swap(a, b);
      }
      return {a, b};
    }
  }  // namespace

  int PresentationGraph::add_vertex(std::string const& name) {
    auto it = std::lower_bound(_names.begin(), _names.end(), name);
    if (it == _names.end() || *it != name) {
      it = _names.insert(it, name);
    }
    return static_cast<int>(it - _names.begin());
  }

  void PresentationGraph::add_edge(std::string const& u, std::string const& v, int label) {
    if (u == v) {
      throw Error(ErrorCode::input_error, "loop at vertex " + u);
    }
    if (label < 2) {
      throw Error(ErrorCode::input_error,
                  "label " + std::to_string(label) + " on " + u + " -- " + v + " is below 2");
    }
    auto k = key(u, v);
    if (_labels.count(k)) {
      throw Error(ErrorCode::input_error, "duplicate edge " + u + " -- " + v);
    }
    add_vertex(u);
    add_vertex(v);
    _labels[k] = label;
  }

  int PresentationGraph::index(std::string_view name) const {
    auto it = std::lower_bound(_names.begin(), _names.end(), name);
    if (it == _names.end() || *it != name) {
      return -1;
    }
    return static_cast<int>(it - _names.begin());
  }

  int PresentationGraph::label(int u, int v) const {
    if (u == v) {
      return 0;
    }
    auto it = _labels.find(key(_names.at(u), _names.at(v)));
    return it == _labels.end() ? 0 : it->second;
  }

  std::vector<std::tuple<int, int, int>> PresentationGraph::edges() const {
    std::vector<std::tuple<int, int, int>> out;
    for (auto const& [k, m] : _labels) {
      out.emplace_back(index(k.first), index(k.second), m);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool PresentationGraph::complete() const {
    std::size_t n = size();
    return _labels.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
  }

  PresentationGraph PresentationGraph::induced(std::vector<int> const& subset) const {
    PresentationGraph g;
    for (int v : subset) {
      g.add_vertex(name(v));
    }
    for (std::size_t i = 0; i < subset.size(); ++i) {
      for (std::size_t j = i + 1; j < subset.size(); ++j) {
        if (int m = label(subset[i], subset[j])) {
          g.add_edge(name(subset[i]), name(subset[j]), m);
        }
      }
    }
    return g;
  }

  std::vector<int> PresentationGraph::indices(std::vector<std::string> const& names) const {
    std::vector<int> out;
    for (auto const& n : names) {
      int i = index(n);
      if (i < 0) {
        throw Error(ErrorCode::input_error, "unknown vertex " + n);
      }
      out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Token {
      enum Kind { ident, number, symbol, end } kind;
      std::string text;
      std::size_t pos;
    };

    class DotLexer {
     public:
      explicit DotLexer(std::string_view s) : _s(s) {}

      Token next() {
        skip();
        if (_i >= _s.size()) {
          return {Token::end, "<end>", _i};
        }
        std::size_t start = _i;
        char        c     = _s[_i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          while (_i < _s.size()
                 && (std::isalnum(static_cast<unsigned char>(_s[_i])) || _s[_i] == '_')) {
            ++_i;
          }
          return {Token::ident, std::string(_s.substr(start, _i - start)), start};
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
          if (c == '-' && _i + 1 < _s.size() && _s[_i + 1] == '-') {
            _i += 2;
            return {Token::symbol, "--", start};
          }
          ++_i;
          while (_i < _s.size() && std::isdigit(static_cast<unsigned char>(_s[_i]))) {
            ++_i;
          }
          return {Token::number, std::string(_s.substr(start, _i - start)), start};
        }
        if (std::string_view("{}[]=;,").find(c) != std::string_view::npos) {
          ++_i;
          return {Token::symbol, std::string(1, c), start};
        }
        throw ParseError(std::string(1, c), start, "unexpected character");
      }

     private:
      std::string_view _s;
      std::size_t      _i = 0;

      void skip() {
        while (_i < _s.size()) {
          char c = _s[_i];
          if (std::isspace(static_cast<unsigned char>(c))) {
            ++_i;
          } else if (c == '#' || (c == '/' && _i + 1 < _s.size() && _s[_i + 1] == '/')) {
            while (_i < _s.size() && _s[_i] != '\n') {
              ++_i;
            }
          } else {
            break;
          }
        }
      }
    };

    class DotParser {
     public:
      explicit DotParser(std::string_view s) : _lex(s) {
        advance();
      }

      PresentationGraph parse() {
        expect_ident("graph");
        if (_tok.kind == Token::ident) {
          advance();
        }
        expect("{");
        PresentationGraph g;
        while (!(_tok.kind == Token::symbol && _tok.text == "}")) {
          statement(g);
        }
        advance();
        if (_tok.kind != Token::end) {
          fail("trailing input");
        }
        return g;
      }

     private:
      DotLexer _lex;
      Token    _tok;

      void advance() {
        _tok = _lex.next();
      }
      [[noreturn]] void fail(std::string const& msg) {
        throw ParseError(_tok.text, _tok.pos, msg);
      }
      void expect(std::string const& sym) {
        if (_tok.kind != Token::symbol || _tok.text != sym) {
          fail("expected '" + sym + "'");
        }
        advance();
      }
      void expect_ident(std::string const& word) {
        if (_tok.kind != Token::ident || _tok.text != word) {
          fail("expected '" + word + "'");
        }
        advance();
      }
      std::string ident() {
        if (_tok.kind != Token::ident) {
          fail("expected a vertex name");
        }
        std::string s = _tok.text;
        advance();
        return s;
      }

      void statement(PresentationGraph& g) {
        if (_tok.kind == Token::end) {
          fail("unterminated graph body");
        }
        std::string u = ident();
        if (_tok.kind == Token::symbol && _tok.text == "--") {
          advance();
          std::size_t vpos = _tok.pos;
          std::string v    = ident();
          if (!(_tok.kind == Token::symbol && _tok.text == "[")) {
            fail("edge " + u + " -- " + v + " needs a [label=m] attribute");
          }
          advance();
          expect_ident("label");
          expect("=");
          if (_tok.kind != Token::number) {
            fail("expected an integer label");
          }
          Token num = _tok;
          advance();
          expect("]");
          int m = 0;
          try {
            m = std::stoi(num.text);
          } catch (std::exception const&) {
            throw ParseError(num.text, num.pos, "label out of range");
          }
          if (m < 2) {
            throw ParseError(num.text, num.pos, "label must be at least 2");
          }
          if (u == v) {
            throw ParseError(v, vpos, "loops are not allowed");
          }
          if (g.index(u) >= 0 && g.index(v) >= 0 && g.adjacent(g.index(u), g.index(v))) {
            throw ParseError(v, vpos, "duplicate edge");
          }
          g.add_edge(u, v, m);
        } else {
          g.add_vertex(u);
        }
        if (_tok.kind == Token::symbol && _tok.text == ";") {
          advance();
        }
      }
    };

  }  // namespace

  PresentationGraph parse_graph_dot(std::string_view text) {
    return DotParser(text).parse();
  }

  PresentationGraph graph_from_json(json const& j) {
    if (!j.is_object()) {
      throw Error(ErrorCode::input_error, "graph document must be an object");
    }
    if (j.contains("schema_version") && j.at("schema_version") != 1) {
      throw Error(ErrorCode::input_error, "unsupported graph schema_version");
    }
    PresentationGraph g;
    try {
      for (auto const& v : j.value("vertices", json::array())) {
        g.add_vertex(v.get<std::string>());
      }
      for (auto const& e : j.value("edges", json::array())) {
        g.add_edge(e.at("u").get<std::string>(),
                   e.at("v").get<std::string>(),
                   e.at("label").get<int>());
      }
    } catch (json::exception const& e) {
      throw Error(ErrorCode::input_error, std::string("malformed graph: ") + e.what());
    }
    return g;
  }

  json graph_to_json(PresentationGraph const& g) {
    json j = {{"schema_version", 1}, {"vertices", g.vertices()}, {"edges", json::array()}};
    for (auto [u, v, m] : g.edges()) {
      j["edges"].push_back({{"u", g.name(u)}, {"v", g.name(v)}, {"label", m}});
    }
    return j;
  }

  PresentationGraph parse_graph(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
      json j;
      try {
        j = json::parse(text);
      } catch (json::parse_error const& e) {
        std::size_t at = e.byte > 0 ? std::min(e.byte - 1, text.size() - 1) : 0;
        throw ParseError(std::string(text.substr(at, 1)), at, "malformed JSON graph");
      }
      return graph_from_json(j);
    }
    return parse_graph_dot(text);
  }

  PresentationGraph load_graph(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorCode::input_error, "cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::vector<std::vector<int>> components(std::size_t                  n,
                                             std::vector<int> const&      alive,
                                             std::function<bool(int, int)> adj) {
      std::vector<int>              comp(n, -1);
      std::vector<std::vector<int>> out;
      for (int s : alive) {
        if (comp[s] >= 0) {
          continue;
        }
        out.emplace_back();
        std::vector<int> stack = {s};
        comp[s]                = static_cast<int>(out.size()) - 1;
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          out.back().push_back(v);
          for (int w : alive) {
            if (comp[w] < 0 && adj(v, w)) {
              comp[w] = comp[s];
              stack.push_back(w);
            }
          }
        }
        std::sort(out.back().begin(), out.back().end());
      }
      return out;
    }

    // Type of a connected Coxeter diagram, "" if infinite.
    std::string connected_type(PresentationGraph const& g, std::vector<int> const& c) {
      std::size_t n = c.size();
      if (n == 1) {
        return "A1";
      }
      auto m = [&](int u, int v) {
        return g.label(u, v);
      };
      std::vector<std::tuple<int, int, int>> es;
      std::map<int, int>                     deg;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (m(c[i], c[j]) >= 3) {
            es.emplace_back(c[i], c[j], m(c[i], c[j]));
            ++deg[c[i]];
            ++deg[c[j]];
          }
        }
      }
      if (n == 2) {
        int l = std::get<2>(es[0]);
        switch (l) {
          case 3: return "A2";
          case 4: return "B2";
          case 6: return "G2";
          default: return "I2(" + std::to_string(l) + ")";
        }
      }
      if (es.size() != n - 1) {
        return "";
      }
      int maxdeg = 0;
      for (auto [v, d] : deg) {
        maxdeg = std::max(maxdeg, d);
      }
      std::string num = std::to_string(n);
      if (maxdeg <= 2) {
        // order the path
        int start = -1;
        for (int v : c) {
          if (deg[v] == 1) {
            start = v;
            break;
          }
        }
        std::vector<int> labels;
        int              prev = -1, cur = start;
        for (std::size_t k = 0; k + 1 < n; ++k) {
          for (int w : c) {
            if (w != prev && w != cur && m(cur, w) >= 3) {
              labels.push_back(m(cur, w));
              prev = cur;
              cur  = w;
              break;
            }
          }
        }
        if (labels.front() != 3 && labels.back() == 3) {
          std::reverse(labels.begin(), labels.end());
        }
        int big = 0, where = -1;
        for (std::size_t k = 0; k < labels.size(); ++k) {
          if (labels[k] > 3) {
            ++big;
            where = static_cast<int>(k);
          }
        }
        int last = static_cast<int>(labels.size()) - 1;
        if (big == 0) {
          return "A" + num;
        }
        if (big > 1) {
          return "";
        }
        int l = labels[where];
        if (l == 4 && where == last) {
          return "B" + num;
        }
        if (l == 4 && n == 4 && where == 1) {
          return "F4";
        }
        if (l == 5 && where == last && (n == 3 || n == 4)) {
          return "H" + num;
        }
        return "";
      }
      if (maxdeg > 3) {
        return "";
      }
      for (auto const& e : es) {
        if (std::get<2>(e) != 3) {
          return "";
        }
      }
      int branch = -1, branches = 0;
      for (auto [v, d] : deg) {
        if (d == 3) {
          branch = v;
          ++branches;
        }
      }
      if (branches != 1) {
        return "";
      }
      std::vector<int> arms;
      for (int w : c) {
        if (m(branch, w) < 3) {
          continue;
        }
        int len = 1, prev = branch, cur = w;
        for (bool more = true; more;) {
          more = false;
          for (int x : c) {
            if (x != prev && x != cur && m(cur, x) >= 3) {
              prev = cur;
              cur  = x;
              ++len;
              more = true;
              break;
            }
          }
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) {
        return "D" + num;
      }
      if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) {
        return "E" + num;
      }
      return "";
    }

    std::vector<std::vector<int>> maximal_cliques(PresentationGraph const& g) {
      std::vector<std::vector<int>>                 out;
      std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> bk =
          [&](std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
            if (p.empty() && x.empty()) {
              out.push_back(r);
              std::sort(out.back().begin(), out.back().end());
              return;
            }
            auto cand = p;
            for (int v : cand) {
              std::vector<int> np, nx;
              for (int w : p) {
                if (g.adjacent(v, w)) {
                  np.push_back(w);
                }
              }
              for (int w : x) {
                if (g.adjacent(v, w)) {
                  nx.push_back(w);
                }
              }
              r.push_back(v);
              bk(r, np, nx);
              r.pop_back();
              p.erase(std::find(p.begin(), p.end(), v));
              x.push_back(v);
            }
          };
      std::vector<int> all(g.size());
      std::iota(all.begin(), all.end(), 0);
      std::vector<int> r;
      bk(r, all, {});
      std::sort(out.begin(), out.end());
      return out;
    }

  }  // namespace

  std::string spherical_type(PresentationGraph const& g) {
    if (g.size() == 0) {
      return "trivial";
    }
    if (!g.complete()) {
      return "";
    }
    std::vector<int> all(g.size());
    std::iota(all.begin(), all.end(), 0);
    auto comps = components(g.size(), all, [&](int u, int v) {
      return g.label(u, v) >= 3;
    });
    std::string out;
    for (auto const& c : comps) {
      std::string t = connected_type(g, c);
      if (t.empty()) {
        return "";
      }
      out += (out.empty() ? "" : " x ") + t;
    }
    return out;
  }

  ClassificationReport classify_graph(PresentationGraph const& g) {
    ClassificationReport r;
    std::size_t          n = g.size();
    auto                 E = g.edges();
    r.dihedral             = n == 2;
    r.even                 = std::all_of(E.begin(), E.end(), [](auto const& e) {
      return std::get<2>(e) % 2 == 0;
    });
    r.free_of_infinity     = g.complete();
    r.triangle_free        = true;
    r.two_dimensional      = true;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          int x = g.label(a, b), y = g.label(b, c), z = g.label(a, c);
          if (x && y && z) {
            r.triangle_free = false;
          }
          // 1/x + 1/y + 1/z <= 1 with 1/0 read as 0
          long long num = 0, den = 1;
          for (int m : {x, y, z}) {
            if (m) {
              num = num * m + den;
              den *= m;
            }
          }
          if (num > den) {
            r.two_dimensional = false;
          }
        }
      }
    }
    r.two_two_free = true;
    for (std::size_t i = 0; i < E.size(); ++i) {
      for (std::size_t j = i + 1; j < E.size(); ++j) {
        auto [a, b, m1] = E[i];
        auto [c, d, m2] = E[j];
        bool share      = a == c || a == d || b == c || b == d;
        if (share && m1 == 2 && m2 == 2) {
          r.two_two_free = false;
        }
      }
    }
    r.spherical_type = spherical_type(g);
    r.spherical      = !r.spherical_type.empty();
    r.fc_type        = true;
    for (auto const& c : maximal_cliques(g)) {
      if (spherical_type(g.induced(c)).empty()) {
        r.fc_type = false;
      }
    }

    if (r.two_dimensional && r.two_two_free) {
      r.intersection_property = {"by-rule", "two-dimensional and (2,2)-free"};
    } else if (r.even && r.fc_type) {
      r.intersection_property = {"by-rule", "even and FC-type"};
    } else {
      r.intersection_property = {"unproven", "conjectured for all Artin groups"};
    }
    if (r.fc_type) {
      r.normaliser_property = {"by-rule", "FC-type"};
    } else if (r.two_dimensional) {
      r.normaliser_property = {"by-rule", "two-dimensional"};
    } else {
      r.normaliser_property = {"unproven", "conjectured for all Artin groups"};
    }
    if (r.two_two_free && r.triangle_free) {
      r.hyperbolic_type = {"by-rule", "(2,2)-free and triangle-free"};
    } else {
      r.hyperbolic_type = {"undetermined", "only the (2,2)-free triangle-free criterion is implemented"};
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Exponents
  ////////////////////////////////////////////////////////////////////////

  long long dihedral_index(int m) {
    return m % 2 == 0 ? m / 2 : 2LL * m;
  }

  ExponentReport uniform_exponent(PresentationGraph const& g) {
    ExponentReport r;
    for (auto [u, v, m] : g.edges()) {
      long long mp = dihedral_index(m);
      r.edges.emplace_back(g.name(u), g.name(v), m, mp);
      r.N = std::lcm(r.N, mp);
    }
    r.adjusted = r.N;
    while (r.adjusted < 3) {
      r.adjusted += r.N;
    }
    auto c    = classify_graph(g);
    r.covered = c.two_two_free && c.triangle_free;
    if (!r.covered) {
      r.notes.push_back("warning: graph is not (2,2)-free and triangle-free; the exponent "
                        "formula is only known to hold for such graphs");
    }
    if (r.N == 2) {
      r.notes.push_back("N = 2: proved exponent is 4; exponent 2 is expected but unproved "
                        "(experiment suggestion, not asserted)");
    }
    if (r.N < 3) {
      r.notes.push_back("adjusted exponent is the smallest multiple of N that is at least 3");
    }
    r.notes.push_back("optimality of N is not checked by this tool");
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Visual splittings
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::string> names_of(PresentationGraph const& g, std::vector<int> vs) {
      std::sort(vs.begin(), vs.end());
      std::vector<std::string> out;
      for (int v : vs) {
        out.push_back(g.name(v));
      }
      return out;
    }
  }  // namespace

  std::vector<VisualSplitting> visual_splittings(PresentationGraph const& g) {
    std::size_t n = g.size();
    if (n > 24) {
      throw Error(ErrorCode::input_error, "splitting enumeration is limited to 24 vertices");
    }
    std::vector<VisualSplitting> out;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      std::vector<int> S, rest;
      for (std::size_t v = 0; v < n; ++v) {
        (mask >> v & 1 ? S : rest).push_back(static_cast<int>(v));
      }
      if (rest.size() < 2) {
        continue;
      }
      auto comps = components(n, rest, [&](int u, int v) {
        return g.adjacent(u, v);
      });
      if (comps.size() < 2) {
        continue;
      }
      // minimal separator: at least two components see all of S
      int full = 0;
      for (auto const& c : comps) {
        bool ok = std::all_of(S.begin(), S.end(), [&](int s) {
          return std::any_of(c.begin(), c.end(), [&](int v) {
            return g.adjacent(s, v);
          });
        });
        full += ok;
      }
      if (full < 2) {
        continue;
      }
      std::size_t k = comps.size();
      for (unsigned long side = 0; side < (1UL << (k - 1)); ++side) {
        std::vector<int> one = S, two = S;
        one.insert(one.end(), comps[0].begin(), comps[0].end());
        bool nonempty = false;
        for (std::size_t i = 1; i < k; ++i) {
          if (side >> (i - 1) & 1) {
            one.insert(one.end(), comps[i].begin(), comps[i].end());
          } else {
            two.insert(two.end(), comps[i].begin(), comps[i].end());
            nonempty = true;
          }
        }
        if (!nonempty) {
          continue;
        }
        VisualSplitting s{names_of(g, one), names_of(g, two), names_of(g, S)};
        if (s.gamma2 < s.gamma1) {
          std::swap(s.gamma1, s.gamma2);
        }
        out.push_back(std::move(s));
      }
    }
    std::sort(out.begin(), out.end(), [](VisualSplitting const& a, VisualSplitting const& b) {
      return std::make_tuple(a.gamma0.size(), std::cref(a.gamma0), std::cref(a.gamma1),
                             std::cref(a.gamma2))
           < std::make_tuple(b.gamma0.size(), std::cref(b.gamma0), std::cref(b.gamma1),
                             std::cref(b.gamma2));
    });
    return out;
  }

  std::optional<VisualSplitting> preferred_splitting(PresentationGraph const& g) {
    auto all = visual_splittings(g);
    if (all.empty()) {
      return std::nullopt;
    }
    return all.front();
  }

  ReductionNode reduction_report(PresentationGraph const& g) {
    ReductionNode node;
    node.vertices = g.vertices();
    auto c        = classify_graph(g);
    auto s        = preferred_splitting(g);
    if (!s) {
      return node;
    }
    node.leaf                  = false;
    node.split                 = *s;
    node.intersection_property = c.intersection_property;
    node.normaliser_property   = c.normaliser_property;
    node.children.push_back(reduction_report(g.induced(g.indices(s->gamma1))));
    node.children.push_back(reduction_report(g.induced(g.indices(s->gamma2))));
    return node;
  }

  std::vector<std::vector<std::string>> reduction_leaves(ReductionNode const& n) {
    if (n.leaf) {
      return {n.vertices};
    }
    std::vector<std::vector<std::string>> out;
    for (auto const& c : n.children) {
      auto l = reduction_leaves(c);
      out.insert(out.end(), l.begin(), l.end());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  namespace {
    json flag_json(Flag const& f) {
      return {{"status", f.status}, {"rule", f.rule}};
    }
  }  // namespace

  json to_json(ClassificationReport const& r) {
    return {{"dihedral", r.dihedral},
            {"even", r.even},
            {"triangle_free", r.triangle_free},
            {"two_two_free", r.two_two_free},
            {"two_dimensional", r.two_dimensional},
            {"fc_type", r.fc_type},
            {"spherical", r.spherical},
            {"spherical_type", r.spherical_type},
            {"free_of_infinity", r.free_of_infinity},
            {"intersection_property", flag_json(r.intersection_property)},
            {"normaliser_property", flag_json(r.normaliser_property)},
            {"hyperbolic_type", flag_json(r.hyperbolic_type)}};
  }

  json to_json(ExponentReport const& r) {
    json edges = json::array();
    for (auto const& [u, v, m, mp] : r.edges) {
      edges.push_back({{"u", u}, {"v", v}, {"m", m}, {"m_prime", mp}});
    }
    return {{"edges", edges},
            {"N", r.N},
            {"adjusted", r.adjusted},
            {"covered", r.covered},
            {"notes", r.notes}};
  }

  json to_json(VisualSplitting const& s) {
    return {{"gamma1", s.gamma1}, {"gamma2", s.gamma2}, {"gamma0", s.gamma0}};
  }

  json to_json(ReductionNode const& n) {
    json j = {{"vertices", n.vertices}, {"leaf", n.leaf}};
    if (!n.leaf) {
      j["split"]                 = to_json(n.split);
      j["intersection_property"] = flag_json(n.intersection_property);
      j["normaliser_property"]   = flag_json(n.normaliser_property);
      j["children"]              = json::array();
      for (auto const& c : n.children) {
        j["children"].push_back(to_json(c));
      }
    }
    return j;
  }

}  // namespace powalt
