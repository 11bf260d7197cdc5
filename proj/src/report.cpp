#include "powalt/report.hpp"

namespace powalt {

  using nlohmann::json;

  json make_report(std::string const&              command,
                   std::string const&              status,
                   json                            result,
                   std::vector<std::string> const& notes) {
    return {{"schema_version", 1},
            {"command", command},
            {"status", status},
            {"result", std::move(result)},
            {"notes", notes}};
  }

  namespace {
    std::string scalar(json const& j) {
      if (j.is_string()) {
        return j.get<std::string>();
      }
      return j.dump();
    }

    bool leaf(json const& j) {
      return !j.is_structured() || j.empty();
    }

    std::string leaf_text(json const& j) {
      if (j.is_array() && j.empty()) {
        return "[]";
      }
      if (j.is_object() && j.empty()) {
        return "{}";
      }
      return scalar(j);
    }

    void render(json const& j, std::size_t indent, std::string& out) {
      std::string pad(indent, ' ');
      if (j.is_object()) {
        for (auto const& [k, v] : j.items()) {
          if (leaf(v)) {
            out += pad + k + ": " + leaf_text(v) + "\n";
          } else {
            out += pad + k + ":\n";
            render(v, indent + 2, out);
          }
        }
      } else if (j.is_array()) {
        for (auto const& v : j) {
          if (leaf(v)) {
            out += pad + "- " + leaf_text(v) + "\n";
          } else {
            out += pad + "-\n";
            render(v, indent + 2, out);
          }
        }
      } else {
        out += pad + scalar(j) + "\n";
      }
    }
  }  // namespace

  std::string render_text(json const& j) {
    std::string out;
    render(j, 0, out);
    return out;
  }

}  // namespace powalt
