#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace powalt {

  // Every CLI report: {"schema_version", "command", "status", "result", "notes"}.
  // status is "definite", "unknown" or "error".
  nlohmann::json make_report(std::string const&              command,
                             std::string const&              status,
                             nlohmann::json                  result,
                             std::vector<std::string> const& notes = {});

  // Indented key/value text.  Keys come out sorted, so equal JSON values
  // render to equal text.
  std::string render_text(nlohmann::json const& j);

}  // namespace powalt
