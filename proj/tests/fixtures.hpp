#pragma once

#include <string>

#include "powalt/group_json.hpp"

#ifndef POWALT_DATA_DIR
#define POWALT_DATA_DIR "data"
#endif

inline std::string data_path(std::string const& name) {
  return std::string(POWALT_DATA_DIR) + "/" + name;
}

inline powalt::GraphOfGroups load_gog(std::string const& name) {
  return powalt::gog_from_json(powalt::load_json(data_path(name)));
}
