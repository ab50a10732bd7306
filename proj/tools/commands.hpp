#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace coverspec::cli {

using json = nlohmann::json;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Exit codes: 0 success, 1 error, 2 a verdict or comparison is Unknown.
struct Outcome {
  json result = json::object();
  std::string text;
  int exit_code = 0;
};

/// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
json load_json_arg(const std::string& arg);

Outcome group_info(const json& group, std::size_t rank_cap);
Outcome criterion(const json& catalog);
Outcome nurk(const json& group, std::size_t rank_cap);
Outcome specialize(const json& cover, const json& t0, bool normalized);
Outcome ret(const json& group, const std::vector<std::string>& classes, bool count, std::uint64_t cap);
Outcome genus(const json& cover);
Outcome compare(const json& a, const json& b, bool same_group);
Outcome twist(const json& group, const json& u, const json& v);
Outcome monster(const json& table);
Outcome repro(const std::string& name);

const std::vector<std::string>& repro_names();

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coverspec::cli
