#pragma once

#include "iqf/serialize.hpp"

#include <string>

// Document-level operations shared by the command-line tool and the Python module.
namespace iqf::api {

Json qf_info(const Json& form);
Json qf_realize(const Json& form);
Json qf_canonical_c(const Json& form);
Json qf_solve(const Json& form, const std::string& d, long long bound, bool walk_sum);
Json bg_form(const Json& graph);
Json bg_balance(const Json& graph);
// max_len = 0 chooses the length cap: adaptive when bound > 0, else 2n + 2.
Json bg_roots(const Json& graph, int set, std::size_t max_len, long long bound);
Json bg_line(const Json& graph);
Json bg_switch_equiv(const Json& graph, const Json& other);
Json gentle_euler(const Json& quiver);

}  // namespace iqf::api
