#pragma once

#include "iqf/bidigraph.hpp"
#include "iqf/classify.hpp"
#include "iqf/enumerate.hpp"
#include "iqf/gentle.hpp"
#include "iqf/qform.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace iqf {

using Json = nlohmann::json;

// Malformed document; the CLI maps it to exit code 2.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);
Json vec_to_json(const IntVec& v);
IntVec vec_from_json(const Json& j);
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json form_to_json(const QuadraticForm& q);
QuadraticForm form_from_json(const Json& j);

Json graph_to_json(const BidirectedGraph& b);
BidirectedGraph graph_from_json(const Json& j);

Json quiver_to_json(const GentlePresentation& p);
GentlePresentation quiver_from_json(const Json& j);

Json transform_to_json(const GTransform& t);
GTransform transform_from_json(const Json& j);

Json roots_to_json(const RootSet& r);
Json bigraph_to_json(const Bigraph& b);
Json walk_to_json(const Walk& w);

Json parse_json(const std::string& text);
Json load_json(const std::string& path);

}  // namespace iqf
