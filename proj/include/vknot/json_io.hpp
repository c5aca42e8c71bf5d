// JSON encodings for the table, presentation, and report types. Keys are
// emitted in sorted order so output is byte-stable.
#pragma once

#include <json.hpp>

#include "vknot/algebra.hpp"
#include "vknot/moves.hpp"
#include "vknot/presentation.hpp"
#include "vknot/ribbon.hpp"
#include "vknot/spun.hpp"

namespace vknot {

using Json = nlohmann::json;

Json to_json(const FiniteQuandle& q);
Json to_json(const FiniteBiquandle& b);
Json to_json(const FiniteGroup& g);
FiniteQuandle quandle_from_json(const Json& j);
FiniteBiquandle biquandle_from_json(const Json& j);
FiniteGroup group_from_json(const Json& j);

Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

Json to_json(const ColoringCount& c);
Json to_json(const Abelianization& a);

Json to_json(const RibbonData& r);
RibbonData ribbon_from_json(const Json& j);

Json to_json(const DoublePointData& d);
DoublePointData double_point_from_json(const Json& j);

Json to_json(const MoveInstance& m);
MoveInstance move_from_json(const Json& j);

}  // namespace vknot
