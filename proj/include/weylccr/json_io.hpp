#pragma once

// JSON wire formats. Rationals travel as "p/q" strings; ExactScalars as
// {"num": {power: coeff}, "den": {power: coeff}} (a bare rational string is
// accepted wherever an ExactScalar is expected).

#include "json.hpp"

#include "weylccr/states.hpp"

namespace weylccr::json_io {

using nlohmann::json;

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const ExactScalar& x);
ExactScalar scalar_from_json(const json& j);

json to_json(const ExactVector& v);
ExactVector vector_from_json(const json& j);

json to_json(const Frame& frame);
FramePtr frame_from_json(const json& j);

json to_json(const Element& x);
Element element_from_json(const json& j);

json to_json(const BohrCharacter& chi);
BohrCharacter character_from_json(const json& j);

json to_json(const StateModel& s);
StateModel state_from_json(const json& j);

json to_json(const CheckReport& r);

}  // namespace weylccr::json_io
