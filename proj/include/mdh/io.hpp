#pragma once

#include "mdh/holder_complex.hpp"
#include "mdh/inner_homology.hpp"
#include "mdh/outer_homology.hpp"
#include "mdh/profile.hpp"
#include "mdh/realization.hpp"
#include "mdh/snakes.hpp"

#include <json.hpp>

#include <string>

namespace mdh::io {

using nlohmann::json;

// Exponents are strings "p/q" or "inf"; integers are also accepted on input.
json to_json(const Exponent& e);
Exponent exponent_from_json(const json& j);

json to_json(const RankProfile& p);
RankProfile profile_from_json(const json& j);
std::string profile_to_csv(const RankProfile& p);

json to_json(const HolderComplex& c);
HolderComplex complex_from_json(const json& j);  // validates
std::string complex_to_dot(const HolderComplex& c);

json to_json(const ReductionTrace& t);

json to_json(const SnakeInstance& s);
SnakeInstance snake_from_json(const json& j);  // validates word, spectra and contacts

json to_json(const MonomialArc& a);
MonomialArc arc_from_json(const json& j);

/// Arcs with terms plus the symbolic tord matrix.
json to_json(const ArcFamily& f);

json to_json(const LinkModel& m);
LinkModel model_from_json(const json& j);  // hand-supplied, see make_link_model
std::string matrix_to_csv(const LinkModel& m);

json to_json(const Verdict& v);

ZoneCorrespondence correspondence_from_json(const json& j);

/// Parses text, mapping parse and type errors to InputError.
json parse(const std::string& text);

}  // namespace mdh::io
