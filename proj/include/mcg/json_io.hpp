#pragma once

// JSON serialization for all module data. One format, versioned with a
// top-level "schema" field. Integers outside the double-exact range
// (|v| > 2^53 - 1) are emitted as decimal strings; readers accept both
// forms everywhere.

#include <json.hpp>

#include "mcg/lefschetz.hpp"
#include "mcg/plumbing.hpp"
#include "mcg/spinal.hpp"

namespace mcg {

using Json = nlohmann::ordered_json;

Json encode_int(long long v);
long long decode_int(const Json& j);

Json word_to_json(const TwistWord& w);
TwistWord word_from_json(const Json& j);

Json factorization_to_json(const Factorization& f);

Json fibration_to_json(const LefschetzFibration& f);
LefschetzFibration fibration_from_json(const Json& j);

Json book_to_json(const SpinalOpenBook& book);
SpinalOpenBook book_from_json(const Json& j);

Json framed_book_to_json(const FramedSpinalOpenBook& book);
FramedSpinalOpenBook framed_book_from_json(const Json& j);

Json tap_spec_to_json(const TapSpec& spec);
TapSpec tap_spec_from_json(const Json& j);

Json fold_spec_to_json(const FoldSpec& spec);
FoldSpec fold_spec_from_json(const Json& j);

Json account_to_json(const CobordismAccount& account);

Json plumbing_to_json(const PlumbingGraph& p);
PlumbingGraph plumbing_from_json(const Json& j);

Json homology_to_json(const HomologyResult& h);

Json verdict_to_json(const Verdict& v);

Json report_to_json(const InvariantReport& r);

}  // namespace mcg
