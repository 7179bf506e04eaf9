#pragma once

#include "psdo/ba.hpp"
#include "psdo/examples.hpp"
#include "psdo/growth.hpp"
#include "psdo/schur.hpp"

#include <json.hpp>

namespace psdo {

// Thrown on malformed input files; the CLI maps it (and json parse errors)
// to exit code 2.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using json = nlohmann::ordered_json;

json to_json(const XSeries& f);
XSeries xseries_from_json(const json& j);

json to_json(const EPlusOp& p);
EPlusOp eplus_from_json(const json& j);

json to_json(const ZSeries& v);
ZSeries zseries_from_json(const json& j);

json to_json(const UTSeries& v);
UTSeries utseries_from_json(const json& j);

json to_json(const SubspaceW& w);
SubspaceW subspace_from_json(const json& j);

json to_json(const GrowthCert& c);
json to_json(const Report& r);
json to_json(const BAFunction& f);
json to_json(const SchurValidation& v);

} // namespace psdo
