#pragma once

// JSON encodings shared by the command-line tool and the tests.

#include <json.hpp>

#include "monogen/certify.hpp"
#include "monogen/valuation.hpp"

namespace monogen {

using Json = nlohmann::ordered_json;

/// A number when it fits in a long, a decimal string otherwise.
Json int_json(const Int& x);

/// {"points":[[j,v],...],"sides":[{x0,y0,x1,y1,slope,degree}],"ind_phi":k};
/// v is null for a vanishing coefficient.
Json polygon_json(const NewtonPolygon& polygon, unsigned ind_phi);
Json index_report_json(const IndexReport& report);
Json reduction_json(const ReductionData& r);
/// Version 1 certificate schema.
Json certificate_json(const MonogenicityCertificate& cert);
Json family_entry_json(const FamilyEntry& e);

}  // namespace monogen
