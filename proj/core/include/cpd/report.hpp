#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cpd/classifier.hpp"

namespace cpd
{

/// {"role", "order", "generators": [element descriptions]}.
nlohmann::json witness_json(FiniteGroup const &g, SubgroupHandle const &h,
                            std::string const &role);

/// Report fields: verdict, nontrivial, method, case, p, d, n, e, t, witnesses.
/// Timings are added by the caller.
nlohmann::json to_json(FiniteGroup const &g, CpdVerdict const &v);
nlohmann::json to_json(FiniteGroup const &g, ClassificationReport const &r);

/// Drops every "timings_ms" member, recursively.
nlohmann::json strip_timings(nlohmann::json j);

} // namespace cpd
