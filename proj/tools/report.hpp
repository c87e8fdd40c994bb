#pragma once

#include <ostream>
#include <vector>

#include <json.hpp>

#include "hfq/analytic.hpp"
#include "hfq/checks.hpp"
#include "hfq/variance.hpp"

namespace hfq::report {

using nlohmann::ordered_json;

ordered_json rational(const Rational& r);
ordered_json rational(const std::optional<Rational>& r);  // null when empty
ordered_json variance(const VarianceReport& rep, const Poly& U, const Poly& V);
ordered_json census(const std::vector<CensusRow>& rows);
ordered_json tally(const Tally& t);
ordered_json phisum(const PhiSumReport& rep);
ordered_json profile(const Profile& p);

void census_text(std::ostream& os, const std::vector<CensusRow>& rows);
void phisum_csv(std::ostream& os, const PhiSumReport& rep);
void phisum_text(std::ostream& os, const PhiSumReport& rep);

}  // namespace hfq::report
