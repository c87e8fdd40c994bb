#include "report.hpp"

#include <cmath>
#include <iomanip>

namespace hfq::report {

ordered_json rational(const Rational& r) {
  return ordered_json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

ordered_json rational(const std::optional<Rational>& r) { return r ? rational(*r) : ordered_json(nullptr); }

ordered_json variance(const VarianceReport& rep, const Poly& U, const Poly& V) {
  ordered_json j;
  j["q"] = rep.q;
  j["U"] = U.literal();
  j["V"] = V.literal();
  j["n"] = rep.params.n;
  j["h"] = rep.params.h;
  j["case"] = std::string(case_name(rep.label));
  j["oracle"] = rational(rep.oracle);
  j["charsum"] = rational(rep.charsum);
  j["theorem"] = rational(rep.theorem);
  j["main_term"] = rational(rep.main_term);
  j["secondary_term"] = rational(rep.secondary_term);
  j["error_scale"] = rep.error_scale
                         ? ordered_json::array({rational(rep.error_scale->first), rational(rep.error_scale->second)})
                         : ordered_json(nullptr);
  j["residual"] = rational(rep.residual);
  return j;
}

namespace {

std::string row_kind(const CensusRow& r) {
  if (r.r < 0) return "partition";
  if (r.rho < 0) return "aggregate";
  return "class";
}

}  // namespace

ordered_json census(const std::vector<CensusRow>& rows) {
  ordered_json arr = ordered_json::array();
  std::size_t bad = 0;
  for (const CensusRow& r : rows) {
    ordered_json j;
    j["n"] = r.n;
    j["h"] = r.h;
    j["kind"] = row_kind(r);
    if (r.r >= 0) j["r"] = r.r;
    if (r.rho >= 0) {
      j["rho"] = r.rho;
      j["pi"] = r.pi;
    }
    j["formula"] = r.formula.get_str();
    j["enumerated"] = r.enumerated;
    j["pass"] = r.match();
    bad += r.match() ? 0 : 1;
    arr.push_back(std::move(j));
  }
  return ordered_json{{"rows", std::move(arr)}, {"mismatches", bad}};
}

ordered_json tally(const Tally& t) {
  ordered_json j{{"checked", t.checked}, {"failed", t.failed}, {"pass", t.ok()}};
  if (!t.first_failure.empty()) j["first_failure"] = t.first_failure;
  return j;
}

ordered_json phisum(const PhiSumReport& rep) {
  ordered_json j;
  j["W2"] = rep.w2.literal();
  j["W3"] = rep.w3.literal();
  j["k_max"] = rep.k_max;
  j["slope"] = rational(rep.slope);
  ordered_json rows = ordered_json::array();
  for (int k = 0; k <= rep.k_max; ++k) {
    Rational dev = rep.increments[k] / rep.slope - 1;
    rows.push_back({{"k", k},
                    {"S", rational(rep.partial_sums[k])},
                    {"increment", rational(rep.increments[k])},
                    {"deviation", std::fabs(dev.get_d())}});
  }
  j["rows"] = std::move(rows);
  return j;
}

ordered_json profile(const Profile& p) {
  return ordered_json{{"r", p.r}, {"rho", p.rho}, {"pi", p.pi}, {"strict_rho", p.strict_rho}, {"strict_pi", p.strict_pi}};
}

void census_text(std::ostream& os, const std::vector<CensusRow>& rows) {
  os << std::setw(3) << "n" << std::setw(4) << "h" << "  class        " << std::setw(14) << "formula" << std::setw(14)
     << "enumerated" << "\n";
  for (const CensusRow& r : rows) {
    std::string cls;
    if (r.r < 0)
      cls = "total";
    else if (r.rho < 0)
      cls = "r=" + std::to_string(r.r);
    else
      cls = "(" + std::to_string(r.r) + "," + std::to_string(r.rho) + "," + std::to_string(r.pi) + ")";
    os << std::setw(3) << r.n << std::setw(4) << r.h << "  " << std::left << std::setw(13) << cls << std::right
       << std::setw(14) << r.formula.get_str() << std::setw(14) << r.enumerated << (r.match() ? "" : "  MISMATCH")
       << "\n";
  }
}

void phisum_csv(std::ostream& os, const PhiSumReport& rep) {
  os << "k,S_num,S_den,inc_num,inc_den,slope_num,slope_den\n";
  for (int k = 0; k <= rep.k_max; ++k)
    os << k << ',' << rep.partial_sums[k].get_num() << ',' << rep.partial_sums[k].get_den() << ','
       << rep.increments[k].get_num() << ',' << rep.increments[k].get_den() << ',' << rep.slope.get_num() << ','
       << rep.slope.get_den() << '\n';
}

void phisum_text(std::ostream& os, const PhiSumReport& rep) {
  os << "slope " << rep.slope << " (" << rep.slope.get_d() << ")\n";
  os << std::setw(3) << "k" << std::setw(16) << "S(k)" << std::setw(16) << "increment" << std::setw(14) << "|inc/slope-1|"
     << "\n";
  for (int k = 0; k <= rep.k_max; ++k) {
    Rational dev = rep.increments[k] / rep.slope - 1;
    os << std::setw(3) << k << std::setw(16) << rep.partial_sums[k].get_d() << std::setw(16) << rep.increments[k].get_d()
       << std::setw(14) << std::fabs(dev.get_d()) << "\n";
  }
}

}  // namespace hfq::report
