#ifndef ZGDOF_JSON_IO_HPP
#define ZGDOF_JSON_IO_HPP

// JSON and CSV serialization for the CLI and for golden-file tests.

#include <json.hpp>
#include <string>

#include "zgdof/latticesim.hpp"
#include "zgdof/region.hpp"
#include "zgdof/sumset.hpp"

namespace zgdof {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json region_to_json(const GdofRegion& region);
GdofRegion region_from_json(const Json& j);
std::string region_to_csv(const GdofRegion& region);

Json stacking_problem_to_json(const StackingProblem& problem);
StackingProblem stacking_problem_from_json(const Json& j);

Json window_plan_to_json(const WindowPlan& plan);
Json inequality_to_json(const InequalityStatement& st);

Json sim_point_to_json(const SimPoint& point);
Json sim_report_to_json(const SimReport& report);
std::string sim_report_to_csv(const SimReport& report); // long format: P,metric,value

Json const_lemma_to_json(const ConstLemmaReport& report);
Json bczf_to_json(const BcZfReport& report, const ChannelParams& params, double P);

std::string ratio_table_to_csv(const RatioScanResult& result);

} // namespace zgdof

#endif // ZGDOF_JSON_IO_HPP
