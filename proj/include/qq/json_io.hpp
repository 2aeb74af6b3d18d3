#pragma once

#include <json.hpp>

#include "qq/char2_module.hpp"
#include "qq/qq_module.hpp"
#include "qq/report.hpp"
#include "qq/suites.hpp"

namespace qq {

using json = nlohmann::json;

json to_json(const Series& s);
Series series_from_json(const json& j);

json to_json(const Cone& c);
Cone cone_from_json(const json& j);

json to_json(const QQModule& M);
QQModule module_from_json(const json& j);

json to_json(const FinalSegment& s);
FinalSegment segment_from_json(const json& j);

json to_json(const Char2Module& M);
Char2Module char2_from_json(const json& j);

json to_json(const C2Classifier& c);
C2Classifier classifier_from_json(const json& j);

json to_json(const Descriptor& d);
Descriptor descriptor_from_json(const json& j);

json to_json(const Report& r);
json to_json(const suites::SuiteResult& s);

// Accepts either a JSON object or the compact text form of a cone / module.
Cone cone_from_text_or_json(const std::string& input);
QQModule module_from_text_or_json(const std::string& input);
Char2Module char2_from_text_or_json(const std::string& input);

} // namespace qq
