#pragma once

#include <string>

#include <json.hpp>

#include "fakequad/catalog.hpp"
#include "fakequad/chartab.hpp"
#include "fakequad/fundgroup.hpp"
#include "fakequad/parity.hpp"

namespace fakequad::cli {

using Json = nlohmann::ordered_json;

Json to_json(const AbelianInvariants& a);
Json to_json(const Evidence& e);
Json to_json(const ParityVerdict& v);
Json to_json(const RowReport& r);
Json to_json(const MainTheoremReport& r);
Json to_json(const CharTable& ct);

std::string to_text(const ParityVerdict& v);
std::string to_text(const RowReport& r);
std::string to_text(const MainTheoremReport& r);
std::string to_text(const CharTable& ct);

/// "3a", "5b": element order followed by a letter per class of that order.
std::vector<std::string> class_names(const ConjClassSet& cls);

/// Fixed four-decimal rendering of a complex value, "-0.6180" or "0.5000+0.8660i".
std::string approx_string(const Cyclotomic& c);

}  // namespace fakequad::cli
