#pragma once

// JSON forms of the library's reports. Field names are frozen under the
// schema tag below (see docs/schema.md); big integers and rationals are
// always decimal strings, and no field depends on timing unless asked for.

#include "msf/caps.hpp"
#include "msf/constructions.hpp"
#include "msf/group.hpp"
#include "msf/loopgraph.hpp"
#include "msf/mis.hpp"
#include "msf/sumfree.hpp"
#include "msf/verify.hpp"

#include <json.hpp>

namespace msf::json {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "msf/1";

Json group(const GroupSpec& g);
Json certified(const Certified& c);
Json element_set(const ElementSet& s);
Json census(const ComponentSummary& s);

Json count_report(const CountReport& r, bool timings = false);
Json graph_summary(const LoopGraph& g);
Json mis_count(const MisCount& m);
Json construction(const ConstructionReport& r);
Json cyclic(const CyclicConstruction& c);
Json product_bound(const ProductLowerBound& p);
Json prop34(std::uint64_t m, std::uint64_t n, const Prop34Result& r);
Json overcount(const std::string& group, const OvercountResult& r);
Json verification(const VerificationOutcome& v, bool timings = false);

}  // namespace msf::json
