#pragma once

#include <string>

#include <json.hpp>

#include "tough/bounds.hpp"
#include "tough/exact.hpp"
#include "tough/extremal.hpp"
#include "tough/spectra.hpp"

namespace tough {

using Json = nlohmann::ordered_json;

/// Finite reals as numbers, infinities as the strings "inf" / "-inf", NaN as null.
Json json_real(double x);

Json to_json(const ToughnessCertificate& c);
Json to_json(const IndependenceCertificate& c);
Json to_json(const ConnectivityCertificate& c);
Json to_json(const SpectralSummary& s);
Json to_json(const BoundReport& r);
Json to_json(const ExtremalWitness& w);
Json to_json(const EqualityVerdict& v);

/// Column order of the bound report CSV; see docs/report-schema.md.
std::string bound_report_csv_header();
std::string to_csv_row(const BoundReport& r);

/// Shortest round-trip decimal form; "inf" / "-inf" / "nan" for non-finite values.
std::string format_real(double x);

}  // namespace tough
