#pragma once

#include <string>

#include <json.hpp>

#include "ratslice/bounds.hpp"
#include "ratslice/complex.hpp"
#include "ratslice/paperdata.hpp"
#include "ratslice/ratlink.hpp"

namespace ratslice::io {

using Json = nlohmann::ordered_json;

// Throws InputError naming the file.
std::string read_file(const std::string& path);
// Throws InputError with the parser's line and column.
Json parse_json(const std::string& text, const std::string& source);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& field);

Json complex_to_json(const FilteredComplex& c);
FilteredComplex complex_from_json(const Json& j);

Json spectrum_to_json(const TauSpectrum& s);
TauSpectrum spectrum_from_json(const Json& j, const std::string& field = "tau_spectrum");

Json framed_to_json(const FramedKnotData& k);
FramedKnotData framed_from_json(const Json& j);

Json poincare_to_json(const PoincarePolynomial& p);
PoincarePolynomial poincare_from_json(const Json& j, const std::string& field = "poincare");
Json family_to_json(const PoincareFamily& f);
PoincareFamily family_from_json(const Json& j);

Json builtin_to_json(const Builtin& b);

Json report_to_json(const BoundReport& r);
Json interval_to_json(const Interval& iv);
Json verdict_to_json(const DeepSliceVerdict& v);
Json validation_to_json(const ValidationReport& r);

std::string dump(const Json& j);

}  // namespace ratslice::io
