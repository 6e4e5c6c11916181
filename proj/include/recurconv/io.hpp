#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "recurconv/convergence_domain.hpp"
#include "recurconv/frobenius.hpp"
#include "recurconv/heun.hpp"
#include "recurconv/verifier.hpp"

// JSON and CSV surfaces. Complex numbers are [re, im] pairs; polynomials are
// arrays of such pairs in ascending degree; an infinite radius is the string "inf".
// All parse_* functions throw ValidationError on malformed input.
namespace recurconv::io {

using nlohmann::json;

json to_json(complex z);
complex complex_from_json(const json& j);

json to_json(const PolynomialInN& p);
PolynomialInN polynomial_from_json(const json& j);

json to_json(const RationalIndexFunction& f);
RationalIndexFunction rational_from_json(const json& j);

json to_json(const RecurrenceSpec& spec);
RecurrenceSpec recurrence_from_json(const json& j);

json to_json(const ODESpec& ode);
ODESpec ode_from_json(const json& j);

json to_json(const HeunParams& p);
HeunParams heun_params_from_json(const json& j);

json to_json(const DomainReport& report);
json to_json(const LimitProfile& profile);
json to_json(const DominationReport& report);
json to_json(const SequenceWindow& seq);

/// A finite double as a number, ±infinity as "inf"/"-inf".
json real_to_json(double x);
double real_from_json(const json& j);

void write_sequence_csv(std::ostream& out, const SequenceWindow& seq);
void write_boundary_csv(std::ostream& out, const std::vector<BoundarySample>& samples);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Parses "re", "re,im", "a+bi", "a-bi" or "bi".
complex parse_complex(const std::string& text);

json parse_json_text(const std::string& text);

}  // namespace recurconv::io
