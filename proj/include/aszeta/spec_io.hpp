#pragma once

#include <string>
#include <vector>

#include "aszeta/lfun.hpp"

namespace aszeta {

// Curve-spec files.  Two encodings are accepted: JSON objects and key=value
// lines ('#' starts a comment).  The keys are
//   m              base field degree (decimal)
//   field_modulus  hex bit string, least-significant bit = constant term;
//                  optional or "0" to pick the smallest irreducible
//   R              the additive coefficients a_0..a_d, as a JSON array of
//                  hex bit strings or a comma-separated list
// Parsing checks the shape of the data; field/coefficient validity is
// checked where the spec is used.

CurveSpec parse_curve_spec_text(const std::string& text);
CurveSpec load_curve_spec(const std::string& path);

// Canonical form: JSON with the modulus resolved, so emit-then-parse is the
// identity on the underlying curve data and reports echo a complete spec.
std::string emit_curve_spec(const CurveSpec& spec);

// Reproducible random specs for the property suites: base degree drawn from
// ms, 2-degree from 1..d_max, coefficients uniform with a nonzero leader.
// Uses a fixed generator and plain modular draws so the stream depends only
// on the seed.
std::vector<CurveSpec> random_curve_specs(unsigned long seed, unsigned count,
                                          const std::vector<unsigned>& ms,
                                          unsigned d_max);

// Hex bit strings (the wire format for packed polynomials over F_2).
u64 parse_hex_word(const std::string& s);
std::string hex_word(u64 v);

} // namespace aszeta
