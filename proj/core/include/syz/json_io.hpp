#pragma once

#include "syz/bundle.hpp"
#include "syz/monomial.hpp"
#include "syz/slope.hpp"

#include <string>

namespace syz {

/// {"n": int, "d": int|null, "monomials": [[int,...],...]}; member order is
/// preserved. indent < 0 gives compact single-line output.
std::string set_to_json(const MonomialSet& s, int indent = -1);

/// Inverse of set_to_json. A non-null "d" must match the common degree.
/// Throws std::invalid_argument on malformed input.
MonomialSet set_from_json(const std::string& text);

/// Profile with rationals as "p/q" strings and per_size as an array of rows
/// ascending in r.
std::string profile_to_json(const SlopeProfile& p, int indent = -1);

/// Certificate object; "B" is evaluated at the queried d when given, else at
/// d0, else null. "mu" is the slope coefficient -a/(a-b) as "p/q".
std::string certificate_to_json(const StabilityCertificate& c, int indent = -1);

} // namespace syz
