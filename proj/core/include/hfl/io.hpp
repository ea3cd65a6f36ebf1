#pragma once

#include "hfl/germ.hpp"
#include "hfl/local_higgs.hpp"
#include "hfl/wps.hpp"

#include <string>

namespace hfl {

// Germ text format: "v=<valuation>;t=<trunc>;c0,c1,..." with rationals as
// "p/q" or integer literals; "0" is shorthand for the zero germ at the
// default window.
Germ parse_germ(const std::string& s);

// Four germ strings in row-major order, separated by ';' (each entry in the
// full headed form).
GermMatrix2 parse_matrix(const std::string& s);

// "w=1,1,2;x=1,2,3"
WPSPoint parse_wps(const std::string& s);

} // namespace hfl
