#pragma once

#include "hfl/hecke.hpp"
#include "hfl/local_higgs.hpp"
#include "hfl/strata.hpp"

#include <string>

namespace hfl {

// JSON is the canonical output; the text renderings are derived from the
// same data. Every report embeds the formulas it used in "formula" fields
// so a failing value is traceable to the identity that produced it.

std::string strata_report_json(const QDProfile& p, bool pretty = true);
std::string strata_report_text(const QDProfile& p);
std::string poset_dot(const QDProfile& p);

std::string realpoints_report_json(const QDProfile& p, bool pretty = true);
std::string realpoints_report_text(const QDProfile& p);

std::string canon_report_json(const HeckeParam& p, bool pretty = true);
std::string canon_report_text(const HeckeParam& p);

std::string even_report_json(const EvenHeckeParam& p, bool pretty = true);
std::string even_report_text(const EvenHeckeParam& p);

std::string atlas_report_json(long d, bool pretty = true);
std::string atlas_report_text(long d);

std::string hecke_field_report_json(long d, const Germ& a, const Germ& b, bool pretty = true);
std::string normal_form_report_json(const LocalHiggsData& h, bool pretty = true);

} // namespace hfl
