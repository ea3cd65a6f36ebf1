#include "hfl/io.hpp"

#include "hfl/errors.hpp"

#include <sstream>
#include <vector>

namespace hfl {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

long parse_header(const std::string& field, char key) {
    std::string f = strip(field);
    if (f.size() < 2 || f[0] != key || f[1] != '=')
        throw domain_error(std::string("germ parse: expected '") + key + "=<int>', got '" + f + "'");
    try {
        return std::stol(f.substr(2));
    } catch (const std::exception&) {
        throw domain_error("germ parse: bad integer in '" + f + "'");
    }
}

std::vector<Rat> parse_coeffs(const std::string& csv) {
    std::vector<Rat> out;
    std::string body = strip(csv);
    if (body.empty()) return out;
    for (const std::string& tok : split(body, ','))
        out.push_back(rat_from_string(strip(tok)));
    return out;
}

Germ germ_from_fields(const std::string& vf, const std::string& tf, const std::string& cf) {
    long val = parse_header(vf, 'v');
    long trunc = parse_header(tf, 't');
    return Germ(val, parse_coeffs(cf), trunc);
}

} // namespace

Germ parse_germ(const std::string& s) {
    std::string body = strip(s);
    if (body == "0") return Germ::zero(default_trunc());
    auto fields = split(body, ';');
    if (fields.size() == 2) fields.push_back(""); // "v=..;t=.." without coefficients
    if (fields.size() != 3)
        throw domain_error("germ parse: expected 'v=<v>;t=<t>;c0,c1,...', got '" + s + "'");
    return germ_from_fields(fields[0], fields[1], fields[2]);
}

GermMatrix2 parse_matrix(const std::string& s) {
    auto fields = split(strip(s), ';');
    if (fields.size() == 11) fields.push_back(""); // trailing empty coefficient list
    if (fields.size() != 12)
        throw domain_error("matrix parse: expected four 'v=..;t=..;coeffs' entries joined by ';'");
    Germ g[4] = {germ_from_fields(fields[0], fields[1], fields[2]),
                 germ_from_fields(fields[3], fields[4], fields[5]),
                 germ_from_fields(fields[6], fields[7], fields[8]),
                 germ_from_fields(fields[9], fields[10], fields[11])};
    return GermMatrix2(g[0], g[1], g[2], g[3]);
}

WPSPoint parse_wps(const std::string& s) {
    auto fields = split(strip(s), ';');
    if (fields.size() != 2)
        throw domain_error("weighted point parse: expected 'w=..;x=..'");
    std::string wf = strip(fields[0]), xf = strip(fields[1]);
    if (wf.rfind("w=", 0) != 0 || xf.rfind("x=", 0) != 0)
        throw domain_error("weighted point parse: expected 'w=..;x=..'");
    std::vector<long> weights;
    for (const std::string& tok : split(wf.substr(2), ',')) {
        try {
            weights.push_back(std::stol(strip(tok)));
        } catch (const std::exception&) {
            throw domain_error("weighted point parse: bad weight '" + tok + "'");
        }
    }
    std::vector<Rat> coords;
    for (const std::string& tok : split(xf.substr(2), ','))
        coords.push_back(rat_from_string(strip(tok)));
    return WPSPoint(std::move(weights), std::move(coords));
}

} // namespace hfl
