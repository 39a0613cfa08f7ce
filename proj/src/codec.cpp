#include "vfunc/codec.hpp"

#include <sstream>

#include "vfunc/error.hpp"

namespace vfunc {

json laurent_to_json(const LaurentPoly& f) {
    json out = json::array();
    for (const auto& [e, c] : f.terms()) out.push_back(json::array({e, f.F().format(c)}));
    return out;
}

LaurentPoly laurent_from_json(const json& j, const FieldPtr& field) {
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "Laurent polynomial must be an array of [exponent, coeff]");
    LaurentPoly f(field);
    std::optional<long long> last;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_string())
            throw Error(ErrorKind::ParseError, "term must be [integer exponent, \"c0,c1,...\"]");
        const long long e = term[0].get<long long>();
        if (last && e <= *last) throw Error(ErrorKind::ParseError, "exponents must be strictly increasing");
        last = e;
        f += LaurentPoly::monomial(field, field->parse(term[1].get<std::string>()), static_cast<int>(e));
    }
    return f;
}

json lelement_to_json(const LElement& x) {
    json out = json::object();
    const int p = x.p();
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (!x.coeff(i, j).is_zero())
                out[std::to_string(i) + "," + std::to_string(j)] = laurent_to_json(x.coeff(i, j));
    return out;
}

json vresult_to_json(const VResult& r) {
    return json{{"value", format_rational(r.value)}, {"s", r.s}, {"route", std::string(route_name(r.route))}};
}

json filtration_to_json(const Filtration& f) {
    json breaks = json::array();
    for (const auto& br : f.breaks) {
        json basis = json::array();
        for (const auto& g : br.after.canonical_basis()) basis.push_back(json::array({g.sigma, g.tau}));
        breaks.push_back(json{{"at", format_rational(br.at)}, {"order", br.after.order()}, {"basis", basis}});
    }
    return json{{"numbering", f.numbering == Numbering::Upper ? "upper" : "lower"}, {"breaks", breaks}};
}

std::vector<int> parse_modulus(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad modulus coefficient \"" + token + "\"");
        }
    }
    if (out.empty()) throw Error(ErrorKind::ParseError, "empty modulus");
    return out;
}

JobSpec parse_job(const json& j) {
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "job must be a JSON object");
    for (const char* key : {"p", "n", "a", "g1", "g2"})
        if (!j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing key \"") + key + "\"");
    if (!j["p"].is_number_integer() || !j["n"].is_number_integer())
        throw Error(ErrorKind::ParseError, "p and n must be integers");
    if (!j["a"].is_string()) throw Error(ErrorKind::ParseError, "a must be a string \"c0,c1,...\"");
    std::optional<std::vector<int>> modulus;
    if (j.contains("modulus") && !j["modulus"].is_null()) {
        if (!j["modulus"].is_string()) throw Error(ErrorKind::ParseError, "modulus must be a string \"c0,...,cn\"");
        modulus = parse_modulus(j["modulus"].get<std::string>());
    }
    FieldPtr field = FiniteField::create(j["p"].get<int>(), j["n"].get<int>(), modulus);
    const FqElem a = field->parse(j["a"].get<std::string>());
    LaurentPoly g1 = laurent_from_json(j["g1"], field);
    LaurentPoly g2 = laurent_from_json(j["g2"], field);
    return JobSpec{std::move(field), a, std::move(g1), std::move(g2)};
}

JobSpec parse_job_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    return parse_job(j);
}

}  // namespace vfunc
