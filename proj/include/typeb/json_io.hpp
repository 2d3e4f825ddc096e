// JSON (de)serialization for the documented schemas. All maps are emitted
// with deterministic key order; rationals serialize as canonical strings.
#pragma once

#include "typeb/gtbij.hpp"
#include "typeb/modules.hpp"
#include "typeb/patterns.hpp"
#include "typeb/pbw.hpp"
#include "typeb/rational.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace typeb {

using ordered_json = nlohmann::ordered_json;

inline ordered_json triangle_to_json(const Triangle& T) {
    return ordered_json{{"n", T.n}, {"entries", T.t}};
}

inline Triangle triangle_from_json(const ordered_json& j) {
    Triangle T;
    T.n = j.at("n").get<int>();
    T.t = j.at("entries").get<std::vector<long long>>();
    require_triangle(T);
    return T;
}

inline ordered_json pattern_to_json(const GTPattern& R) {
    std::vector<std::string> entries;
    entries.reserve(R.r.size());
    for (const Rational& v : R.r) entries.push_back(rational_to_string(v));
    return ordered_json{{"n", R.n}, {"entries", entries}};
}

inline GTPattern pattern_from_json(const ordered_json& j, const DominantWeight& w) {
    GTPattern R;
    R.n = j.at("n").get<int>();
    if (R.n != w.n) throw std::invalid_argument("pattern rank does not match weight");
    R.lambda = w.lambda;
    for (const auto& s : j.at("entries")) R.r.push_back(parse_rational(s.get<std::string>()));
    if (R.r.size() != static_cast<std::size_t>(R.n) * static_cast<std::size_t>(R.n))
        throw std::invalid_argument("pattern has wrong number of entries");
    return R;
}

inline ordered_json hrep_to_json(const HRep& h) {
    ordered_json vars = ordered_json::array();
    for (Cell c : h.vars) vars.push_back({c.i, c.j});
    ordered_json rows = ordered_json::array();
    for (const auto& row : h.rows) {
        std::vector<std::string> coeffs;
        coeffs.reserve(row.coeffs.size());
        for (const Rational& c : row.coeffs) coeffs.push_back(rational_to_string(c));
        rows.push_back({{"coeffs", coeffs}, {"rhs", rational_to_string(row.rhs)}});
    }
    return ordered_json{{"vars", vars}, {"rows", rows}};
}

// Terms ordered by prec, leading term first.
inline ordered_json lincomb_to_json(const LinComb& lc) {
    std::vector<const Triangle*> keys;
    keys.reserve(lc.terms.size());
    for (const auto& [T, c] : lc.terms) keys.push_back(&T);
    std::sort(keys.begin(), keys.end(), [](const Triangle* a, const Triangle* b) { return prec_less(*b, *a); });
    ordered_json terms = ordered_json::array();
    for (const Triangle* T : keys)
        terms.push_back({{"exponents", triangle_to_json(*T)}, {"coeff", rational_to_string(lc.terms.at(*T))}});
    return ordered_json{{"terms", terms}};
}

inline ordered_json modvec_to_json(const RepModule& m, const ModVec& v) {
    ordered_json coords = ordered_json::array();
    for (const auto& [b, c] : v.entries)
        coords.push_back({{"label", m.labels[static_cast<std::size_t>(b)]}, {"coeff", rational_to_string(c)}});
    return ordered_json{{"coords", coords}};
}

inline ordered_json weight_to_json(const DominantWeight& w) {
    std::vector<std::string> lambda;
    lambda.reserve(w.lambda.size());
    for (const Rational& l : w.lambda) lambda.push_back(rational_to_string(l));
    return ordered_json{{"n", w.n}, {"a", w.a}, {"lambda", lambda}};
}

// CLI word syntax: space-separated "i,j" tokens, leftmost factor first.
inline std::string word_to_string(const Word& wd) {
    std::string out;
    for (std::size_t k = 0; k < wd.factors.size(); ++k) {
        if (k) out += " ";
        out += cell_to_string(wd.factors[k]);
    }
    return out;
}

inline Word parse_word(int n, const std::string& text) {
    std::vector<Cell> fs;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        const auto comma = tok.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("malformed word token '" + tok + "'");
        try {
            const Cell c{std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))};
            fs.push_back(c);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed word token '" + tok + "'");
        }
    }
    return Word(n, std::move(fs));
}

}  // namespace typeb
