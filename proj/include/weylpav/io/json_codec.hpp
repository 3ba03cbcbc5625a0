#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "weylpav/errors.hpp"
#include "weylpav/exactmat/matrix.hpp"

namespace weylpav::io {

using nlohmann::json;

/// Parses "p" or "p/q" (optional leading '-', decimal digits, q != 0).
inline Rat parse_rat(std::string_view text) {
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    std::string_view num_digits = !num.empty() && num.front() == '-' ? num.substr(1) : num;
    if (!digits(num_digits) || !digits(den)) throw ParseError("malformed rational '" + std::string(text) + "'");
    const BigInt d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return frac(BigInt(std::string(num)), d);
}

inline json rat_to_json(const Rat& x) { return to_string(x); }

/// Integers within int64 become JSON numbers, larger ones decimal strings.
inline json int_to_json(const BigInt& x) {
    if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
    return x.get_str();
}

inline Rat rat_from_json(const json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(BigInt(j.dump()));
    throw ParseError("expected a rational string or integer, got " + j.dump());
}

inline BigInt int_from_json(const json& j) {
    const Rat r = rat_from_json(j);
    if (r.get_den() != 1) throw ParseError("expected an integer, got " + j.dump());
    return r.get_num();
}

inline json to_json(const RatMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const IntMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace detail {

template <class T, class Convert>
Matrix<T> matrix_from_json(const json& j, Convert convert) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
    std::vector<std::vector<T>> rows;
    for (const json& row : j) {
        if (!row.is_array() || row.empty()) throw ParseError("matrix row must be a non-empty array");
        std::vector<T> r;
        for (const json& x : row) r.push_back(convert(x));
        if (!rows.empty() && r.size() != rows.front().size()) throw ParseError("matrix rows differ in length");
        rows.push_back(std::move(r));
    }
    return Matrix<T>::from_rows(rows);
}

}  // namespace detail

inline RatMat rat_matrix_from_json(const json& j) { return detail::matrix_from_json<Rat>(j, rat_from_json); }
inline IntMat int_matrix_from_json(const json& j) { return detail::matrix_from_json<BigInt>(j, int_from_json); }

/// Reads {"n": k, "generators": [{"matrix": [[int, ...], ...]}, ...]} with
/// every matrix 2k x 2k. Throws ParseError.
inline std::vector<IntMat> parse_generator_file(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("generators")) {
        throw ParseError("expected an object with fields \"n\" and \"generators\"");
    }
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
        throw ParseError("\"n\" must be a positive integer");
    }
    const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
    const json& gens = doc["generators"];
    if (!gens.is_array() || gens.empty()) throw ParseError("\"generators\" must be a non-empty array");
    std::vector<IntMat> out;
    for (const json& g : gens) {
        if (!g.is_object() || !g.contains("matrix")) throw ParseError("each generator needs a \"matrix\" field");
        IntMat m = int_matrix_from_json(g["matrix"]);
        if (m.rows() != 2 * n || m.cols() != 2 * n) {
            throw ParseError("generator matrix must be " + std::to_string(2 * n) + "x" + std::to_string(2 * n));
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace weylpav::io
