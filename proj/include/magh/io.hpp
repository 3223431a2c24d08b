#pragma once

// Text formats: space JSON/CSV, homology tables, m_X and certificates.
// Rationals are always written as "p/q" strings, or "p" for integers.

#include "magh/frames.hpp"
#include "magh/magnitude.hpp"
#include "magh/metric.hpp"
#include "magh/posets.hpp"

#include <json.hpp>

#include <iomanip>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace magh {

using nlohmann::json;

/// Input that cannot be decoded; the message names the offending field.
class FormatError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline Rational rational_from_json(json const& v, std::string const& field)
{
    try {
        if (v.is_string())
            return Rational::parse(v.get<std::string>());
        if (v.is_number_integer())
            return Rational(Integer(v.dump(), 10));
    } catch (std::invalid_argument const& e) {
        throw FormatError(field + ": " + e.what());
    }
    throw FormatError(field + ": expected a rational string \"p/q\" or an integer, got " + v.dump() +
                      " (decimals must go through quantize)");
}

inline std::string trim(std::string s)
{
    auto const first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    auto const last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

inline std::vector<std::string> split_csv_line(std::string const& line)
{
    std::vector<std::string> out;
    std::string cell;
    bool quoted = false;
    for (char c : line) {
        if (c == '"')
            quoted = !quoted;
        else if (c == ',' && !quoted) {
            out.push_back(trim(cell));
            cell.clear();
        } else
            cell.push_back(c);
    }
    out.push_back(trim(cell));
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Spaces

/// {"labels": [...], "d": [["0", "1/2"], ...]}. Missing labels default to
/// point indices.
inline FiniteMetricSpace space_from_json(json const& doc)
{
    if (!doc.is_object())
        throw FormatError("space: expected a JSON object");
    if (!doc.contains("d") || !doc["d"].is_array())
        throw FormatError("d: missing or not an array");
    auto const& d = doc["d"];
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (!d[i].is_array())
            throw FormatError("d[" + std::to_string(i) + "]: expected an array");
        std::vector<Rational> row;
        for (std::size_t j = 0; j < d[i].size(); ++j)
            row.push_back(detail::rational_from_json(d[i][j], "d[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
        rows.push_back(std::move(row));
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array())
            throw FormatError("labels: expected an array of strings");
        for (std::size_t i = 0; i < doc["labels"].size(); ++i) {
            auto const& l = doc["labels"][i];
            if (!l.is_string())
                throw FormatError("labels[" + std::to_string(i) + "]: expected a string");
            labels.push_back(l.get<std::string>());
        }
    } else {
        labels = index_labels(rows.size());
    }
    return validate_metric(to_square_matrix(rows), std::move(labels));
}

inline json space_to_json(FiniteMetricSpace const& space)
{
    json d = json::array();
    for (std::size_t i = 0; i < space.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < space.size(); ++j)
            row.push_back(space.d(i, j).str());
        d.push_back(std::move(row));
    }
    return json{{"labels", space.labels()}, {"d", std::move(d)}};
}

/// Header row of labels, then one row of rational strings per point.
inline FiniteMetricSpace space_from_csv(std::istream& in)
{
    std::string line;
    std::vector<std::string> labels;
    while (std::getline(in, line))
        if (!detail::trim(line).empty()) {
            labels = detail::split_csv_line(line);
            break;
        }
    std::vector<std::vector<Rational>> rows;
    while (std::getline(in, line)) {
        if (detail::trim(line).empty())
            continue;
        std::vector<Rational> row;
        auto const cells = detail::split_csv_line(line);
        for (std::size_t j = 0; j < cells.size(); ++j) {
            try {
                row.push_back(Rational::parse(cells[j]));
            } catch (std::invalid_argument const& e) {
                throw FormatError("csv row " + std::to_string(rows.size()) + " column " + std::to_string(j) + ": " + e.what());
            }
        }
        rows.push_back(std::move(row));
    }
    return validate_metric(to_square_matrix(rows), std::move(labels));
}

inline std::string space_to_csv(FiniteMetricSpace const& space)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < space.size(); ++i)
        out << (i ? "," : "") << space.label(i);
    out << '\n';
    for (std::size_t i = 0; i < space.size(); ++i) {
        for (std::size_t j = 0; j < space.size(); ++j)
            out << (j ? "," : "") << space.d(i, j).str();
        out << '\n';
    }
    return out.str();
}

/// Reads a space, accepting JSON or CSV by sniffing the first
/// non-blank character.
inline FiniteMetricSpace read_space(std::istream& in)
{
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto const first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw FormatError("input: empty");
    if (text[first] == '{') {
        json doc;
        try {
            doc = json::parse(text);
        } catch (json::parse_error const& e) {
            throw FormatError(std::string("input: invalid JSON: ") + e.what());
        }
        return space_from_json(doc);
    }
    std::istringstream csv(text);
    return space_from_csv(csv);
}

/// Decimal matrix {"labels": [...], "d": [[0, 0.5], ...]}; entries may be
/// JSON numbers or decimal strings.
inline std::pair<std::vector<std::vector<std::string>>, std::vector<std::string>> decimal_matrix_from_json(json const& doc)
{
    if (!doc.is_object() || !doc.contains("d") || !doc["d"].is_array())
        throw FormatError("d: missing or not an array");
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < doc["d"].size(); ++i) {
        auto const& r = doc["d"][i];
        if (!r.is_array())
            throw FormatError("d[" + std::to_string(i) + "]: expected an array");
        std::vector<std::string> row;
        for (std::size_t j = 0; j < r.size(); ++j) {
            auto const& v = r[j];
            if (v.is_string())
                row.push_back(v.get<std::string>());
            else if (v.is_number())
                row.push_back(v.dump());
            else
                throw FormatError("d[" + std::to_string(i) + "][" + std::to_string(j) + "]: expected a decimal");
        }
        rows.push_back(std::move(row));
    }
    std::vector<std::string> labels = index_labels(rows.size());
    if (doc.contains("labels"))
        labels = doc["labels"].get<std::vector<std::string>>();
    return {std::move(rows), std::move(labels)};
}

// ---------------------------------------------------------------------------
// Results

inline json torsion_json(HomologyGroup const& g)
{
    json t = json::array();
    for (auto const& f : g.torsion) {
        if (f.fits_slong_p())
            t.push_back(f.get_si());
        else
            t.push_back(f.get_str());
    }
    return t;
}

inline json row_to_json(HomologyRow const& r)
{
    return json{{"l", r.l.str()}, {"n", r.n}, {"betti", r.group.betti}, {"torsion", torsion_json(r.group)}};
}

inline HomologyRow row_from_json(json const& j)
{
    HomologyRow r;
    r.l = detail::rational_from_json(j.at("l"), "l");
    r.n = j.at("n").get<int>();
    r.group.betti = j.at("betti").get<std::size_t>();
    for (auto const& t : j.at("torsion"))
        r.group.torsion.push_back(t.is_string() ? Integer(t.get<std::string>(), 10) : Integer(t.dump(), 10));
    return r;
}

inline json table_to_json(HomologyTable const& table)
{
    json rows = json::array();
    for (auto const& r : table.rows)
        rows.push_back(row_to_json(r));
    return rows;
}

/// l,n,betti,torsion with torsion factors joined by ';'.
inline std::string table_to_csv(HomologyTable const& table)
{
    std::ostringstream out;
    out << "l,n,betti,torsion\n";
    for (auto const& r : table.rows) {
        out << r.l.str() << ',' << r.n << ',' << r.group.betti << ',';
        for (std::size_t i = 0; i < r.group.torsion.size(); ++i)
            out << (i ? ";" : "") << r.group.torsion[i].get_str();
        out << '\n';
    }
    return out.str();
}

inline std::string table_to_text(HomologyTable const& table)
{
    std::ostringstream out;
    out << std::left << std::setw(12) << "l" << std::setw(6) << "n" << std::setw(8) << "betti" << "group\n";
    for (auto const& r : table.rows)
        out << std::left << std::setw(12) << r.l.str() << std::setw(6) << r.n << std::setw(8) << r.group.betti
            << r.group.str() << '\n';
    return out.str();
}

inline json mx_to_json(MxResult const& mx)
{
    json out;
    out["m_x"] = mx.is_infinite() ? std::string("inf") : mx.value->str();
    out["witness"] = mx.witness ? json(mx.witness->chain.points) : json(nullptr);
    return out;
}

inline json certificate_to_json(Certificate const& c)
{
    return json{{"pair", {c.a, c.b}},
                {"distance", c.distance.str()},
                {"components", c.components},
                {"mh2_lower_bound", c.mh2_lower_bound}};
}

/// degree,length,count
inline std::string spectrum_to_csv(FiniteMetricSpace const& space, int n_max,
                                   std::uint64_t cap = default_enumeration_cap())
{
    std::ostringstream out;
    out << "degree,length,count\n";
    for (int n = 0; n <= n_max; ++n)
        for (auto const& [len, chains] : enumerate_proper_chains(space, n, cap))
            out << n << ',' << len.str() << ',' << chains.size() << '\n';
    return out.str();
}

} // namespace magh
