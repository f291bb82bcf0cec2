#include "critgrp/table_format.hpp"

#include "critgrp/errors.hpp"

#include <istream>
#include <limits>
#include <ostream>

namespace critgrp {

using json = nlohmann::ordered_json;

namespace {

json encode_rational(const Rational& r) {
    if (denominator(r) == 1) return encode_integer(numerator(r));
    return json{{"num", encode_integer(numerator(r))}, {"den", encode_integer(denominator(r))}};
}

Rational decode_rational(const json& j) {
    if (j.is_object()) {
        if (!j.contains("num") || !j.contains("den"))
            throw ParseError("rational needs 'num' and 'den': " + j.dump());
        const BigInt den = decode_integer(j.at("den"));
        if (den == 0) throw ParseError("rational with zero denominator: " + j.dump());
        return Rational(decode_integer(j.at("num")), den);
    }
    return Rational(decode_integer(j));
}

const json& field(const json& doc, const char* name) {
    if (!doc.contains(name)) throw ParseError(std::string("table document lacks '") + name + "'");
    return doc.at(name);
}

}  // namespace

json encode_integer(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

BigInt decode_integer(const json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
        return BigInt(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw ParseError("expected an integer, got " + j.dump());
}

json encode_value(const Cyclotomic& v) {
    if (v.order() == 1) return encode_rational(v.coefficients()[0]);
    json coeffs = json::array();
    for (const auto& c : v.coefficients()) coeffs.push_back(encode_rational(c));
    return json{{"zeta_order", v.order()}, {"coeffs", coeffs}};
}

Cyclotomic decode_value(const json& j) {
    if (j.is_object() && j.contains("zeta_order")) {
        const json& m = j.at("zeta_order");
        if (!m.is_number_integer() || m.get<long>() < 1)
            throw ParseError("zeta_order must be a positive integer: " + j.dump());
        if (!j.contains("coeffs") || !j.at("coeffs").is_array())
            throw ParseError("cyclotomic value needs a 'coeffs' array: " + j.dump());
        std::vector<Rational> coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.push_back(decode_rational(c));
        if (coeffs.empty()) coeffs.emplace_back(0);
        return Cyclotomic::from_coefficients(m.get<long>(), std::move(coeffs));
    }
    return Cyclotomic(decode_rational(j));
}

json table_to_json(const CharacterTable& table) {
    json doc;
    doc["format"] = kTableFormat;
    doc["group_name"] = table.group_name;
    doc["order"] = encode_integer(table.order);
    doc["exponent"] = table.exponent;
    if (table.family) doc["family"] = {{"name", table.family->name}, {"parameter", table.family->parameter}};
    json classes = json::array();
    for (const auto& c : table.classes) classes.push_back({{"label", c.label}, {"size", encode_integer(c.size)}});
    doc["classes"] = classes;
    json rows = json::array();
    for (Eigen::Index i = 0; i < table.values.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index c = 0; c < table.values.cols(); ++c) row.push_back(encode_value(table.values(i, c)));
        rows.push_back(row);
    }
    doc["characters"] = rows;
    return doc;
}

CharacterTable table_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("table document must be a JSON object");
    const json& format = field(doc, "format");
    if (!format.is_string() || format.get<std::string>() != kTableFormat)
        throw ParseError("unsupported table format " + format.dump() + ", expected " + kTableFormat);

    CharacterTable table;
    const json& name = field(doc, "group_name");
    if (!name.is_string()) throw ParseError("group_name must be a string");
    table.group_name = name.get<std::string>();
    table.order = decode_integer(field(doc, "order"));
    const json& exponent = field(doc, "exponent");
    if (!exponent.is_number_integer()) throw ParseError("exponent must be an integer");
    table.exponent = exponent.get<long>();

    if (doc.contains("family")) {
        const json& fam = doc.at("family");
        if (!fam.is_object() || !fam.contains("name") || !fam.at("name").is_string() ||
            !fam.contains("parameter") || !fam.at("parameter").is_number_integer())
            throw ParseError("family must be {\"name\": string, \"parameter\": integer}");
        table.family = TableFamily{fam.at("name").get<std::string>(), fam.at("parameter").get<long>()};
    }

    const json& classes = field(doc, "classes");
    if (!classes.is_array()) throw ParseError("classes must be an array");
    for (const auto& c : classes) {
        if (!c.is_object() || !c.contains("label") || !c.at("label").is_string() || !c.contains("size"))
            throw ParseError("class entries need 'label' and 'size': " + c.dump());
        table.classes.push_back({c.at("label").get<std::string>(), decode_integer(c.at("size"))});
    }

    const json& rows = field(doc, "characters");
    const auto k = static_cast<Eigen::Index>(table.classes.size());
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != k)
        throw ParseError("characters must be an array of " + std::to_string(k) + " rows");
    table.values.resize(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const json& row = rows.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != k)
            throw ParseError("character row " + std::to_string(i) + " must have " + std::to_string(k) +
                             " values");
        for (Eigen::Index c = 0; c < k; ++c) table.values(i, c) = decode_value(row.at(static_cast<std::size_t>(c)));
    }

    try {
        return normalize(std::move(table));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

// One class or character row per line; any JSON reader accepts the result.
void write_table(std::ostream& out, const CharacterTable& table) {
    const json doc = table_to_json(table);
    out << "{\n";
    bool first = true;
    for (const auto& [key, value] : doc.items()) {
        out << (first ? "" : ",\n") << "  " << json(key).dump() << ": ";
        first = false;
        if ((key == "classes" || key == "characters") && !value.empty()) {
            out << "[\n";
            for (std::size_t i = 0; i < value.size(); ++i)
                out << "    " << value[i].dump() << (i + 1 < value.size() ? ",\n" : "\n");
            out << "  ]";
        } else {
            out << value.dump();
        }
    }
    out << "\n}\n";
}

CharacterTable read_table(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return table_from_json(doc);
}

}  // namespace critgrp
