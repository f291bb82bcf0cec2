#pragma once

// Versioned JSON document for character tables ("critgrp-table/1").
//
//   {
//     "format": "critgrp-table/1",
//     "group_name": "S4", "order": 24, "exponent": 12,
//     "family": {"name": "symmetric", "parameter": 4},      (optional)
//     "classes": [{"label": "1,1,1,1", "size": 1}, ...],
//     "characters": [[1, 1, ...], ...]
//   }
//
// A value is an integer, a rational {"num": n, "den": d}, or a cyclotomic
// {"zeta_order": m, "coeffs": [c_0, c_1, ...]} meaning sum c_k zeta_m^k, where
// each c_k is an integer or a rational. Integers that do not fit in 64 bits
// are written as decimal strings. docs/formats.md has the full description.

#include "critgrp/chartab.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>

namespace critgrp {

inline constexpr const char* kTableFormat = "critgrp-table/1";

nlohmann::ordered_json encode_integer(const BigInt& v);
BigInt decode_integer(const nlohmann::ordered_json& j);

nlohmann::ordered_json encode_value(const Cyclotomic& v);
Cyclotomic decode_value(const nlohmann::ordered_json& j);

nlohmann::ordered_json table_to_json(const CharacterTable& table);
/// Parses and normalizes; does not validate. Throws ParseError on malformed input.
CharacterTable table_from_json(const nlohmann::ordered_json& doc);

void write_table(std::ostream& out, const CharacterTable& table);
CharacterTable read_table(std::istream& in);

}  // namespace critgrp
