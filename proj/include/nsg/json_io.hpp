#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "nsg/behavior.hpp"
#include "nsg/game.hpp"
#include "nsg/oddcycle.hpp"

namespace nsg {

using json = nlohmann::ordered_json;

/// Game interchange format:
/// { "name": str, "players": m, "questions": [int...], "answers": [int...],
///   "pi": [ {"q":[ints], "p":"num/den"} ... ],
///   "V":  [ {"q":[ints], "a":[ints], "v":"num/den"} ... ] }
/// Omitted pi/V entries are zero; rationals are decimal strings with "/den"
/// dropped when the denominator is 1. Parsing validates the game, so a
/// non-normalized pi is rejected.
json game_to_json(const Game& g);
Game game_from_json(const json& j);

/// { "questions":[...], "answers":[...],
///   "p":[ {"a":[...], "q":[...], "v":"num/den"} ... ] }, omitted cells zero.
json behavior_to_json(const Behavior& b);
Behavior behavior_from_json(const json& j);

/// { "n": int, "vars": [ {"family":"n"|"s"|"y"|"z", "idx":[ints],
///   "v":"num/den"} ... ] } with idx (j,k) / (b,c,j,k) / (d,j,k) / (d,j,k).
json certificate_to_json(const DualCertificate& cert);
DualCertificate certificate_from_json(const json& j);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace nsg
