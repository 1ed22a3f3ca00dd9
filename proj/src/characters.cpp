// Copyright 2026 The gateid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <deque>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "gateid/errors.hpp"
#include "gateid/groups.hpp"

namespace gateid::groups {

namespace {

using nlohmann::json;

constexpr double kCharacterMatchTol = 1e-9;

std::vector<std::size_t> generated_subgroup(const GroupTable &t,
                                            const std::vector<std::size_t> &gens) {
    std::vector<bool> in(t.order, false);
    std::vector<std::size_t> members{t.identity_index};
    in[t.identity_index] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t g : gens) {
            const std::size_t next = t.product(members[i], g);
            if (!in[next]) {
                in[next] = true;
                members.push_back(next);
            }
        }
    }
    return members;
}

/// Character determined by generator images, or nothing if inconsistent.
std::optional<std::vector<Complex>>
extend_character(const GroupTable &t, const std::vector<std::size_t> &gens,
                 const std::vector<Complex> &images) {
    std::vector<Complex> chi(t.order);
    std::vector<bool> seen(t.order, false);
    chi[t.identity_index] = 1.0;
    seen[t.identity_index] = true;
    std::deque<std::size_t> queue{t.identity_index};
    while (!queue.empty()) {
        const std::size_t h = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const std::size_t next = t.product(h, gens[i]);
            const Complex value = chi[h] * images[i];
            if (!seen[next]) {
                seen[next] = true;
                chi[next] = value;
                queue.push_back(next);
            } else if (std::abs(chi[next] - value) > kCharacterMatchTol) {
                return std::nullopt;
            }
        }
    }
    for (std::size_t x = 0; x < t.order; ++x) {
        for (std::size_t y = 0; y < t.order; ++y) {
            if (std::abs(chi[t.product(x, y)] - chi[x] * chi[y]) > kCharacterMatchTol) {
                return std::nullopt;
            }
        }
    }
    return chi;
}

} // namespace

CharacterTable abelian_characters(const GroupTable &table) {
    if (!table.is_abelian()) {
        throw InvalidArgument("abelian_characters: table is not abelian");
    }
    std::vector<std::size_t> gens;
    std::vector<std::size_t> orders;
    while (generated_subgroup(table, gens).size() < table.order) {
        const auto members = generated_subgroup(table, gens);
        std::vector<bool> in(table.order, false);
        for (std::size_t m : members) {
            in[m] = true;
        }
        std::size_t best = table.order;
        std::size_t best_order = 0;
        for (std::size_t x = 0; x < table.order; ++x) {
            if (!in[x] && table.element_order(x) > best_order) {
                best = x;
                best_order = table.element_order(x);
            }
        }
        gens.push_back(best);
        orders.push_back(best_order);
    }

    CharacterTable out;
    out.group_order = table.order;
    std::vector<std::size_t> exps(gens.size(), 0);
    std::vector<Complex> images(gens.size());
    while (out.characters.size() < table.order) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            images[i] = std::polar(1.0, 2.0 * std::numbers::pi *
                                            static_cast<double>(exps[i]) /
                                            static_cast<double>(orders[i]));
        }
        if (auto chi = extend_character(table, gens, images)) {
            out.characters.push_back(
                {"chi_" + std::to_string(out.characters.size()), std::move(*chi)});
        }
        // mixed-radix increment over generator exponents
        std::size_t i = 0;
        for (; i < gens.size(); ++i) {
            if (++exps[i] < orders[i]) {
                break;
            }
            exps[i] = 0;
        }
        if (i == gens.size()) {
            break;
        }
    }
    return out;
}

CharacterMultiplicity multiplicity_by_characters(const GateSet &group,
                                                 const GroupTable &table,
                                                 const Character &character,
                                                 std::size_t n) {
    if (character.values.size() != group.size() || table.order != group.size()) {
        throw InvalidArgument("character '" + character.id +
                              "' does not match the group order");
    }
    Complex acc = 0.0;
    for (std::size_t g = 0; g < group.size(); ++g) {
        const Complex tr = group.gates[g].matrix.trace();
        acc += std::conj(character.values[g]) * std::pow(tr, static_cast<int>(n));
    }
    CharacterMultiplicity out;
    out.id = character.id;
    out.irrep_dim = character.values[table.identity_index].real();
    out.value = acc / static_cast<double>(group.size());
    out.rounded = std::llround(out.value.real());
    out.distance_to_integer =
        std::abs(out.value - Complex(static_cast<double>(out.rounded), 0.0));
    out.consistent = out.distance_to_integer <= kMultiplicityTolerance && out.rounded >= 0;
    return out;
}

CharacterDecomposition decompose_by_characters(const GateSet &group,
                                               const GroupTable &table,
                                               const CharacterTable &chars,
                                               std::size_t n) {
    if (chars.group_order != group.size()) {
        throw InvalidArgument("character table order does not match the group");
    }
    CharacterDecomposition out;
    out.all_consistent = true;
    out.contains_regular = true;
    for (const auto &c : chars.characters) {
        auto m = multiplicity_by_characters(group, table, c, n);
        out.weighted_sum += m.irrep_dim * m.value.real();
        out.dim_square_sum += m.irrep_dim * m.irrep_dim;
        out.total_multiplicity += m.value.real();
        out.all_consistent = out.all_consistent && m.consistent;
        if (m.rounded >= 1) {
            out.occupied_dim_square_sum += m.irrep_dim * m.irrep_dim;
        }
        if (static_cast<double>(m.rounded) < m.irrep_dim - kMultiplicityTolerance) {
            out.contains_regular = false;
        }
        out.irreps.push_back(std::move(m));
    }
    return out;
}

CharacterTable parse_character_table(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InvalidArgument(std::string("malformed character-table JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("group_order") || !doc.contains("characters") ||
        !doc["group_order"].is_number_integer() || !doc["characters"].is_array()) {
        throw InvalidArgument("character-table schema: need integer \"group_order\" "
                              "and array \"characters\"");
    }
    CharacterTable t;
    t.group_order = doc["group_order"].get<std::size_t>();
    for (const json &c : doc["characters"]) {
        if (!c.is_object() || !c.contains("id") || !c.contains("values") ||
            !c["values"].is_array()) {
            throw InvalidArgument("character-table schema: each character needs "
                                  "\"id\" and \"values\"");
        }
        Character ch;
        ch.id = c["id"].is_string() ? c["id"].get<std::string>() : c["id"].dump();
        for (const json &z : c["values"]) {
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                throw InvalidArgument("character-table schema: values are [re, im] pairs");
            }
            ch.values.emplace_back(z[0].get<double>(), z[1].get<double>());
        }
        if (ch.values.size() != t.group_order) {
            throw InvalidArgument("character '" + ch.id + "' has " +
                                  std::to_string(ch.values.size()) + " values, expected " +
                                  std::to_string(t.group_order));
        }
        t.characters.push_back(std::move(ch));
    }
    return t;
}

CharacterTable load_character_table_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open character table '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_character_table(buf.str());
}

std::string serialize_character_table(const CharacterTable &t) {
    nlohmann::ordered_json doc;
    doc["group_order"] = t.group_order;
    doc["characters"] = nlohmann::ordered_json::array();
    for (const auto &c : t.characters) {
        nlohmann::ordered_json values = nlohmann::ordered_json::array();
        for (const Complex &z : c.values) {
            values.push_back({z.real(), z.imag()});
        }
        doc["characters"].push_back({{"id", c.id}, {"values", values}});
    }
    return doc.dump(2);
}

} // namespace gateid::groups
