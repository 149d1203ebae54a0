// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#include "specfile.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "builders.hpp"

namespace fcspec {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ValidationError(path + ": " + message);
}

void check_keys(const json& j, const std::string& path, const std::set<std::string>& allowed,
                const std::set<std::string>& required) {
    if (!j.is_object()) fail(path, "must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!allowed.count(key)) fail(path, "unknown key \"" + key + "\"");
    }
    for (const auto& key : required)
        if (!j.contains(key)) fail(path, "missing key \"" + key + "\"");
}

int get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "must be a decimal integer");
    return j.get<int>();
}

std::vector<int> get_int_vector(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "must be an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(get_int(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

FiniteRing parse_ring(const json& j, const std::string& path, const Bounds& bounds) {
    if (!j.is_object()) fail(path, "must be an object");
    if (!j.contains("type") || !j["type"].is_string()) fail(path, "needs a string \"type\"");
    const std::string type = j["type"].get<std::string>();
    try {
        if (type == "Zn") {
            check_keys(j, path, {"type", "n"}, {"type", "n"});
            return make_zn_ring(get_int(j["n"], path + ".n"), bounds);
        }
        if (type == "product") {
            check_keys(j, path, {"type", "factors"}, {"type", "factors"});
            const auto& factors = j["factors"];
            if (!factors.is_array() || factors.empty())
                fail(path + ".factors", "must be a non-empty array");
            std::vector<FiniteRing> parsed;
            for (std::size_t i = 0; i < factors.size(); ++i)
                parsed.push_back(parse_ring(factors[i],
                                            path + ".factors[" + std::to_string(i) + "]", bounds));
            return make_product_ring(parsed, bounds);
        }
        if (type == "matrix") {
            check_keys(j, path, {"type", "base", "dim"}, {"type", "base", "dim"});
            const FiniteRing base = parse_ring(j["base"], path + ".base", bounds);
            return make_matrix_ring(base, get_int(j["dim"], path + ".dim"), bounds);
        }
        if (type == "table") {
            check_keys(j, path, {"type", "orders", "mul", "one"}, {"type", "orders", "mul", "one"});
            const auto orders = get_int_vector(j["orders"], path + ".orders");
            const auto& mul = j["mul"];
            if (!mul.is_array()) fail(path + ".mul", "must be an array");
            std::vector<std::vector<std::vector<int>>> table;
            for (std::size_t i = 0; i < mul.size(); ++i) {
                const auto& row = mul[i];
                const std::string rp = path + ".mul[" + std::to_string(i) + "]";
                if (!row.is_array()) fail(rp, "must be an array");
                std::vector<std::vector<int>> parsed_row;
                for (std::size_t k = 0; k < row.size(); ++k)
                    parsed_row.push_back(get_int_vector(row[k], rp + "[" + std::to_string(k) + "]"));
                table.push_back(std::move(parsed_row));
            }
            return FiniteRing::make(orders, table, get_int_vector(j["one"], path + ".one"), bounds);
        }
    } catch (const ValidationError& e) {
        const std::string what = e.what();
        if (what.rfind(path, 0) == 0) throw;  // already located
        fail(path, what);
    }
    fail(path + ".type", "must be one of Zn | product | matrix | table");
}

}  // namespace

FiniteModule parse_module_spec(const std::string& text, const Bounds& bounds) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("parse error: ") + e.what());
    }
    check_keys(j, "$", {"ring", "module", "name"}, {"ring", "module"});
    std::string name = "module";
    if (j.contains("name")) {
        if (!j["name"].is_string()) fail("$.name", "must be a string");
        name = j["name"].get<std::string>();
    }
    auto ring = std::make_shared<const FiniteRing>(parse_ring(j["ring"], "$.ring", bounds));

    const auto& jm = j["module"];
    check_keys(jm, "$.module", {"orders", "action"}, {"orders", "action"});
    const auto orders = get_int_vector(jm["orders"], "$.module.orders");
    const auto& ja = jm["action"];
    if (!ja.is_array()) fail("$.module.action", "must be an array of matrices");
    std::vector<std::vector<std::vector<int>>> action;
    for (std::size_t g = 0; g < ja.size(); ++g) {
        const std::string gp = "$.module.action[" + std::to_string(g) + "]";
        if (!ja[g].is_array()) fail(gp, "must be a matrix");
        std::vector<std::vector<int>> matrix;
        for (std::size_t i = 0; i < ja[g].size(); ++i)
            matrix.push_back(get_int_vector(ja[g][i], gp + "[" + std::to_string(i) + "]"));
        action.push_back(std::move(matrix));
    }
    try {
        return FiniteModule::make(std::move(ring), orders, action, name, bounds);
    } catch (const ValidationError& e) {
        fail("$.module", e.what());
    }
}

FiniteModule load_module_file(const std::string& path, const Bounds& bounds) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_module_spec(ss.str(), bounds);
}

std::string serialize_module_spec(const FiniteModule& m) {
    json j;
    j["name"] = m.name();
    json ring;
    ring["type"] = "table";
    ring["orders"] = m.ring().additive_orders();
    ring["mul"] = m.ring().mul_table();
    ring["one"] = m.ring().one_coefficients();
    j["ring"] = ring;
    json mod;
    mod["orders"] = m.orders();
    mod["action"] = m.action_matrices();
    j["module"] = mod;
    return j.dump(2) + "\n";
}

}  // namespace fcspec
