#pragma once

// Newline-delimited JSON records for sums, tableaux and operator matrices.

#include "json.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "dmod/clifford_module.hpp"
#include "dmod/formal_sum.hpp"
#include "dmod/hecke_module.hpp"
#include "dmod/tableau.hpp"

namespace dmod::io {

using json = nlohmann::ordered_json;

inline json to_json(const FormalSum& s) {
    json terms = json::array();
    for (const auto& [idx, c] : s.terms()) terms.push_back({{"index", idx.parts()}, {"coefficient", to_string(c)}});
    return {{"type", "formal_sum"},
            {"basis", std::string(1, basis_letter(s.basis()))},
            {"degree", s.degree()},
            {"terms", terms}};
}

inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw domain_error("malformed rational '" + text + "'");
    }
}

inline FormalSum formal_sum_from_json(const json& j) {
    if (j.value("type", "") != "formal_sum") throw domain_error("record is not a formal_sum");
    const std::string b = j.at("basis").get<std::string>();
    if (b != "F" && b != "K") throw domain_error("unknown basis '" + b + "'");
    FormalSum s(b == "F" ? Basis::Fundamental : Basis::Peak, j.at("degree").get<int>());
    for (const auto& t : j.at("terms"))
        s.add_term(Composition(t.at("index").get<std::vector<int>>()), parse_rational(t.at("coefficient").get<std::string>()));
    return s;
}

inline json to_json(const StandardTableau& t, const std::string& family = "") {
    json boxes = json::array();
    for (const auto& b : t.diagram()->reading_order()) boxes.push_back({b.column, b.row});
    json j{{"type", "tableau"}};
    if (!family.empty()) j["family"] = family;
    j["boxes"] = boxes;
    j["word"] = t.word();
    j["descent_set"] = descent_set(t).elements();
    j["peak_set"] = peak_set(t).elements();
    return j;
}

/// Rebuilds the tableau; the diagram comes from the record's box list.
inline StandardTableau tableau_from_json(const json& j) {
    if (j.value("type", "") != "tableau") throw domain_error("record is not a tableau");
    std::vector<Box> boxes;
    for (const auto& b : j.at("boxes")) boxes.push_back({b.at(0).get<int>(), b.at(1).get<int>()});
    return StandardTableau(std::make_shared<const Diagram>(std::move(boxes)), j.at("word").get<Word>());
}

inline std::string convention_name(Convention c) { return c == Convention::Pi ? "pi" : "pi_hat"; }

/// Basis manifest followed by one record per nonzero matrix entry.
inline void dump_matrices(std::ostream& out, const HeckeModuleRep& rep) {
    json words = json::array();
    for (std::size_t k = 0; k < rep.dim(); ++k) words.push_back(rep.basis_tableau(k).word());
    out << json{{"type", "basis"},
                {"module", "hecke"},
                {"family", rep.family->tag()},
                {"convention", convention_name(rep.convention)},
                {"dim", rep.dim()},
                {"generators", {{rep.convention == Convention::Pi ? "pi" : "pi_hat", rep.pi.size()}}},
                {"words", words}}
               .dump()
        << '\n';
    const std::string gen = rep.convention == Convention::Pi ? "pi" : "pi_hat";
    for (std::size_t i = 0; i < rep.pi.size(); ++i)
        for (const auto& [row, col, v] : rep.pi[i].triplets())
            out << json{{"type", "entry"}, {"generator", gen}, {"i", i + 1}, {"row", row}, {"col", col}, {"value", v}}.dump()
                << '\n';
}

inline void dump_matrices(std::ostream& out, const CliffordModuleRep& rep) {
    json elements = json::array();
    for (std::size_t k = 0; k < rep.dim(); ++k) {
        auto m = rep.basis_element(k);
        elements.push_back({{"word", m.tableau.word()}, {"marks", m.marks.elements()}});
    }
    out << json{{"type", "basis"},
                {"module", "clifford"},
                {"family", rep.family->tag()},
                {"convention", "pi"},
                {"dim", rep.dim()},
                {"generators", {{"pi", rep.pi.size()}, {"c", rep.c.size()}}},
                {"elements", elements}}
               .dump()
        << '\n';
    auto emit = [&](const std::string& gen, const std::vector<OperatorMatrix>& ms) {
        for (std::size_t i = 0; i < ms.size(); ++i)
            for (const auto& [row, col, v] : ms[i].triplets())
                out << json{{"type", "entry"}, {"generator", gen}, {"i", i + 1}, {"row", row}, {"col", col}, {"value", v}}
                           .dump()
                    << '\n';
    };
    emit("pi", rep.pi);
    emit("c", rep.c);
}

/// Reads generator matrices back from a dump: result[name][i-1].
inline std::map<std::string, std::vector<OperatorMatrix>> read_matrices(std::istream& in) {
    std::map<std::string, std::vector<OperatorMatrix>> out;
    std::size_t dim = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = json::parse(line);
        const auto type = j.at("type").get<std::string>();
        if (type == "basis") {
            dim = j.at("dim").get<std::size_t>();
            for (const auto& [name, count] : j.at("generators").items())
                out[name].assign(count.get<std::size_t>(), OperatorMatrix(dim));
            continue;
        }
        if (type != "entry") continue;
        auto& list = out[j.at("generator").get<std::string>()];
        const auto i = j.at("i").get<std::size_t>();
        while (list.size() < i) list.emplace_back(dim);
        list[i - 1].add(j.at("row").get<std::size_t>(), j.at("col").get<std::size_t>(), j.at("value").get<std::int64_t>());
    }
    return out;
}

}  // namespace dmod::io
