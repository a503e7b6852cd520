#pragma once

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nmu/invariance.hpp"
#include "nmu/poset.hpp"
#include "nmu/sorting.hpp"

namespace nmu {

// Poset file schema, one object per file:
//   {"kind":"grid", "r":R, "c":C}
//   {"kind":"cylinder", "k":K, "n":N, "members":[[a,b],...]}
//   {"kind":"explicit", "elements":[...], "covers":[[u,v],...],
//    "rows":[[...],...], "columns":[[...],...]}
inline Poset poset_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("poset file must be an object with a \"kind\" field");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "grid") {
        return build_grid(j.at("r").get<int>(), j.at("c").get<int>());
    }
    if (kind == "cylinder") {
        CylinderSpec spec{j.at("k").get<long long>(), j.at("n").get<long long>()};
        std::vector<Coord> members;
        for (const auto& m : j.at("members")) {
            if (!m.is_array() || m.size() != 2)
                throw std::invalid_argument("cylinder members must be [a,b] pairs");
            members.push_back({m[0].get<long long>(), m[1].get<long long>()});
        }
        return build_cylinder_convex(spec, members);
    }
    if (kind == "explicit") {
        std::vector<std::string> ids = j.at("elements").get<std::vector<std::string>>();
        std::vector<std::pair<std::string, std::string>> covers;
        for (const auto& e : j.at("covers")) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("covers must be [lower,upper] pairs");
            covers.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
        auto chains = [](const nlohmann::json& arr) {
            std::vector<std::vector<std::string>> out;
            for (const auto& ch : arr) out.push_back(ch.get<std::vector<std::string>>());
            return out;
        };
        return build_explicit(ids, covers, chains(j.at("rows")), chains(j.at("columns")));
    }
    throw std::invalid_argument("unknown poset kind: " + kind);
}

inline nlohmann::json poset_to_json(const Poset& p) {
    nlohmann::json j;
    switch (p.backing) {
        case Backing::Grid:
            j["kind"] = "grid";
            j["r"] = p.grid_r;
            j["c"] = p.grid_c;
            return j;
        case Backing::CylinderConvex: {
            j["kind"] = "cylinder";
            j["k"] = p.cylinder->k;
            j["n"] = p.cylinder->n;
            nlohmann::json members = nlohmann::json::array();
            for (const auto& c : p.coords) members.push_back({c->a, c->b});
            j["members"] = members;
            return j;
        }
        case Backing::GridConvex:
        case Backing::Explicit: {
            j["kind"] = "explicit";
            j["elements"] = p.ids;
            nlohmann::json covers = nlohmann::json::array();
            for (const auto& [u, v] : p.cover_pairs()) covers.push_back({p.ids[u], p.ids[v]});
            j["covers"] = covers;
            auto chains = [&](const std::vector<Chain>& family) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& ch : family) {
                    nlohmann::json seq = nlohmann::json::array();
                    for (ElemId e : ch) seq.push_back(p.ids[e]);
                    arr.push_back(seq);
                }
                return arr;
            };
            j["rows"] = chains(p.rows);
            j["columns"] = chains(p.columns);
            return j;
        }
    }
    throw std::logic_error("unhandled backing");
}

inline Poset load_poset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open poset file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("poset file " + path + " is not valid JSON: " + e.what());
    }
    return poset_from_json(j);
}

// Whitespace-separated integer rows, one matrix row per line.
inline std::vector<std::vector<Label>> parse_matrix(const std::string& text) {
    std::vector<std::vector<Label>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::vector<Label> row;
        Label v;
        while (fields >> v) row.push_back(v);
        if (!fields.eof()) throw std::invalid_argument("matrix line has a non-integer token: " + line);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("matrix input is empty");
    for (const auto& row : rows)
        if (row.size() != rows[0].size())
            throw std::invalid_argument("matrix rows have unequal lengths");
    return rows;
}

// Matrix entry at display row i, column j labels grid element (i,j);
// the top-left entry labels the poset minimum.
inline Labeling labeling_from_matrix(const Poset& grid, const std::vector<std::vector<Label>>& m) {
    if (grid.backing != Backing::Grid)
        throw std::invalid_argument("matrix labelings apply to grid posets only");
    if (static_cast<int>(m.size()) != grid.grid_r ||
        static_cast<int>(m[0].size()) != grid.grid_c)
        throw std::invalid_argument("matrix shape does not match the grid");
    Labeling l(grid.size());
    for (int i = 0; i < grid.grid_r; ++i)
        for (int j = 0; j < grid.grid_c; ++j) l[i * grid.grid_c + j] = m[i][j];
    return l;
}

inline std::vector<std::vector<Label>> labeling_to_matrix(const Poset& grid, const Labeling& l) {
    if (grid.backing != Backing::Grid)
        throw std::invalid_argument("matrix rendering applies to grid posets only");
    require_total(grid, l);
    std::vector<std::vector<Label>> m(grid.grid_r, std::vector<Label>(grid.grid_c));
    for (int i = 0; i < grid.grid_r; ++i)
        for (int j = 0; j < grid.grid_c; ++j) m[i][j] = l[i * grid.grid_c + j];
    return m;
}

inline Labeling labeling_from_json(const Poset& p, const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("labeling JSON must map element ids to labels");
    Labeling l(p.size());
    std::vector<bool> seen(p.size(), false);
    for (const auto& [key, value] : j.items()) {
        ElemId e = p.index_of(key);
        if (!value.is_number_integer())
            throw std::invalid_argument("label for " + key + " is not an integer");
        l[e] = value.get<Label>();
        seen[e] = true;
    }
    for (ElemId e = 0; e < p.size(); ++e)
        if (!seen[e]) throw std::invalid_argument("labeling misses element " + p.ids[e]);
    return l;
}

inline nlohmann::json labeling_to_json(const Poset& p, const Labeling& l) {
    require_total(p, l);
    nlohmann::json j = nlohmann::json::object();
    for (ElemId e = 0; e < p.size(); ++e) j[p.ids[e]] = l[e];
    return j;
}

// Labeling file: a JSON object keyed by element id, or (for grid posets)
// a plain text matrix.
inline Labeling load_labeling(const Poset& p, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open labeling file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("labeling file " + path + " is not valid JSON: " + e.what());
        }
        return labeling_from_json(p, j);
    }
    return labeling_from_matrix(p, parse_matrix(text));
}

// Cover diagram in DOT, row edges dashed and column edges solid, members
// of bad corner-sets highlighted.
inline std::string to_dot(const Poset& p, const Labeling* l,
                          const std::vector<BadnessVerdict>& bad) {
    std::set<ElemId> hot;
    for (const auto& v : bad)
        for (ElemId e : v.cs.members()) hot.insert(e);
    std::ostringstream out;
    out << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (ElemId e = 0; e < p.size(); ++e) {
        out << "  \"" << p.ids[e] << "\"";
        out << " [label=\"" << p.ids[e];
        if (l) out << "\\n" << (*l)[e];
        out << "\"";
        if (hot.count(e)) out << ", style=filled, fillcolor=lightcoral";
        out << "];\n";
    }
    std::set<std::pair<ElemId, ElemId>> row_edges, col_edges;
    for (const auto& ch : p.rows)
        for (size_t i = 0; i + 1 < ch.size(); ++i) row_edges.emplace(ch[i], ch[i + 1]);
    for (const auto& ch : p.columns)
        for (size_t i = 0; i + 1 < ch.size(); ++i) col_edges.emplace(ch[i], ch[i + 1]);
    for (const auto& [u, v] : row_edges)
        out << "  \"" << p.ids[u] << "\" -> \"" << p.ids[v] << "\" [style=dashed];\n";
    for (const auto& [u, v] : col_edges)
        out << "  \"" << p.ids[u] << "\" -> \"" << p.ids[v] << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace nmu
