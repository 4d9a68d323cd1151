#include "raaglab/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace raaglab {

using nlohmann::json;

namespace {

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw domain_error(path + ": " + e.what());
    }
    return j;
}

} // namespace

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw domain_error("graph JSON needs \"vertices\" and \"edges\"");
    if (!j["vertices"].is_array() || !j["edges"].is_array())
        throw domain_error("graph JSON: \"vertices\" and \"edges\" must be arrays");
    std::vector<std::string> vs;
    std::set<std::string> seen;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw domain_error("graph JSON: vertex must be a string");
        if (!seen.insert(v.get<std::string>()).second)
            throw domain_error("graph JSON: duplicate vertex " + v.get<std::string>());
        vs.push_back(v.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> es;
    std::set<std::pair<std::string, std::string>> eseen;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw domain_error("graph JSON: edge must be a pair of strings");
        std::string a = e[0], b = e[1];
        if (a == b) throw domain_error("graph JSON: self-loop at " + a);
        if (!seen.count(a) || !seen.count(b))
            throw domain_error("graph JSON: edge endpoint not declared: [" + a +
                               ", " + b + "]");
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        if (!eseen.insert(key).second)
            throw domain_error("graph JSON: duplicate edge [" + a + ", " + b + "]");
        es.emplace_back(a, b);
    }
    return Graph(vs, es);
}

Graph load_graph(const std::string& path) {
    return graph_from_json(load_file(path));
}

json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertices();
    j["edges"] = json::array();
    for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
    return j;
}

SimplicialComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("maximal_faces") ||
        !j["maximal_faces"].is_array())
        throw domain_error("complex JSON needs a \"maximal_faces\" array");
    std::set<std::string> vset;
    std::vector<std::vector<std::string>> faces;
    for (const auto& f : j["maximal_faces"]) {
        if (!f.is_array()) throw domain_error("complex JSON: face must be an array");
        std::vector<std::string> face;
        for (const auto& v : f) {
            if (!v.is_string())
                throw domain_error("complex JSON: face vertex must be a string");
            face.push_back(v.get<std::string>());
            vset.insert(v.get<std::string>());
        }
        std::set<std::string> uniq(face.begin(), face.end());
        if (uniq.size() != face.size())
            throw domain_error("complex JSON: face repeats a vertex");
        faces.push_back(std::move(face));
    }
    return SimplicialComplex::from_maximal(
        std::vector<std::string>(vset.begin(), vset.end()), faces);
}

SimplicialComplex load_complex(const std::string& path) {
    return complex_from_json(load_file(path));
}

json complex_to_json(const SimplicialComplex& c) {
    // keep only maximal faces
    json j;
    j["maximal_faces"] = json::array();
    for (const auto& f : c.all_faces()) {
        bool maximal = true;
        for (const auto& g : c.all_faces()) {
            if (g.size() <= f.size() || g == f) continue;
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        json face = json::array();
        for (int v : f) face.push_back(c.vertex_labels()[v]);
        j["maximal_faces"].push_back(std::move(face));
    }
    return j;
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw domain_error("matrix JSON must be an array of rows");
    std::vector<std::vector<Int>> rows;
    std::size_t cols = 0;
    for (const auto& r : j) {
        if (!r.is_array()) throw domain_error("matrix JSON: row must be an array");
        std::vector<Int> row;
        for (const auto& e : r) {
            if (e.is_number_integer())
                row.emplace_back(e.get<long long>());
            else if (e.is_string())
                try {
                    row.emplace_back(Int(e.get<std::string>()));
                } catch (const std::exception&) {
                    throw domain_error("matrix JSON: entry is not a decimal "
                                       "integer: " +
                                       e.get<std::string>());
                }
            else
                throw domain_error("matrix JSON: entry must be integer or string");
        }
        if (rows.empty())
            cols = row.size();
        else if (row.size() != cols)
            throw domain_error("matrix JSON: ragged rows");
        rows.push_back(std::move(row));
    }
    return IntMatrix::from_rows(rows);
}

} // namespace raaglab
