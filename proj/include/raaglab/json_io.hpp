#ifndef RAAGLAB_JSON_IO_HPP
#define RAAGLAB_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "raaglab/graph.hpp"
#include "raaglab/int_linalg.hpp"
#include "raaglab/simplicial.hpp"

namespace raaglab {

/// {"vertices": ["a", ...], "edges": [["a","b"], ...]}; strict validation.
Graph graph_from_json(const nlohmann::json& j);
Graph load_graph(const std::string& path);
nlohmann::json graph_to_json(const Graph& g);

/// {"maximal_faces": [["v1","v2"], ...]}; vertex set inferred, downward
/// closure computed on load.
SimplicialComplex complex_from_json(const nlohmann::json& j);
SimplicialComplex load_complex(const std::string& path);
nlohmann::json complex_to_json(const SimplicialComplex& c);

/// Matrices serialize as arrays of rows of decimal strings (entries may
/// exceed 64 bits).
nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

} // namespace raaglab

#endif
