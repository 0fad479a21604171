#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "cleftlab/harness.hpp"

namespace cleftlab {

using json = nlohmann::ordered_json;

/// An algebra as loaded from or stored to disk; quiver-built algebras carry
/// their path data so modules can be given in vertex_dims/arrow_maps form.
struct LoadedAlgebra {
    AlgebraPtr algebra;
    std::optional<PathAlgebra> path_data;
};

struct QuiverInput {
    Quiver quiver;
    std::vector<Relation> relations;
    int length_bound = 0;
    unsigned field = 2;
};

/// {"field":p,"vertices":[...],"arrows":[{"name","source","target"}],
///  "relations":[[{"coeff","path":[...]}]],"length_bound":n}
QuiverInput quiver_from_json(const json& j);

json algebra_to_json(const LoadedAlgebra& a);
LoadedAlgebra algebra_from_json(const json& j);

/// {"dim","action":{label:matrix}} or {"vertex_dims":{...},"arrow_maps":{...}};
/// matrices are row-major integer arrays reduced mod p on load.
Module module_from_json(const json& j, const LoadedAlgebra& a);
json module_to_json(const Module& m);

/// {"dim","basis":[...],"left_action":{label:matrix},"right_action":{label:matrix}}
Bimodule bimodule_from_json(const json& j, const AlgebraPtr& left, const AlgebraPtr& right);
json bimodule_to_json(const Bimodule& m);

/// {"table":[[vector]],"nilpotency":m}
ThetaData theta_from_json(const json& j, Bimodule m);
json theta_to_json(const ThetaData& t);

json cleft_to_json(const CleftInstance& c);
/// Re-validates everything on load; corrupted artifacts fail with
/// invariant_error.
CleftInstance cleft_from_json(const json& j);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

/// One JSON object per case, then a trailing summary object. Runtime is not
/// serialized, so equal inputs give byte-identical files.
void write_report_jsonl(const VerificationReport& rep, std::ostream& os);

}  // namespace cleftlab
