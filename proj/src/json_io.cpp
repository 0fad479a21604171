#include "cleftlab/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

namespace cleftlab {

namespace {

unsigned field_of(const json& j, const char* key = "field") {
    if (!j.contains(key) || !j[key].is_number_integer()) throw schema_error("missing or non-integer 'field'");
    int p = j[key].get<int>();
    if (!is_supported_prime(unsigned(p))) throw schema_error("field must be one of 2, 3, 5, 7");
    return unsigned(p);
}

int reduce_mod(long long v, unsigned p) {
    long long r = v % static_cast<long long>(p);
    return int(r < 0 ? r + p : r);
}

/// Row-major integer array: nested rows, or flat when the shape is known.
Matrix matrix_from_json(const json& j, int rows, int cols, unsigned p, const std::string& where) {
    Matrix m(rows, cols, p);
    if (!j.is_array()) throw schema_error(where + ": matrix must be an array");
    if (!j.empty() && j[0].is_array()) {
        if (int(j.size()) != rows) throw schema_error(where + ": expected " + std::to_string(rows) + " rows");
        for (int i = 0; i < rows; ++i) {
            if (int(j[i].size()) != cols) throw schema_error(where + ": ragged matrix row");
            for (int c = 0; c < cols; ++c) {
                if (!j[i][c].is_number_integer()) throw schema_error(where + ": non-integer entry");
                m.set(i, c, reduce_mod(j[i][c].get<long long>(), p));
            }
        }
        return m;
    }
    if (int(j.size()) != rows * cols) throw schema_error(where + ": flat matrix length mismatch");
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) {
            const json& e = j[size_t(i) * cols + c];
            if (!e.is_number_integer()) throw schema_error(where + ": non-integer entry");
            m.set(i, c, reduce_mod(e.get<long long>(), p));
        }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(int(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Vec vec_from_json(const json& j, int len, unsigned p, const std::string& where) {
    if (!j.is_array() || int(j.size()) != len) throw schema_error(where + ": expected a vector of length " +
                                                                  std::to_string(len));
    Vec v(len);
    for (int i = 0; i < len; ++i) {
        if (!j[i].is_number_integer()) throw schema_error(where + ": non-integer entry");
        v[i] = uint8_t(reduce_mod(j[i].get<long long>(), p));
    }
    return v;
}

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (uint8_t x : v) a.push_back(int(x));
    return a;
}

}  // namespace

QuiverInput quiver_from_json(const json& j) {
    QuiverInput in;
    in.field = field_of(j);
    if (!j.contains("vertices") || !j["vertices"].is_array()) throw schema_error("missing 'vertices'");
    for (const auto& v : j["vertices"]) in.quiver.vertices.push_back(v.get<std::string>());
    if (j.contains("arrows"))
        for (const auto& a : j["arrows"]) {
            Arrow ar;
            ar.name = a.at("name").get<std::string>();
            ar.source = in.quiver.vertex_index(a.at("source").get<std::string>());
            ar.target = in.quiver.vertex_index(a.at("target").get<std::string>());
            in.quiver.arrows.push_back(std::move(ar));
        }
    in.quiver.check();
    auto arrow_index = [&](const std::string& name) {
        for (size_t i = 0; i < in.quiver.arrows.size(); ++i)
            if (in.quiver.arrows[i].name == name) return int(i);
        throw schema_error("unknown arrow '" + name + "' in relation");
    };
    if (j.contains("relations"))
        for (const auto& rel : j["relations"]) {
            if (!rel.is_array() || rel.empty()) throw schema_error("relation must be a non-empty array of terms");
            Relation r;
            for (const auto& term : rel) {
                Relation::Term t;
                t.coeff = uint8_t(reduce_mod(term.value("coeff", 1), in.field));
                if (!term.contains("path") || !term["path"].is_array() || term["path"].empty())
                    throw schema_error("relation term needs a non-empty 'path'");
                for (const auto& an : term["path"]) t.arrows.push_back(arrow_index(an.get<std::string>()));
                r.terms.push_back(std::move(t));
            }
            in.relations.push_back(std::move(r));
        }
    if (!j.contains("length_bound")) throw schema_error("missing 'length_bound'");
    in.length_bound = j["length_bound"].get<int>();
    return in;
}

json algebra_to_json(const LoadedAlgebra& a) {
    const Algebra& alg = *a.algebra;
    json j;
    j["kind"] = "algebra";
    j["field"] = int(alg.p);
    j["dim"] = alg.dim;
    j["basis"] = alg.basis_labels;
    json mult = json::array();
    for (int i = 0; i < alg.dim; ++i) {
        json row = json::array();
        for (int k = 0; k < alg.dim; ++k) row.push_back(vec_to_json(alg.mult[i][k]));
        mult.push_back(std::move(row));
    }
    j["mult"] = std::move(mult);
    j["unit"] = vec_to_json(alg.unit);
    json idem = json::array();
    for (const auto& e : alg.idempotents) idem.push_back(vec_to_json(e));
    j["idempotents"] = std::move(idem);
    j["radical"] = matrix_to_json(alg.radical.vectors);
    if (a.path_data) {
        const PathAlgebra& pa = *a.path_data;
        json q;
        q["vertices"] = pa.quiver.vertices;
        json arrows = json::array();
        for (const auto& ar : pa.quiver.arrows)
            arrows.push_back(json{{"name", ar.name},
                                  {"source", pa.quiver.vertices[ar.source]},
                                  {"target", pa.quiver.vertices[ar.target]}});
        q["arrows"] = std::move(arrows);
        j["quiver"] = std::move(q);
        j["vertex_basis_index"] = pa.vertex_basis_index;
        j["arrow_basis_index"] = pa.arrow_basis_index;
        j["basis_path"] = pa.basis_path;
        j["basis_path_source"] = pa.basis_path_source;
    }
    return j;
}

LoadedAlgebra algebra_from_json(const json& j) {
    if (j.value("kind", "") != "algebra") throw schema_error("not an algebra artifact");
    unsigned p = field_of(j);
    Algebra alg;
    alg.p = p;
    alg.dim = j.at("dim").get<int>();
    for (const auto& l : j.at("basis")) alg.basis_labels.push_back(l.get<std::string>());
    if (int(alg.basis_labels.size()) != alg.dim) throw schema_error("basis label count != dim");
    const json& mult = j.at("mult");
    if (int(mult.size()) != alg.dim) throw schema_error("mult table has wrong size");
    alg.mult.assign(alg.dim, std::vector<Vec>(alg.dim));
    for (int i = 0; i < alg.dim; ++i) {
        if (int(mult[i].size()) != alg.dim) throw schema_error("mult table row has wrong size");
        for (int k = 0; k < alg.dim; ++k) alg.mult[i][k] = vec_from_json(mult[i][k], alg.dim, p, "mult");
    }
    alg.unit = vec_from_json(j.at("unit"), alg.dim, p, "unit");
    for (const auto& e : j.at("idempotents")) alg.idempotents.push_back(vec_from_json(e, alg.dim, p, "idempotents"));
    {
        const json& rad = j.at("radical");
        std::vector<Vec> rows;
        for (const auto& r : rad) rows.push_back(vec_from_json(r, alg.dim, p, "radical"));
        alg.radical = Basis(rows.empty() ? Matrix(0, alg.dim, p) : Matrix::from_rows(rows, alg.dim, p));
    }
    LoadedAlgebra out;
    out.algebra = finish_algebra(std::move(alg));
    auto rep = validate(*out.algebra);
    if (!rep.all_pass()) throw invariant_error("algebra artifact fails validation:\n" + rep.to_string());

    if (j.contains("quiver")) {
        PathAlgebra pa;
        pa.algebra = out.algebra;
        for (const auto& v : j["quiver"].at("vertices")) pa.quiver.vertices.push_back(v.get<std::string>());
        for (const auto& a : j["quiver"].at("arrows")) {
            Arrow ar;
            ar.name = a.at("name").get<std::string>();
            ar.source = pa.quiver.vertex_index(a.at("source").get<std::string>());
            ar.target = pa.quiver.vertex_index(a.at("target").get<std::string>());
            pa.quiver.arrows.push_back(std::move(ar));
        }
        pa.vertex_basis_index = j.at("vertex_basis_index").get<std::vector<int>>();
        pa.arrow_basis_index = j.at("arrow_basis_index").get<std::vector<int>>();
        pa.basis_path = j.at("basis_path").get<std::vector<std::vector<int>>>();
        pa.basis_path_source = j.at("basis_path_source").get<std::vector<int>>();
        out.path_data = std::move(pa);
    }
    return out;
}

Module module_from_json(const json& j, const LoadedAlgebra& a) {
    const Algebra& alg = *a.algebra;
    if (j.contains("vertex_dims") || j.contains("arrow_maps")) {
        if (!a.path_data) throw schema_error("vertex_dims form requires a quiver-built algebra artifact");
        const PathAlgebra& pa = *a.path_data;
        std::vector<int> dims(pa.quiver.vertices.size(), 0);
        if (j.contains("vertex_dims"))
            for (const auto& [label, d] : j["vertex_dims"].items())
                dims[pa.quiver.vertex_index(label)] = d.get<int>();
        std::vector<Matrix> maps;
        for (size_t ai = 0; ai < pa.quiver.arrows.size(); ++ai) {
            const Arrow& ar = pa.quiver.arrows[ai];
            int rows = dims[ar.target], cols = dims[ar.source];
            Matrix m(rows, cols, alg.p);
            if (j.contains("arrow_maps") && j["arrow_maps"].contains(ar.name))
                m = matrix_from_json(j["arrow_maps"][ar.name], rows, cols, alg.p, "arrow_maps." + ar.name);
            maps.push_back(std::move(m));
        }
        return module_from_representation(pa, dims, maps);
    }
    if (!j.contains("dim") || !j.contains("action")) throw schema_error("module needs 'dim' and 'action'");
    Module m;
    m.algebra = a.algebra;
    m.dim = j["dim"].get<int>();
    m.action.assign(alg.dim, Matrix(m.dim, m.dim, alg.p));
    for (int i = 0; i < alg.dim; ++i) {
        const std::string& label = alg.basis_labels[i];
        if (!j["action"].contains(label)) throw schema_error("action missing basis element '" + label + "'");
        m.action[i] = matrix_from_json(j["action"][label], m.dim, m.dim, alg.p, "action." + label);
    }
    for (const auto& [key, val] : j["action"].items()) {
        (void)val;
        if (std::find(alg.basis_labels.begin(), alg.basis_labels.end(), key) == alg.basis_labels.end())
            throw schema_error("action names unknown basis element '" + key + "'");
    }
    std::string why;
    if (!check_module(m, &why)) throw invariant_error("module data violates the module law: " + why);
    return m;
}

json module_to_json(const Module& m) {
    json j;
    j["dim"] = m.dim;
    json action;
    for (int i = 0; i < m.algebra->dim; ++i) action[m.algebra->basis_labels[i]] = matrix_to_json(m.action[i]);
    j["action"] = std::move(action);
    return j;
}

Bimodule bimodule_from_json(const json& j, const AlgebraPtr& left, const AlgebraPtr& right) {
    Bimodule m;
    m.left_algebra = left;
    m.right_algebra = right;
    m.dim = j.at("dim").get<int>();
    if (j.contains("basis") && int(j["basis"].size()) != m.dim) throw schema_error("bimodule basis size != dim");
    auto load_side = [&](const char* key, const AlgebraPtr& alg, std::vector<Matrix>& out) {
        if (!j.contains(key)) throw schema_error(std::string("bimodule missing '") + key + "'");
        for (int i = 0; i < alg->dim; ++i) {
            const std::string& label = alg->basis_labels[i];
            if (!j[key].contains(label))
                throw schema_error(std::string(key) + " missing basis element '" + label + "'");
            out.push_back(matrix_from_json(j[key][label], m.dim, m.dim, alg->p, std::string(key) + "." + label));
        }
    };
    load_side("left_action", left, m.left_action);
    load_side("right_action", right, m.right_action);
    std::string why;
    if (!check_bimodule(m, &why)) throw invariant_error("bimodule data invalid: " + why);
    return m;
}

json bimodule_to_json(const Bimodule& m) {
    json j;
    j["dim"] = m.dim;
    json basis = json::array();
    for (int i = 0; i < m.dim; ++i) basis.push_back("m" + std::to_string(i));
    j["basis"] = std::move(basis);
    json left, right;
    for (int i = 0; i < m.left_algebra->dim; ++i)
        left[m.left_algebra->basis_labels[i]] = matrix_to_json(m.left_action[i]);
    for (int i = 0; i < m.right_algebra->dim; ++i)
        right[m.right_algebra->basis_labels[i]] = matrix_to_json(m.right_action[i]);
    j["left_action"] = std::move(left);
    j["right_action"] = std::move(right);
    return j;
}

ThetaData theta_from_json(const json& j, Bimodule m) {
    ThetaData t;
    const unsigned p = m.left_algebra->p;
    const int d = m.dim;
    if (!j.contains("table")) throw schema_error("theta needs 'table'");
    const json& table = j["table"];
    if (int(table.size()) != d) throw schema_error("theta table has wrong size");
    t.table.assign(d, std::vector<Vec>(d));
    for (int i = 0; i < d; ++i) {
        if (int(table[i].size()) != d) throw schema_error("theta table row has wrong size");
        for (int k = 0; k < d; ++k) t.table[i][k] = vec_from_json(table[i][k], d, p, "theta.table");
    }
    if (j.contains("nilpotency")) t.nilpotency = j["nilpotency"].get<int>();
    t.bimodule = std::move(m);
    return t;
}

json theta_to_json(const ThetaData& t) {
    json j;
    json table = json::array();
    for (int i = 0; i < t.bimodule.dim; ++i) {
        json row = json::array();
        for (int k = 0; k < t.bimodule.dim; ++k) row.push_back(vec_to_json(t.table[i][k]));
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    if (t.nilpotency) j["nilpotency"] = *t.nilpotency;
    return j;
}

json cleft_to_json(const CleftInstance& c) {
    json j;
    j["kind"] = "cleft";
    j["base"] = algebra_to_json({c.base, std::nullopt});
    j["bimodule"] = bimodule_to_json(c.theta.bimodule);
    j["theta"] = theta_to_json(c.theta);
    j["total"] = algebra_to_json({c.total, std::nullopt});
    return j;
}

CleftInstance cleft_from_json(const json& j) {
    if (j.value("kind", "") != "cleft") throw schema_error("not a cleft-extension artifact");
    LoadedAlgebra base = algebra_from_json(j.at("base"));
    Bimodule m = bimodule_from_json(j.at("bimodule"), base.algebra, base.algebra);
    ThetaData t = theta_from_json(j.at("theta"), std::move(m));
    CleftInstance c = theta_extension(base.algebra, t);  // re-validates everything
    LoadedAlgebra total = algebra_from_json(j.at("total"));
    if (!same_algebra(c.total, total.algebra))
        throw invariant_error("stored total algebra disagrees with the rebuilt theta extension");
    return c;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw schema_error("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw schema_error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

void write_report_jsonl(const VerificationReport& rep, std::ostream& os) {
    for (const auto& c : rep.cases) {
        json line;
        line["theorem"] = rep.theorem;
        line["case"] = c.index;
        line["desc"] = c.desc;
        line["skipped"] = c.skipped;
        if (c.skipped) {
            line["skip_reason"] = c.skip_reason;
        } else {
            if (c.left) line["left"] = *c.left;
            if (c.right) line["right"] = *c.right;
            line["pass"] = c.pass;
        }
        if (!c.detail.empty()) line["detail"] = c.detail;
        os << line.dump() << "\n";
    }
    json summary;
    summary["summary"] = true;
    summary["theorem"] = rep.theorem;
    summary["instance"] = rep.instance;
    summary["preamble"] = rep.preamble;
    summary["field"] = int(rep.field);
    summary["seed"] = rep.seed;
    summary["catalog_bound_r"] = rep.catalog_bound_r;
    summary["catalog_bound_t"] = rep.catalog_bound_t;
    summary["catalog_provenance_r"] = rep.catalog_provenance_r;
    summary["catalog_provenance_t"] = rep.catalog_provenance_t;
    summary["cases"] = rep.cases.size();
    summary["checked"] = rep.checked();
    summary["non_vacuous"] = rep.non_vacuous();
    summary["skipped"] = rep.skipped();
    summary["counterexamples"] = rep.counterexamples();
    summary["pass"] = rep.pass();
    os << summary.dump() << "\n";
}

}  // namespace cleftlab
