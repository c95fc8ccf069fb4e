#include "slocc2mn/state_io.hpp"

#include <json.hpp>

#include "slocc2mn/catalog.hpp"

namespace slocc::io {

using nlohmann::json;

namespace {

std::vector<std::vector<std::string>> matrix_strings(const ExactMatrix& m) {
    std::vector<std::vector<std::string>> rows(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        rows[i].reserve(m.cols());
        for (int j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j).str());
    }
    return rows;
}

json label_json(const pencil::ClassLabel& label) {
    json j;
    j["m"] = label.m_dim;
    j["n"] = label.n_dim;
    j["null_rows"] = label.null_rows;
    j["b_rank_excess"] = label.b_rank_excess;
    json segre = json::array();
    for (const auto& g : label.segre_shape.groups) segre.push_back(g);
    j["segre"] = segre;
    j["col_min_indices"] = label.col_min_indices;
    j["row_min_indices"] = label.row_min_indices;
    if (label.eigen) {
        json params = json::array();
        for (const auto& v : label.eigen->values) params.push_back(v.str());
        j["params"] = params;
        json roles = json::array();
        for (const auto& r : label.eigen->roles) roles.push_back(r);
        j["eigen_roles"] = roles;
    } else {
        j["params"] = nullptr;
        j["eigen_roles"] = nullptr;
    }
    if (label.opaque_b_index)
        j["b_index"] = *label.opaque_b_index;
    else
        j["b_index"] = nullptr;
    return j;
}

} // namespace

StateDocument parse_state_document(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    StateDocument doc;
    try {
        doc.m = j.at("m").get<int>();
        doc.n = j.at("n").get<int>();
        doc.gamma1 = j.at("gamma1").get<std::vector<std::vector<std::string>>>();
        doc.gamma2 = j.at("gamma2").get<std::vector<std::vector<std::string>>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("state document: ") + e.what());
    }
    return doc;
}

pencil::PencilState to_state(const StateDocument& doc) {
    if (doc.m < 2 || doc.n < 2) throw ParseError("state document needs m, n >= 2");
    auto build = [&](const std::vector<std::vector<std::string>>& rows, const char* which) {
        if (static_cast<int>(rows.size()) != doc.m)
            throw ParseError(std::string(which) + ": expected " + std::to_string(doc.m) + " rows");
        ExactMatrix g(doc.m, doc.n);
        for (int i = 0; i < doc.m; ++i) {
            if (static_cast<int>(rows[i].size()) != doc.n)
                throw ParseError(std::string(which) + ": ragged row " + std::to_string(i));
            for (int j = 0; j < doc.n; ++j) g.at(i, j) = parse_scalar(rows[i][j]);
        }
        return g;
    };
    return {build(doc.gamma1, "gamma1"), build(doc.gamma2, "gamma2")};
}

StateDocument from_state(const pencil::PencilState& s) {
    return {s.m_dim, s.n_dim, matrix_strings(s.gamma1), matrix_strings(s.gamma2)};
}

std::string state_to_json(const pencil::PencilState& s, int indent) {
    json j;
    j["m"] = s.m_dim;
    j["n"] = s.n_dim;
    j["gamma1"] = matrix_strings(s.gamma1);
    j["gamma2"] = matrix_strings(s.gamma2);
    return j.dump(indent);
}

std::string label_to_json(const pencil::ClassLabel& label, int indent) {
    return label_json(label).dump(indent);
}

std::string catalog_to_json(int m, int n, int indent) {
    json j;
    j["m"] = m;
    j["n"] = n;
    auto labels = catalog::enumerate_labels(m, n);
    j["count"] = labels.size();
    json arr = json::array();
    for (const auto& label : labels) {
        json entry = label_json(label);
        if (auto rep = catalog::representative(label)) {
            json st;
            st["m"] = rep->m_dim;
            st["n"] = rep->n_dim;
            st["gamma1"] = matrix_strings(rep->gamma1);
            st["gamma2"] = matrix_strings(rep->gamma2);
            entry["representative"] = st;
        } else {
            entry["representative"] = nullptr;
        }
        arr.push_back(std::move(entry));
    }
    j["labels"] = arr;
    return j.dump(indent);
}

} // namespace slocc::io
