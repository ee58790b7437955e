#include "qmarg/io_json.hpp"

#include <fstream>

#include <json.hpp>

namespace qmarg::io {

using nlohmann::json;

namespace {

ComplexMatrix matrix_from_json(const json& state) {
    if (!state.is_object() || !state.contains("re"))
        throw SchemaError("state: expected object with \"re\" (and optional \"im\")");
    const json& re = state["re"];
    if (!re.is_array() || re.empty())
        throw SchemaError("state.re: expected non-empty 2-d array");
    const std::size_t rows = re.size();
    const std::size_t cols = re[0].size();
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!re[r].is_array() || re[r].size() != cols)
            throw SchemaError("state.re: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = cplx{re[r][c].get<double>(), 0.0};
    }
    if (state.contains("im")) {
        const json& im = state["im"];
        if (!im.is_array() || im.size() != rows)
            throw SchemaError("state.im: shape differs from state.re");
        for (std::size_t r = 0; r < rows; ++r) {
            if (!im[r].is_array() || im[r].size() != cols)
                throw SchemaError("state.im: shape differs from state.re");
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) += cplx{0.0, im[r][c].get<double>()};
        }
    }
    return m;
}

json matrix_to_json(const ComplexMatrix& m) {
    json re = json::array(), im = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json re_row = json::array(), im_row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            re_row.push_back(m(r, c).real());
            im_row.push_back(m(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

}  // namespace

feasibility::FeasibilityProblem read_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open problem file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("problem file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("constraints"))
        throw SchemaError("problem: expected object with \"dims\" and \"constraints\"");
    std::vector<int> dims;
    for (const json& d : doc["dims"]) dims.push_back(d.get<int>());

    std::vector<feasibility::Constraint> constraints;
    for (const json& c : doc["constraints"]) {
        if (!c.is_object() || !c.contains("subsystems") || !c.contains("state"))
            throw SchemaError("constraint: expected \"subsystems\" and \"state\"");
        feasibility::Constraint fc;
        for (const json& s : c["subsystems"]) fc.subsystems.push_back(s.get<int>());
        fc.target = matrix_from_json(c["state"]);
        constraints.push_back(std::move(fc));
    }
    try {
        return feasibility::FeasibilityProblem(TensorSpace(std::move(dims)),
                                               std::move(constraints));
    } catch (const std::exception& e) {
        throw SchemaError(std::string("problem rejected: ") + e.what());
    }
}

void write_state_file(const std::string& path, const ComplexMatrix& m,
                      const std::vector<int>& dims) {
    json doc{{"dims", dims}, {"state", matrix_to_json(m)}};
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << doc.dump(1) << "\n";
}

void write_report_file(const std::string& path,
                       const feasibility::FeasibilityReport& report,
                       const std::vector<int>& dims) {
    json doc{{"verdict", verdict_name(report.verdict)},
             {"residual", report.residual},
             {"iterations", report.iterations}};
    if (report.witness) {
        doc["witness"] = matrix_to_json(*report.witness);
        doc["dims"] = dims;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << doc.dump(1) << "\n";
}

std::string verdict_name(feasibility::Verdict v) {
    switch (v) {
        case feasibility::Verdict::Feasible: return "feasible";
        case feasibility::Verdict::Infeasible: return "infeasible";
        case feasibility::Verdict::Undecided: return "undecided";
    }
    return "undecided";
}

}  // namespace qmarg::io
