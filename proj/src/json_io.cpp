#include "mubtk/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mubtk {

json to_json(const Matrix& m) {
    json entries = json::array();
    for (const auto& z : m.entries()) entries.push_back(json::array({z.real(), z.imag()}));
    return json{{"dim", m.dim()}, {"entries", entries}};
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw std::invalid_argument("matrix JSON: expected object with 'dim' and 'entries'");
    const int dim = j.at("dim").get<int>();
    if (dim < 1) throw std::invalid_argument("matrix JSON: dim must be positive");
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(dim) * dim)
        throw std::invalid_argument("matrix JSON: expected " + std::to_string(dim * dim) + " entries");
    std::vector<Complex> es;
    es.reserve(entries.size());
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw std::invalid_argument("matrix JSON: each entry must be a [re, im] pair");
        const double re = e[0].get<double>();
        const double im = e[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im))
            throw std::invalid_argument("matrix JSON: non-finite entry");
        es.emplace_back(re, im);
    }
    return Matrix(dim, std::move(es));
}

json to_json(const MubSystem& s) {
    json bases = json::array();
    for (const auto& b : s.bases) bases.push_back(to_json(b));
    return json{{"dim", s.dim}, {"bases", bases}};
}

MubSystem mub_system_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("bases"))
        throw std::invalid_argument("MUB JSON: expected object with 'dim' and 'bases'");
    MubSystem s;
    s.dim = j.at("dim").get<int>();
    if (s.dim < 1) throw std::invalid_argument("MUB JSON: dim must be positive");
    for (const auto& b : j.at("bases")) {
        Matrix m = matrix_from_json(b);
        if (m.dim() != s.dim) throw std::invalid_argument("MUB JSON: basis dimension mismatch");
        s.bases.push_back(std::move(m));
    }
    return s;
}

json to_json(const IntegralEstimate& e) {
    return json{{"mean", e.mean}, {"stderr", e.std_err}, {"n", e.n_samples}, {"seed", e.seed}};
}

json to_json(const GramReport& r) {
    json j{{"witness", r.witness_name}, {"m", r.m},       {"lambda_min", r.lambda_min},
           {"seed", r.seed},            {"dim", r.dim}};
    if (r.lambda_min_shifted) j["lambda_min_shifted"] = *r.lambda_min_shifted;
    if (r.note) j["note"] = *r.note;
    return j;
}

json to_json(const AuditReport& r) {
    return json{{"S", r.S},         {"upper", r.upper},
                {"lower", r.lower}, {"valid", r.valid},
                {"max_offdiag", r.max_offdiag}};
}

json to_json(const VerifyReport& r) {
    return json{{"ok", r.ok},
                {"worst_pair", json::array({r.worst_pair.first, r.worst_pair.second})},
                {"worst_deviation", r.worst_deviation}};
}

json to_json(const EpsScanResult& r) {
    json j{{"kind", r.kind},
           {"eps_grid", r.eps_grid},
           {"lambda_min_curve", r.lambda_min_curve},
           {"m", r.m},
           {"trials", r.trials},
           {"per_eps_trials", std::vector<int>(r.eps_grid.size(), r.trials)},
           {"seed", r.seed}};
    j["refuted_at"] = r.refuted_at ? json(*r.refuted_at) : json(nullptr);
    if (r.conditional) {
        j["conditional_bound"] = json{{"eps", r.conditional->eps},
                                      {"m_mean", r.conditional->m_mean},
                                      {"m_stderr", r.conditional->m_std_err},
                                      {"bound_lo", r.conditional->bound_lo},
                                      {"bound_hi", r.conditional->bound_hi},
                                      {"label", r.conditional->label}};
    }
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

}  // namespace mubtk
