#include "descm/io.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace descm {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

RationalPotential potential_from_json(const json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("potential: expected a JSON object");
    }
    if (!j.contains("omega") || !j.contains("m") || !j.contains("lambda")) {
        throw std::invalid_argument("potential: fields omega, m, lambda are required");
    }
    const double omega = j.at("omega").get<double>();
    const int m = j.at("m").get<int>();
    std::vector<double> lambda = j.at("lambda").get<std::vector<double>>();
    const bool has_coeffs = j.contains("q_coeffs");
    const bool has_roots = j.contains("q_roots");
    if (has_coeffs == has_roots) {
        throw std::invalid_argument("potential: exactly one of q_coeffs or q_roots is required");
    }
    if (has_coeffs) {
        return RationalPotential::from_coeffs(omega, m, std::move(lambda),
                                              j.at("q_coeffs").get<std::vector<double>>());
    }
    std::vector<Complex> roots;
    for (const auto& pair : j.at("q_roots")) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("potential: q_roots entries must be [re, im]");
        }
        roots.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return RationalPotential::from_roots(omega, m, std::move(lambda), std::move(roots));
}

json potential_to_json(const RationalPotential& potential) {
    json j;
    j["omega"] = potential.omega();
    j["m"] = potential.m();
    j["lambda"] = potential.numerator();
    if (!potential.q_roots().empty()) {
        json roots = json::array();
        for (const Complex& z : potential.q_roots()) {
            roots.push_back({z.real(), z.imag()});
        }
        j["q_roots"] = roots;
    } else {
        j["q_coeffs"] = potential.q_coeffs();
    }
    return j;
}

json map_report(const ConformalMap& map) {
    json j;
    j["kind"] = to_string(map.kind);
    j["u0"] = map.u0;
    j["u"] = map.adjust;
    j["gamma"] = map.gamma;
    j["d"] = map.d;
    j["preimages"] = map.preimages;
    j["residuals"] = map.residuals;
    if (!map.fallback_reason.empty()) {
        j["fallback_reason"] = map.fallback_reason;
    }
    return j;
}

json records_to_json(const std::vector<ConvergenceRecord>& records) {
    json out = json::array();
    for (const ConvergenceRecord& r : records) {
        json jr;
        jr["N"] = r.N;
        jr["h"] = r.h;
        jr["map_kind"] = to_string(r.map_kind);
        jr["eigenvalues"] = r.eigenvalues;
        jr["eps"] = r.eps;
        out.push_back(std::move(jr));
    }
    return out;
}

json study_to_json(const StudyReport& report) {
    json j;
    j["seed"] = report.seed;
    j["m"] = report.m;
    j["l"] = report.l;
    j["count"] = report.count;
    j["tol"] = report.tol;
    j["n_max"] = report.n_max;
    j["levels"] = report.levels;
    j["generator"] = "splitmix64";
    j["min_im_resampled_below"] = 1e-3;
    json entries = json::array();
    for (const StudyEntry& e : report.entries) {
        json je;
        je["potential_id"] = e.potential_id;
        je["seed"] = e.seed;
        je["potential"] = potential_to_json(e.potential);
        je["map"] = map_report(e.map);
        je["n_to_tol"] = e.n_to_tol;
        je["final_eigenvalues"] = e.final_eigenvalues;
        je["converged"] = e.converged;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return j;
}

void write_records_csv(std::ostream& os, const std::vector<ConvergenceRecord>& records,
                       int potential_id) {
    os << "potential_id,N,h,level,energy,eps\n";
    for (const ConvergenceRecord& r : records) {
        for (std::size_t n = 0; n < r.eigenvalues.size(); ++n) {
            os << potential_id << ',' << r.N << ',' << format_double(r.h) << ','
               << n << ',' << format_double(r.eigenvalues[n]) << ',';
            if (n < r.eps.size()) {
                os << format_double(r.eps[n]);
            }
            os << '\n';
        }
    }
}

void write_study_csv(std::ostream& os, const StudyReport& report) {
    os << "potential_id,level,N,eps\n";
    for (const StudyEntry& e : report.entries) {
        for (const ConvergenceRecord& r : e.records) {
            for (std::size_t n = 0; n < r.eps.size(); ++n) {
                os << e.potential_id << ',' << n << ',' << r.N << ','
                   << format_double(r.eps[n]) << '\n';
            }
        }
    }
}

void write_study_gnuplot(std::ostream& os, const std::string& csv_path) {
    os << "set datafile separator ','\n"
          "set logscale y\n"
          "set xlabel 'N'\n"
          "set ylabel 'eps_0(N)'\n"
          "set key off\n"
          "plot for [id=0:*] '" << csv_path
       << "' using ($2==0 && $1==id ? $3 : NaN):4 with lines\n";
}

} // namespace descm
