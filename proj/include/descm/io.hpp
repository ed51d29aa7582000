#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "descm/convergence.hpp"

namespace descm {

// Potential description: {"omega", "m", "lambda", and exactly one of
// "q_coeffs" (ascending, first entry 1) or "q_roots" ([[re, im], ...],
// im > 0)}. Throws std::invalid_argument on malformed input.
RationalPotential potential_from_json(const nlohmann::json& j);
nlohmann::json potential_to_json(const RationalPotential& potential);

nlohmann::json map_report(const ConformalMap& map);

nlohmann::json records_to_json(const std::vector<ConvergenceRecord>& records);
nlohmann::json study_to_json(const StudyReport& report);

// Record-stream CSV: potential_id,N,h,level,energy,eps with 17 significant
// digits. A missing eps (first N) is left empty.
void write_records_csv(std::ostream& os, const std::vector<ConvergenceRecord>& records,
                       int potential_id = 0);

// Study CSV: potential_id,level,N,eps — one convergence trace per potential.
void write_study_csv(std::ostream& os, const StudyReport& report);

// gnuplot script plotting the study CSV traces (eps vs N, log scale)
void write_study_gnuplot(std::ostream& os, const std::string& csv_path);

std::string format_double(double v);  // round-trip %.17g formatting

} // namespace descm
