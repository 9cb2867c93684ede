#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "eitff/constructions.hpp"
#include "eitff/fusion.hpp"

namespace eitff {

/// {"field", "d", "r", "n", "isometries", "metadata"}; blocks are row-major
/// d x r arrays, complex entries as [re, im].
nlohmann::json ensemble_to_json(const FusionEnsemble& e);
FusionEnsemble ensemble_from_json(const nlohmann::json& j);

/// Matrix as nested rows; real entries as numbers unless force_complex.
nlohmann::json matrix_to_json(const ComplexMatrix& m, bool as_complex);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const CertificationReport& r, bool with_pairs = true);
nlohmann::json certificate_to_json(const IsoclinicCertificate& c);
nlohmann::json parameters_to_json(const ExactParameters& p);

/// Synthesis matrix [Phi_1 ... Phi_n] as CSV; real ensembles only.
void write_csv(const FusionEnsemble& e, std::ostream& out);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace eitff
