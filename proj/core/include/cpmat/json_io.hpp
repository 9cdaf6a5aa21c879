#pragma once

#include <nlohmann/json.hpp>

#include "cpmat/assignment.hpp"
#include "cpmat/bipartite.hpp"
#include "cpmat/color_rule.hpp"
#include "cpmat/pattern_matrix.hpp"
#include "cpmat/polynomial.hpp"
#include "cpmat/rational_matrix.hpp"
#include "cpmat/system.hpp"
#include "cpmat/verification.hpp"

namespace cpmat {

/// JSON serialization for every certificate, trace and report type.  All
/// object keys are emitted in sorted order (nlohmann::json's default map),
/// all vertex and row references are 1-based, rationals are strings like
/// "-3/2", and nothing here depends on time, locale or platform -- equal
/// values serialize to byte-identical text.

nlohmann::json to_json(const ColoredPatternMatrix& m,
                       std::optional<std::size_t> state_dim = std::nullopt);
nlohmann::json to_json(const Diagnostic& d);
nlohmann::json to_json(const RationalMatrix& m);
nlohmann::json to_json(const ColorAssignment& a);
nlohmann::json to_json(const ClassSummary& c);
nlohmann::json to_json(const NonsingularityCertificate& c);
nlohmann::json to_json(const ColorPolynomial& p);
nlohmann::json to_json(const SingularSearchResult& r);
nlohmann::json to_json(const TraceStep& s);
nlohmann::json to_json(const DerivationTrace& t);
nlohmann::json to_json(const ColorableResult& r);
nlohmann::json to_json(const BarredSystem& b);
nlohmann::json to_json(const ControllabilityVerdict& v);
nlohmann::json to_json(const SystemSamplingReport& r);
nlohmann::json to_json(const MatrixSamplingReport& r);

/// Parses the JSON envelope form of a matrix document (the inverse of
/// to_json(ColoredPatternMatrix)); used by read_document.
MatrixDocument document_from_json(const nlohmann::json& j);

/// FNV-1a 64-bit digest, rendered as 16 lowercase hex digits; used to tie
/// reports to their input bytes without embedding the input.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace cpmat
