#include "cpmat/json_io.hpp"

#include <cstdint>

namespace cpmat {

using nlohmann::json;

json to_json(const ColoredPatternMatrix& m, std::optional<std::size_t> state_dim) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j) ? m.at(i, j)->token() : "0");
        entries.push_back(std::move(row));
    }
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["state_dim"] = state_dim ? json(*state_dim) : json(nullptr);
    j["entries"] = std::move(entries);
    return j;
}

json to_json(const Diagnostic& d) {
    return json{{"code", d.code},
                {"message", d.message},
                {"row", d.row},
                {"col", d.col},
                {"suggestion", d.suggestion}};
}

json to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(rational_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const ColorAssignment& a) {
    json j = json::object();
    for (const auto& [color, value] : a.values)
        j[color.token()] = rational_to_string(value);
    return j;
}

namespace {

json spectrum_to_json(const Spectrum& s) {
    json out = json::array();
    for (ColorId c : s) out.push_back(c.token());
    return out;
}

}  // namespace

json to_json(const ClassSummary& c) {
    return json{{"spectrum", spectrum_to_json(c.spectrum)},
                {"signature", c.signature},
                {"member_count", c.member_count}};
}

json to_json(const NonsingularityCertificate& c) {
    json classes = json::array();
    for (const ClassSummary& cls : c.classes) classes.push_back(to_json(cls));
    json dashed = json::array();
    for (ColorId color : c.dashed_colors) dashed.push_back(color.token());
    json exhibits = json::array();
    for (std::size_t idx : c.exhibit_classes) exhibits.push_back(idx);
    return json{{"verdict", c.verdict},
                {"violated_condition", c.violated_condition},
                {"classes", std::move(classes)},
                {"witness_class", c.witness_class ? json(*c.witness_class) : json(nullptr)},
                {"exhibit_classes", std::move(exhibits)},
                {"dashed_colors", std::move(dashed)}};
}

json to_json(const ColorPolynomial& p) {
    json terms = json::array();
    for (const auto& [mono, coeff] : p.terms())
        terms.push_back(json::array({mono.token(), coeff.get_str()}));
    return json{{"terms", std::move(terms)}, {"text", p.to_string()}};
}

json to_json(const SingularSearchResult& r) {
    return json{{"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
                {"det_identically_zero", r.det_identically_zero},
                {"trials_used", r.trials_used}};
}

namespace {

json vertex_set_to_json(const VertexSet& v) {
    json out = json::array();
    for (std::size_t idx : v) out.push_back(idx + 1);  // 1-based in reports
    return out;
}

}  // namespace

json to_json(const TraceStep& s) {
    return json{{"x", vertex_set_to_json(s.x)},
                {"y", vertex_set_to_json(s.y)},
                {"certificate", to_json(s.certificate)}};
}

json to_json(const DerivationTrace& t) {
    json steps = json::array();
    for (const TraceStep& s : t.steps) steps.push_back(to_json(s));
    return steps;
}

json to_json(const ColorableResult& r) {
    return json{{"colorable", r.colorable},
                {"exhaustive", r.exhaustive},
                {"work_used", r.work_used},
                {"trace", r.trace ? to_json(*r.trace) : json(nullptr)}};
}

json to_json(const BarredSystem& b) {
    json renumbering = json::object();
    for (const auto& [original, renamed] : b.renumbering)
        renumbering[original.token()] = renamed.token();
    json dropped = json::array();
    for (ColorId color : b.dropped) dropped.push_back(color.token());
    json fresh = json::array();
    for (const auto& [position, color] : b.fresh)
        fresh.push_back(json{{"position", position + 1}, {"color", color.token()}});
    return json{{"matrix", to_json(b.system.matrix, b.system.state_dim)},
                {"renumbering", std::move(renumbering)},
                {"dropped", std::move(dropped)},
                {"fresh", std::move(fresh)}};
}

json to_json(const ControllabilityVerdict& v) {
    const char* status = nullptr;
    switch (v.status) {
        case ControllabilityStatus::SufficientControllable:
            status = "sufficient-controllable";
            break;
        case ControllabilityStatus::Inconclusive:
            status = "inconclusive";
            break;
        case ControllabilityStatus::RefutedBySample:
            status = "refuted-by-sample";
            break;
    }
    return json{{"status", status},
                {"composite_side", to_json(v.composite_side)},
                {"barred_side", to_json(v.barred_side)},
                {"barred", to_json(v.barred)}};
}

json to_json(const SystemSamplingReport& r) {
    json counterexample(nullptr);
    if (r.counterexample) {
        counterexample = json{{"trial", r.counterexample->trial},
                              {"assignment", to_json(r.counterexample->assignment)},
                              {"state_matrix", to_json(r.counterexample->a)},
                              {"input_matrix", to_json(r.counterexample->b)}};
    }
    return json{{"trials_requested", r.trials_requested},
                {"trials_run", r.trials_run},
                {"counterexample", std::move(counterexample)}};
}

json to_json(const MatrixSamplingReport& r) {
    json counterexample(nullptr);
    if (r.counterexample) {
        counterexample = json{{"trial", r.counterexample->trial},
                              {"assignment", to_json(r.counterexample->assignment)},
                              {"matrix", to_json(r.counterexample->matrix)},
                              {"rank", r.counterexample->rank}};
    }
    return json{{"trials_requested", r.trials_requested},
                {"trials_run", r.trials_run},
                {"counterexample", std::move(counterexample)}};
}

MatrixDocument document_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("JSON document must be an object");
    MatrixDocument doc;
    try {
        doc.rows = j.at("rows").get<std::size_t>();
        doc.cols = j.at("cols").get<std::size_t>();
        if (j.contains("state_dim") && !j.at("state_dim").is_null())
            doc.state_dim = j.at("state_dim").get<std::size_t>();
        const json& entries = j.at("entries");
        if (!entries.is_array()) throw ParseError("'entries' must be an array of arrays");
        for (const json& row : entries) {
            if (!row.is_array()) throw ParseError("'entries' must be an array of arrays");
            std::vector<std::string> tokens;
            for (const json& tok : row) {
                if (!tok.is_string())
                    throw ParseError("matrix entries must be strings like \"0\", \"c1\", \"g2\"");
                tokens.push_back(tok.get<std::string>());
            }
            doc.tokens.push_back(std::move(tokens));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON document: ") + e.what());
    }
    return doc;
}

std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[hash & 0xF];
        hash >>= 4;
    }
    return out;
}

}  // namespace cpmat
