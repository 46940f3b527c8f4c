#ifndef NOETHER_DUMP_HPP
#define NOETHER_DUMP_HPP

#include <noether/octonion.hpp>
#include <noether/representation.hpp>
#include <noether/sln_quotient.hpp>

#include <json.hpp>

namespace noether {

/// Integers as JSON numbers, other rationals as "p/q" strings.
inline nlohmann::json element_json(const mpq_class& x) {
    if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
    return x.get_str();
}

inline nlohmann::json element_json(std::uint32_t x) { return x; }

template <Field F>
nlohmann::json matrix_json(const Matrix<F>& m) {
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(element_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <Field F>
nlohmann::json representation_json(const LieRepresentation<F>& rep) {
    const QuadraticSpace space(rep.n);
    auto labels = nlohmann::json::array();
    for (auto [a, b] : rep.labels) labels.push_back("m(" + space.generator_name(a) + "," + space.generator_name(b) + ")");
    auto mats = nlohmann::json::array();
    for (const auto& m : rep.matrices) mats.push_back(matrix_json(m));
    return {{"name", rep.name.to_string()},
            {"n", rep.n},
            {"field", rep.field().spec().to_string()},
            {"dimension", rep.dimension},
            {"labels", labels},
            {"matrices", mats}};
}

/// Exact matrices behind the named suites, for external cross-checking.
inline nlohmann::json dump_suites(const std::vector<std::string>& names) {
    const Rationals q;
    auto reps = nlohmann::json::array();
    nlohmann::json out = nlohmann::json::object();
    for (const auto& name : names) {
        if (name == "g2_octonion") {
            auto derivs = nlohmann::json::array();
            for (const auto& d : derivation_algebra(q)) derivs.push_back(matrix_json(d));
            out["g2_derivations"] = {{"basis", "(a, v1, v2, v3, w1, w2, w3, b)"}, {"matrices", derivs}};
        } else if (name == "spin7") {
            reps.push_back(representation_json(spin_rep(QuadraticSpace(7), q)));
        } else if (name == "spin10") {
            reps.push_back(representation_json(half_spin_reps(QuadraticSpace(10), q).first));
        } else if (name == "spin11") {
            reps.push_back(representation_json(spin_rep(QuadraticSpace(11), q)));
        } else if (name == "spin14") {
            reps.push_back(representation_json(half_spin_reps(QuadraticSpace(14), q).first));
        } else if (name == "coregular_free") {
            for (int n : {7, 10, 11, 14}) reps.push_back(representation_json(vector_rep(QuadraticSpace(n), q)));
        } else if (name == "branching") {
            reps.push_back(representation_json(spin_rep(QuadraticSpace(5), q)));
        } else if (name == "sln_quotient") {
            auto js = nlohmann::json::array();
            for (std::size_t n = 2; n <= 5; ++n) js.push_back(matrix_json(canonical_J(q, n)));
            out["canonical_J"] = js;
        }
    }
    out["representations"] = reps;
    return out;
}

}  // namespace noether

#endif  // NOETHER_DUMP_HPP
