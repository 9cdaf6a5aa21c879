#pragma once

// Shared helpers for the test suites: data loading, independent oracles
// (cofactor-expansion determinants, characteristic polynomial, eigenvalue
// rank test) and random instance generators.  The oracles deliberately share
// no algorithmic machinery with the library: determinants are computed by
// recursive cofactor expansion, never by matching enumeration or
// fraction-free elimination.

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpmat/cpmat.hpp"

namespace testutil {

using namespace cpmat;

inline std::string load_data(const std::string& name) {
    std::string path = std::string(CPMAT_DATA_DIR) + "/" + name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open test data file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline ColoredPatternMatrix load_matrix(const std::string& name) {
    return ColoredPatternMatrix::parse(load_data(name));
}

inline ColoredSystem load_system(const std::string& name) {
    return ColoredSystem::parse(load_data(name));
}

inline ColorId star(int index) { return ColorId{ColorKind::Star, index}; }
inline ColorId question(int index) { return ColorId{ColorKind::Question, index}; }

// ---------------------------------------------------------------------------
// Independent symbolic determinant oracle: recursive cofactor expansion over
// a dense exponent-vector representation.  Exponent vectors are indexed by
// position in m.colors().
// ---------------------------------------------------------------------------

using ExpVec = std::vector<int>;
using ExpPoly = std::map<ExpVec, long long>;

namespace detail {

inline ExpPoly cofactor_expand(const ColoredPatternMatrix& m,
                               const std::map<ColorId, std::size_t>& var_of,
                               const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols) {
    ExpPoly out;
    if (rows.empty()) {
        out[ExpVec(var_of.size(), 0)] = 1;
        return out;
    }
    const std::size_t row = rows.front();
    const std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Cell& cell = m.at(row, cols[k]);
        if (!cell) continue;
        std::vector<std::size_t> remaining_cols;
        for (std::size_t i = 0; i < cols.size(); ++i)
            if (i != k) remaining_cols.push_back(cols[i]);
        ExpPoly sub = cofactor_expand(m, var_of, rest, remaining_cols);
        const long long sign = (k % 2 == 0) ? 1 : -1;
        const std::size_t var = var_of.at(*cell);
        for (auto& [exps, coeff] : sub) {
            ExpVec bumped = exps;
            ++bumped[var];
            out[bumped] += sign * coeff;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace detail

/// Symbolic determinant by first-row cofactor expansion.
inline ExpPoly oracle_symbolic_det(const ColoredPatternMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("oracle needs a square matrix");
    auto colors = m.colors();
    std::map<ColorId, std::size_t> var_of;
    for (std::size_t i = 0; i < colors.size(); ++i) var_of.emplace(colors[i], i);
    std::vector<std::size_t> rows(m.rows()), cols(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = i;
    for (std::size_t j = 0; j < m.cols(); ++j) cols[j] = j;
    return detail::cofactor_expand(m, var_of, rows, cols);
}

/// Re-expresses a library polynomial in the oracle's representation.
inline ExpPoly to_exp_poly(const ColorPolynomial& p, const std::vector<ColorId>& colors) {
    std::map<ColorId, std::size_t> var_of;
    for (std::size_t i = 0; i < colors.size(); ++i) var_of.emplace(colors[i], i);
    ExpPoly out;
    for (const auto& [mono, coeff] : p.terms()) {
        ExpVec exps(colors.size(), 0);
        for (const auto& [color, exp] : mono.factors) exps[var_of.at(color)] = exp;
        if (!coeff.fits_slong_p()) throw std::runtime_error("oracle coefficient overflow");
        out[exps] = coeff.get_si();
    }
    return out;
}

/// Builds an exponent polynomial literal from (coefficient, exponents) rows.
inline ExpPoly exp_poly(std::vector<std::pair<long long, ExpVec>> terms) {
    ExpPoly out;
    for (auto& [coeff, exps] : terms)
        if (coeff != 0) out[exps] += coeff;
    return out;
}

// ---------------------------------------------------------------------------
// Independent numeric determinant oracle (recursive cofactor expansion on
// rationals) and eigenvalue-based controllability cross-check.
// ---------------------------------------------------------------------------

namespace detail {

inline Rational cofactor_det_impl(const RationalMatrix& m,
                                  const std::vector<std::size_t>& rows,
                                  const std::vector<std::size_t>& cols) {
    if (rows.empty()) return Rational(1);
    const std::size_t row = rows.front();
    const std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
    Rational total(0);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Rational& cell = m.at(row, cols[k]);
        if (cell == 0) continue;
        std::vector<std::size_t> remaining;
        for (std::size_t i = 0; i < cols.size(); ++i)
            if (i != k) remaining.push_back(cols[i]);
        Rational sub = cofactor_det_impl(m, rest, remaining);
        total += (k % 2 == 0 ? cell : -cell) * sub;
    }
    return total;
}

}  // namespace detail

inline Rational oracle_det(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("oracle needs a square matrix");
    std::vector<std::size_t> rows(m.rows()), cols(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = i;
    for (std::size_t j = 0; j < m.cols(); ++j) cols[j] = j;
    return detail::cofactor_det_impl(m, rows, cols);
}

/// Coefficients c[0..n] of det(lambda I - A) = sum c[k] lambda^k, by the
/// Faddeev-LeVerrier recurrence (exact rational arithmetic).
inline std::vector<Rational> char_poly(const RationalMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    RationalMatrix m(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A * M_{k-1} + c_{n-k+1} I
        RationalMatrix am = a * m;
        for (std::size_t i = 0; i < n; ++i) am.at(i, i) += c[n - k + 1];
        m = std::move(am);
        RationalMatrix prod = a * m;
        Rational trace(0);
        for (std::size_t i = 0; i < n; ++i) trace += prod.at(i, i);
        c[n - k] = -trace / Rational(static_cast<long>(k));
    }
    return c;
}

/// All rational roots of a rational-coefficient polynomial (ascending).
inline std::vector<Rational> rational_roots(std::vector<Rational> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    std::vector<Rational> roots;
    if (coeffs.empty()) return roots;  // zero polynomial: skip (meaningless here)
    auto eval = [&](const Rational& x) {
        Rational v(0);
        for (std::size_t k = coeffs.size(); k-- > 0;) v = v * x + coeffs[k];
        return v;
    };
    // Strip x^m factors: zero roots.
    std::size_t low = 0;
    while (low < coeffs.size() && coeffs[low] == 0) ++low;
    if (low > 0) {
        roots.push_back(Rational(0));
        coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(low));
    }
    if (coeffs.size() < 2) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    Integer den_lcm = 1;
    for (const Rational& c : coeffs)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> ints;
    for (const Rational& c : coeffs) ints.push_back(Rational(c * Rational(den_lcm)).get_num());
    auto divisors = [](const Integer& v) {
        std::vector<unsigned long> out;
        Integer a = abs(v);
        if (!a.fits_ulong_p()) return out;
        unsigned long value = mpz_get_ui(a.get_mpz_t());
        for (unsigned long d = 1; d * d <= value; ++d) {
            if (value % d) continue;
            out.push_back(d);
            if (d != value / d) out.push_back(value / d);
        }
        return out;
    };
    for (unsigned long p : divisors(ints.front())) {
        for (unsigned long q : divisors(ints.back())) {
            for (int sign = 0; sign < 2; ++sign) {
                Rational candidate{Integer(p), Integer(q)};
                candidate.canonicalize();
                if (sign) candidate = -candidate;
                if (eval(candidate) == 0 &&
                    std::find(roots.begin(), roots.end(), candidate) == roots.end())
                    roots.push_back(candidate);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Eigenvalue rank test at every rational eigenvalue of A: a necessary
/// condition for controllability, used to cross-check the Kalman test.
inline bool eigen_rank_test_at_rationals(const RationalMatrix& a, const RationalMatrix& b) {
    const std::size_t n = a.rows();
    for (const Rational& lambda : rational_roots(char_poly(a))) {
        RationalMatrix shifted(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                shifted.at(i, j) =
                    (i == j) ? Rational(lambda - a.at(i, j)) : Rational(-a.at(i, j));
        if (RationalMatrix::hstack(shifted, b).rank() != n) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Random instance generators (deterministic: all draws via draw_below).
// ---------------------------------------------------------------------------

inline ColoredPatternMatrix random_pattern(std::mt19937_64& rng, std::size_t rows,
                                           std::size_t cols, int density_pct,
                                           int star_colors, int question_colors) {
    std::vector<Cell> cells(rows * cols);
    for (Cell& cell : cells) {
        if (static_cast<int>(draw_below(rng, 100)) >= density_pct) continue;
        bool pick_star = question_colors == 0 ||
                         (star_colors > 0 && draw_below(rng, 2) == 0);
        if (pick_star)
            cell = ColorId{ColorKind::Star,
                           1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(star_colors)))};
        else
            cell = ColorId{ColorKind::Question,
                           1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(question_colors)))};
    }
    return ColoredPatternMatrix::from_cells_renumbered(rows, cols, std::move(cells)).first;
}

inline ColoredSystem random_system(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                   int density_pct, int star_colors, int question_colors) {
    return ColoredSystem::from_matrix(
        random_pattern(rng, n, n + m, density_pct, star_colors, question_colors), n);
}

/// A deterministic admissible assignment for quick checks: c_i -> i + 1,
/// g_i -> i (so g1 -> 1, and zero never hits a solid class).
inline ColorAssignment unit_assignment(const ColoredPatternMatrix& m) {
    ColorAssignment a;
    for (ColorId c : m.colors())
        a.values.emplace(c, Rational(c.solid() ? c.index + 1 : c.index));
    return a;
}

}  // namespace testutil
