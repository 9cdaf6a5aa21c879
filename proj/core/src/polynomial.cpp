#include "cpmat/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>

#include "cpmat/errors.hpp"
#include "cpmat/sampling.hpp"

namespace cpmat {

int Monomial::degree() const {
    int total = 0;
    for (const auto& [_, exp] : factors) total += exp;
    return total;
}

bool Monomial::contains(ColorId color) const {
    for (const auto& [c, _] : factors)
        if (c == color) return true;
    return false;
}

std::string Monomial::token() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [color, exp] : factors) {
        if (!first) os << "*";
        first = false;
        os << color.token();
        if (exp != 1) os << "^" << exp;
    }
    return os.str();
}

ColorPolynomial ColorPolynomial::constant(Integer value) {
    ColorPolynomial p;
    if (value != 0) p.terms_.emplace(Monomial{}, std::move(value));
    return p;
}

ColorPolynomial ColorPolynomial::variable(ColorId color) {
    ColorPolynomial p;
    p.terms_.emplace(Monomial{{{color, 1}}}, Integer(1));
    return p;
}

void ColorPolynomial::add_term(const Monomial& mono, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

ColorPolynomial& ColorPolynomial::operator+=(const ColorPolynomial& rhs) {
    for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, coeff);
    return *this;
}

ColorPolynomial ColorPolynomial::operator*(const ColorPolynomial& rhs) const {
    ColorPolynomial out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            // Merge the two sorted factor lists, adding exponents.
            Monomial product;
            auto ia = ma.factors.begin();
            auto ib = mb.factors.begin();
            while (ia != ma.factors.end() || ib != mb.factors.end()) {
                if (ib == mb.factors.end() || (ia != ma.factors.end() && ia->first < ib->first))
                    product.factors.push_back(*ia++);
                else if (ia == ma.factors.end() || ib->first < ia->first)
                    product.factors.push_back(*ib++);
                else {
                    product.factors.emplace_back(ia->first, ia->second + ib->second);
                    ++ia;
                    ++ib;
                }
            }
            out.add_term(product, ca * cb);
        }
    }
    return out;
}

ColorPolynomial ColorPolynomial::operator-() const {
    ColorPolynomial out;
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
    return out;
}

std::vector<ColorId> ColorPolynomial::variables() const {
    std::vector<ColorId> out;
    for (const auto& [mono, _] : terms_)
        for (const auto& [color, __] : mono.factors) out.push_back(color);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rational ColorPolynomial::evaluate(const ColorAssignment& a) const {
    Rational total(0);
    for (const auto& [mono, coeff] : terms_) {
        Rational term(coeff);
        for (const auto& [color, exp] : mono.factors) {
            const Rational& v = a.at(color);
            for (int e = 0; e < exp; ++e) term *= v;
        }
        total += term;
    }
    return total;
}

std::string ColorPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        Integer abs_coeff = abs(coeff);
        if (first) {
            if (coeff < 0) os << "-";
            first = false;
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        if (mono.factors.empty()) os << abs_coeff.get_str();
        else {
            if (abs_coeff != 1) os << abs_coeff.get_str() << "*";
            os << mono.token();
        }
    }
    return os.str();
}

ColorPolynomial symbolic_determinant(const ColoredPatternMatrix& m,
                                     const DeterminantOptions& options) {
    if (!m.is_square())
        throw std::invalid_argument("symbolic determinant requires a square pattern");
    if (m.rows() > options.max_size)
        throw BudgetExceeded("symbolic determinant limited to size " +
                             std::to_string(options.max_size) + ", got " +
                             std::to_string(m.rows()));
    ColoredBipartiteGraph g = build_bipartite(m);
    auto matchings = enumerate_perfect_matchings(g, options.matching);
    ColorPolynomial det;
    for (const PerfectMatching& match : matchings) {
        Spectrum spectrum = matching_spectrum(g, match);  // sorted
        Monomial mono;
        for (ColorId color : spectrum) {
            if (!mono.factors.empty() && mono.factors.back().first == color)
                ++mono.factors.back().second;
            else
                mono.factors.emplace_back(color, 1);
        }
        det.add_term(mono, Integer(match.sign));
    }
    return det;
}

bool single_solid_monomial(const ColorPolynomial& p) {
    if (p.term_count() != 1) return false;
    const auto& [mono, coeff] = *p.terms().begin();
    for (const auto& [color, _] : mono.factors)
        if (!color.solid()) return false;
    return coeff != 0;
}

namespace {

/// Divisors of |v| in ascending order, or empty when v is too large to
/// factor cheaply (the caller just skips the trial).
std::vector<unsigned long long> small_divisors(const Integer& v) {
    Integer a = abs(v);
    if (!a.fits_ulong_p()) return {};
    unsigned long long value = mpz_get_ui(a.get_mpz_t());
    if (value == 0 || value > 1'000'000'000'000ULL) return {};
    std::vector<unsigned long long> low, high;
    for (unsigned long long d = 1; d * d <= value; ++d) {
        if (value % d) continue;
        low.push_back(d);
        if (d != value / d) high.push_back(value / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

/// The univariate polynomial obtained from `p` by substituting `partial`
/// for every variable except `pivot`: exponent -> coefficient.
std::map<int, Rational> substitute_except(const ColorPolynomial& p, ColorId pivot,
                                          const ColorAssignment& partial) {
    std::map<int, Rational> out;
    for (const auto& [mono, coeff] : p.terms()) {
        int pivot_exp = 0;
        Rational value(coeff);
        for (const auto& [color, exp] : mono.factors) {
            if (color == pivot) {
                pivot_exp = exp;
                continue;
            }
            const Rational& v = partial.at(color);
            for (int e = 0; e < exp; ++e) value *= v;
        }
        out[pivot_exp] += value;
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

Rational evaluate_univariate(const std::map<int, Rational>& poly, const Rational& x) {
    Rational total(0);
    for (const auto& [exp, coeff] : poly) {
        Rational term = coeff;
        for (int e = 0; e < exp; ++e) term *= x;
        total += term;
    }
    return total;
}

/// Admissible default for colors without an explicit choice.
Rational default_value(ColorId color, bool zero_questions) {
    if (color.solid()) return Rational(1);
    return zero_questions ? Rational(0) : Rational(1);
}

}  // namespace

SingularSearchResult find_singular_assignment(const ColoredPatternMatrix& m,
                                              const SingularSearchOptions& options) {
    SingularSearchResult result;
    ColorPolynomial det = symbolic_determinant(m, options.det);
    const std::vector<ColorId> all_colors = m.colors();

    auto verified = [&](ColorAssignment a) -> SingularSearchResult& {
        if (det.evaluate(a) != 0)
            throw std::logic_error("singular-witness candidate failed verification");
        result.witness = std::move(a);
        return result;
    };

    if (det.is_zero()) {
        result.det_identically_zero = true;
        ColorAssignment a;
        for (ColorId c : all_colors) a.values.emplace(c, default_value(c, true));
        return verified(std::move(a));
    }

    // Structural shortcut: a dashed variable dividing every term zeroes the
    // determinant on its own.
    for (ColorId v : det.variables()) {
        if (v.solid()) continue;
        bool divides_all = true;
        for (const auto& [mono, _] : det.terms())
            if (!mono.contains(v)) {
                divides_all = false;
                break;
            }
        if (divides_all) {
            ColorAssignment a;
            for (ColorId c : all_colors)
                a.values.emplace(c, c == v ? Rational(0) : default_value(c, false));
            return verified(std::move(a));
        }
    }

    const std::vector<ColorId> vars = det.variables();
    if (vars.empty()) return result;  // nonzero constant: no witness exists

    std::mt19937_64 rng(options.seed);
    for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
        ++result.trials_used;
        ColorId pivot = vars[trial % vars.size()];

        // Random admissible values for everything except the pivot.
        ColorAssignment partial;
        for (ColorId c : all_colors) {
            if (c == pivot) continue;
            Rational v;
            if (c.solid()) {
                long draw = static_cast<long>(draw_below(rng, 10));  // 0..9
                v = Rational(draw < 5 ? draw - 5 : draw - 4);        // -5..-1, 1..5
            } else {
                if (draw_below(rng, 4) == 0) v = 0;
                else {
                    long draw = static_cast<long>(draw_below(rng, 10));
                    v = Rational(draw < 5 ? draw - 5 : draw - 4);
                }
            }
            partial.values.emplace(c, v);
        }

        std::map<int, Rational> uni = substitute_except(det, pivot, partial);
        auto finish = [&](const Rational& root) -> SingularSearchResult& {
            ColorAssignment full = partial;
            full.values.emplace(pivot, root);
            return verified(std::move(full));
        };

        if (uni.empty()) {
            // Identically zero in the pivot: any admissible pivot value works.
            return finish(pivot.solid() ? Rational(1) : Rational(0));
        }
        if (uni.size() == 1 && uni.begin()->first == 0) continue;  // nonzero constant

        int min_exp = uni.begin()->first;
        if (min_exp > 0) {
            // x = 0 is a root.
            if (!pivot.solid()) return finish(Rational(0));
            // Solid pivot cannot be zero; factor x^min_exp out and look for a
            // nonzero root of the quotient below.
            std::map<int, Rational> reduced;
            for (const auto& [exp, coeff] : uni) reduced[exp - min_exp] = coeff;
            uni = std::move(reduced);
            if (uni.size() == 1 && uni.begin()->first == 0) continue;
        }

        // Rational-root search: clear denominators, then every rational root
        // is +-(divisor of |constant|)/(divisor of |leading|).
        Integer den_lcm = 1;
        for (const auto& [_, coeff] : uni)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                    coeff.get_den().get_mpz_t());
        std::map<int, Integer> int_poly;
        for (const auto& [exp, coeff] : uni) {
            Rational scaled = coeff * Rational(den_lcm);
            int_poly[exp] = scaled.get_num();  // denominator is 1 after scaling
        }
        const Integer& constant = int_poly.begin()->second;
        const Integer& leading = int_poly.rbegin()->second;
        auto ps = small_divisors(constant);
        auto qs = small_divisors(leading);
        bool found = false;
        Rational root;
        for (unsigned long long p : ps) {
            for (unsigned long long q : qs) {
                for (int sign = 0; sign < 2 && !found; ++sign) {
                    Rational candidate(Integer(static_cast<unsigned long>(p)),
                                       Integer(static_cast<unsigned long>(q)));
                    candidate.canonicalize();
                    if (sign) candidate = -candidate;
                    if (evaluate_univariate(uni, candidate) == 0) {
                        found = true;
                        root = candidate;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (found) return finish(root);
    }
    return result;
}

std::uint64_t permanent_01(const ColoredBipartiteGraph& g, const PermanentOptions& options) {
    const std::size_t t = g.size();
    if (t > options.max_size || t > 20)
        throw BudgetExceeded("permanent limited to size " +
                             std::to_string(std::min<std::size_t>(options.max_size, 20)) +
                             ", got " + std::to_string(t));
    if (t == 0) return 1;

    // Ryser's inclusion-exclusion over column subsets:
    //   perm(A) = (-1)^t * sum_S (-1)^|S| * prod_y (sum_{x in S} A[y][x]).
    std::vector<std::uint32_t> row_mask(t, 0);
    for (const BipartiteEdge& e : g.all_edges())
        row_mask[e.y] |= std::uint32_t{1} << e.x;

    long long total = 0;
    const std::uint32_t full = (std::uint32_t{1} << t) - 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        long long product = 1;
        for (std::size_t y = 0; y < t && product != 0; ++y)
            product *= std::popcount(row_mask[y] & s);
        if (product == 0) continue;
        const int parity = (t - std::popcount(s)) % 2;
        total += parity ? -product : product;
    }
    return static_cast<std::uint64_t>(total);
}

}  // namespace cpmat
