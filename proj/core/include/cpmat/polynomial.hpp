#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpmat/assignment.hpp"
#include "cpmat/bipartite.hpp"
#include "cpmat/color.hpp"
#include "cpmat/pattern_matrix.hpp"
#include "cpmat/rational.hpp"

namespace cpmat {

/// A power product of color variables: factors sorted by color, exponents
/// >= 1.  The empty product is the constant monomial.
struct Monomial {
    std::vector<std::pair<ColorId, int>> factors;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    int degree() const;
    bool contains(ColorId color) const;
    /// "c1^2*c2", or "1" for the constant monomial.
    std::string token() const;
};

/// Sparse multivariate polynomial over the color variables with exact
/// integer coefficients.
class ColorPolynomial {
public:
    ColorPolynomial() = default;

    static ColorPolynomial constant(Integer value);
    static ColorPolynomial variable(ColorId color);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Integer>& terms() const { return terms_; }

    /// Adds coeff * mono, erasing the term if the result cancels to zero.
    void add_term(const Monomial& mono, const Integer& coeff);

    ColorPolynomial& operator+=(const ColorPolynomial& rhs);
    ColorPolynomial operator*(const ColorPolynomial& rhs) const;
    ColorPolynomial operator-() const;

    /// Every variable occurring in some term, sorted.
    std::vector<ColorId> variables() const;

    /// Exact evaluation; throws std::out_of_range if the assignment misses a
    /// variable of the polynomial.
    Rational evaluate(const ColorAssignment& a) const;

    /// "-c1^2*c2 + 3*g1" style rendering, terms in monomial order; "0" when
    /// empty.
    std::string to_string() const;

    friend bool operator==(const ColorPolynomial&, const ColorPolynomial&) = default;

private:
    std::map<Monomial, Integer> terms_;
};

struct DeterminantOptions {
    /// Hard cap on matrix size; symbolic expansion refuses larger inputs.
    std::size_t max_size = 10;
    MatchingOptions matching;
};

/// Fully expanded symbolic determinant of a square pattern, computed as the
/// signed sum over perfect matchings of the product of matched entry colors.
/// Throws BudgetExceeded when the size cap or the matching budget is hit.
ColorPolynomial symbolic_determinant(const ColoredPatternMatrix& m,
                                     const DeterminantOptions& options = {});

/// True when the polynomial is a single term whose variables are all solid
/// (Star) colors.  For a determinant polynomial this is equivalent to the
/// three-condition class-nonsingularity test passing.
bool single_solid_monomial(const ColorPolynomial& p);

struct SingularSearchOptions {
    std::uint64_t trials = 200;
    std::uint64_t seed = 0x5eed;
    DeterminantOptions det;
};

struct SingularSearchResult {
    /// An admissible assignment with zero determinant, verified exactly.
    std::optional<ColorAssignment> witness;
    /// True when the determinant polynomial is identically zero (then any
    /// admissible assignment is a witness and one is returned).
    bool det_identically_zero = false;
    std::uint64_t trials_used = 0;
};

/// Searches for an admissible rational assignment that makes the determinant
/// vanish: structural shortcuts first (zero polynomial; a dashed variable
/// dividing every term), then randomized substitution leaving one variable
/// free and solving for its rational roots.  Exhausting the trial budget
/// without a witness proves nothing: a singular realization may exist only
/// over the complex numbers or at rationals outside the sampled range.
SingularSearchResult find_singular_assignment(const ColoredPatternMatrix& m,
                                              const SingularSearchOptions& options = {});

struct PermanentOptions {
    /// Hard cap on matrix size for the inclusion-exclusion permanent.
    std::size_t max_size = 12;
};

/// Permanent of the 0/1 biadjacency matrix of `g` (the number of perfect
/// matchings), by Ryser's inclusion-exclusion formula.  Throws
/// BudgetExceeded above the size cap.
std::uint64_t permanent_01(const ColoredBipartiteGraph& g,
                           const PermanentOptions& options = {});

}  // namespace cpmat
