#pragma once

#include <map>
#include <string>
#include <vector>

#include "toric/polytope.hpp"
#include "toric/vec.hpp"

namespace toric {

/**
 * Laurent polynomial sum a_m x^m: a finite map from integer exponent vectors
 * to nonzero exact rational coefficients, iterated in lexicographic order.
 */
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    static LaurentPolynomial monomial(const IntVec& exponent, const Rat& coeff);

    size_t ambient_dim() const { return ambient_dim_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// Adds coeff * x^exponent, merging and dropping cancelled terms.
    void add_term(const IntVec& exponent, const Rat& coeff);

    const std::map<IntVec, Rat, LexLess>& terms() const { return terms_; }
    Rat coefficient(const IntVec& exponent) const;
    std::vector<IntVec> support() const;

    LaurentPolynomial operator+(const LaurentPolynomial& other) const;
    LaurentPolynomial operator-(const LaurentPolynomial& other) const;
    LaurentPolynomial scaled(const Rat& factor) const;

    bool operator==(const LaurentPolynomial& other) const { return terms_ == other.terms_; }

    std::string to_string() const;

private:
    size_t ambient_dim_ = 0;
    std::map<IntVec, Rat, LexLess> terms_;
};

/// x_axis * df/dx_axis, i.e. x^m -> m[axis] * x^m termwise (0-based axis).
LaurentPolynomial toric_derivative(const LaurentPolynomial& f, size_t axis);

/// Convex hull of the support. Throws on the zero polynomial.
LatticePolytope newton_polytope(const LaurentPolynomial& f);

/// Terms of f whose exponents lie on the face.
LaurentPolynomial restrict_to_face(const LaurentPolynomial& f, const Face& face);

}  // namespace toric
