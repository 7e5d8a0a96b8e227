#include "toric/laurent.hpp"

#include <stdexcept>

namespace toric {

LaurentPolynomial LaurentPolynomial::monomial(const IntVec& exponent, const Rat& coeff) {
    LaurentPolynomial out(exponent.size());
    out.add_term(exponent, coeff);
    return out;
}

void LaurentPolynomial::add_term(const IntVec& exponent, const Rat& coeff) {
    if (terms_.empty() && ambient_dim_ == 0) ambient_dim_ = exponent.size();
    if (exponent.size() != ambient_dim_)
        throw std::invalid_argument("exponent dimension mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat LaurentPolynomial::coefficient(const IntVec& exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<IntVec> LaurentPolynomial::support() const {
    std::vector<IntVec> out;
    out.reserve(terms_.size());
    for (const auto& [m, a] : terms_) out.push_back(m);
    return out;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& other) const {
    LaurentPolynomial out = *this;
    if (out.terms_.empty()) out.ambient_dim_ = other.ambient_dim_;
    for (const auto& [m, a] : other.terms_) out.add_term(m, a);
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& other) const {
    return *this + other.scaled(Rat(-1));
}

LaurentPolynomial LaurentPolynomial::scaled(const Rat& factor) const {
    LaurentPolynomial out(ambient_dim_);
    if (factor == 0) return out;
    for (const auto& [m, a] : terms_) out.terms_.emplace(m, a * factor);
    return out;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, a] : terms_) {
        if (!out.empty()) out += " + ";
        out += rat_to_string(a) + "*x^" + vec_to_string(m);
    }
    return out;
}

LaurentPolynomial toric_derivative(const LaurentPolynomial& f, size_t axis) {
    if (axis >= f.ambient_dim()) throw std::invalid_argument("derivative axis out of range");
    LaurentPolynomial out(f.ambient_dim());
    for (const auto& [m, a] : f.terms()) out.add_term(m, a * Rat(m[axis]));
    return out;
}

LatticePolytope newton_polytope(const LaurentPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("Newton polytope of the zero polynomial");
    return LatticePolytope::hull(f.support());
}

LaurentPolynomial restrict_to_face(const LaurentPolynomial& f, const Face& face) {
    LaurentPolynomial out(f.ambient_dim());
    for (const auto& [m, a] : f.terms())
        if (face.contains(m)) out.add_term(m, a);
    return out;
}

}  // namespace toric
