#include "toric/vec.hpp"

#include <stdexcept>

namespace toric {

namespace {

void check_same_length(size_t a, size_t b) {
    if (a != b) throw std::invalid_argument("vector length mismatch");
}

}  // namespace

Int pairing(const IntVec& m, const IntVec& nu) {
    check_same_length(m.size(), nu.size());
    Int out = 0;
    for (size_t i = 0; i < m.size(); ++i) out += m[i] * nu[i];
    return out;
}

Rat pairing(const RatVec& x, const IntVec& nu) {
    check_same_length(x.size(), nu.size());
    Rat out = 0;
    for (size_t i = 0; i < x.size(); ++i) out += x[i] * nu[i];
    return out;
}

IntVec primitive(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g == 0) throw std::invalid_argument("primitive() of the zero vector");
    IntVec out = v;
    for (Int& x : out) x /= g;
    return out;
}

bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

bool lex_less(const IntVec& a, const IntVec& b) {
    check_same_length(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

bool lex_less(const RatVec& a, const RatVec& b) {
    check_same_length(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

IntVec add(const IntVec& a, const IntVec& b) {
    check_same_length(a.size(), b.size());
    IntVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntVec sub(const IntVec& a, const IntVec& b) {
    check_same_length(a.size(), b.size());
    IntVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IntVec negate(const IntVec& v) {
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

IntVec scale(const Int& k, const IntVec& v) {
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = k * v[i];
    return out;
}

RatVec to_rat(const IntVec& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

bool is_integral(const RatVec& v) {
    for (const Rat& x : v)
        if (!is_integer(x)) return false;
    return true;
}

IntVec to_int(const RatVec& v) {
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!is_integer(v[i])) throw std::invalid_argument("non-integral coordinate");
        out[i] = v[i].get_num();
    }
    return out;
}

std::string vec_to_string(const IntVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out + ")";
}

std::string vec_to_string(const RatVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += rat_to_string(v[i]);
    }
    return out + ")";
}

}  // namespace toric
