#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace xm {

using BigInt = boost::multiprecision::cpp_int;

/*
 * Exact Laurent polynomial in one variable q with arbitrary-precision
 * integer coefficients. The term map never stores a zero coefficient,
 * so value equality is equality of the underlying maps.
 */
class Laurent {
public:
    Laurent() = default;

    static Laurent one() { return monomial(0); }
    static Laurent monomial(long exponent, BigInt coefficient = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, BigInt>& terms() const { return terms_; }

    // Adds c * q^e, dropping the term if the coefficient cancels to zero.
    void add_term(long exponent, const BigInt& coefficient);

    Laurent& operator+=(const Laurent& other);
    Laurent& operator*=(const Laurent& other) { *this = *this * other; return *this; }
    friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    bool operator==(const Laurent&) const = default;

    // The substitution q -> q^{-1}: every exponent is negated.
    Laurent inverted_q() const;

    // Multiplication by the monomial q^shift.
    Laurent shifted(long shift) const;

    // Sum of all coefficients (the value at q = 1).
    BigInt at_one() const;

    // Canonical rendering: terms in increasing exponent order, explicit
    // coefficient only when its magnitude is not 1, e.g. "q^2 + q^3 + 2*q^4".
    std::string str() const;

private:
    std::map<long, BigInt> terms_;
};

// Generating function of partitions fitting inside a p x m box, counted by
// size: the Gaussian binomial [p+m, m]_q. Computed by the Pascal recurrence
//   [p, m] = [p, m-1] + q^m [p-1, m]
// entirely over exact integers. Throws std::invalid_argument if an argument
// is negative.
Laurent q_binomial(long p, long m);

}  // namespace xm
