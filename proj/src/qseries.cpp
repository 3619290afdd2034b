#include "xm/qseries.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace xm {

Laurent Laurent::monomial(long exponent, BigInt coefficient) {
    Laurent p;
    p.add_term(exponent, coefficient);
    return p;
}

void Laurent::add_term(long exponent, const BigInt& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent& Laurent::operator+=(const Laurent& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent prod;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) prod.add_term(ea + eb, ca * cb);
    return prod;
}

Laurent Laurent::inverted_q() const {
    Laurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
}

Laurent Laurent::shifted(long shift) const {
    Laurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
    return out;
}

BigInt Laurent::at_one() const {
    BigInt sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        BigInt mag = negative ? BigInt(-c) : c;
        if (e == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

Laurent q_binomial(long p, long m) {
    if (p < 0 || m < 0) throw std::invalid_argument("q_binomial: negative argument");
    // row[j] holds [p', j] while p' sweeps 0..p
    std::vector<Laurent> row(static_cast<size_t>(m) + 1, Laurent::one());
    for (long i = 1; i <= p; ++i) {
        for (long j = 1; j <= m; ++j) {
            row[j] = row[j - 1] + row[j].shifted(j);
        }
    }
    return row[m];
}

}  // namespace xm
