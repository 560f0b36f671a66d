#include "coxbruhat/polynomial.hpp"

#include "coxbruhat/errors.hpp"

namespace coxbruhat {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::PolynomialOverflow, "coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::PolynomialOverflow, "coefficient overflow");
    return r;
}

} // namespace

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial IntPolynomial::monomial(int k) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(k) + 1, 0);
    c[k] = 1;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::at_one() const {
    std::int64_t sum = 0;
    for (auto c : coeffs_) sum = checked_add(sum, c);
    return sum;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(int k) const {
    if (is_zero()) return {};
    std::vector<std::int64_t> out(static_cast<std::size_t>(k), 0);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        std::int64_t c = coeffs_[k];
        if (c == 0) continue;
        if (c < 0) {
            out += "-";
            c = -c;
        } else if (!out.empty()) {
            out += "+";
        }
        if (k == 0 || c != 1) out += std::to_string(c);
        if (k >= 1) out += "t";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

} // namespace coxbruhat
