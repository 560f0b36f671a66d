#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coxbruhat {

/// Integer polynomial in t, dense ascending coefficients. Arithmetic is exact
/// and throws PolynomialOverflow instead of wrapping.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coeffs);

    static IntPolynomial constant(std::int64_t c) { return IntPolynomial({c}); }
    /// t^k
    static IntPolynomial monomial(int k);

    /// Exponent-indexed; the zero polynomial has no coefficients.
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t coeff(int k) const {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0;
    }
    std::int64_t at_one() const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    /// Multiplication by t^k.
    IntPolynomial shifted(int k) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// "1+2t+2t^2+t^3"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

} // namespace coxbruhat
