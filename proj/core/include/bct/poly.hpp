#ifndef BCT_POLY_HPP
#define BCT_POLY_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bct {

using Rational = mpq_class;

/// Thrown when an intermediate result exceeds the configured degree cap.
/// Exact coefficient arithmetic never loses precision, so runaway degree
/// growth is the only blowup mode worth guarding against.
class degree_cap_error : public std::runtime_error {
public:
    explicit degree_cap_error(int degree, int cap)
        : std::runtime_error("polynomial degree " + std::to_string(degree) +
                             " exceeds cap " + std::to_string(cap)) {}
};

/// Global degree cap (default 64). Applies to multiplication results.
int degree_cap();
void set_degree_cap(int cap);

/// Univariate polynomial with exact rational coefficients.
///
/// Coefficients are stored in ascending degree with no trailing zeros;
/// the zero polynomial has an empty coefficient vector and degree() == -1
/// (standing in for "minus infinity").
class Poly {
public:
    Poly() = default;
    Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(const Rational& c);            // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rational> coeffs);

    /// The indeterminate.
    static Poly x();
    /// c * x^k
    static Poly monomial(const Rational& c, int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const;

    /// Coefficient of x^k (zero outside the stored range).
    Rational coeff(int k) const;
    /// Leading coefficient; zero polynomial has lead 0.
    Rational lead() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Rational& c) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Scaled so the leading coefficient is 1; zero stays zero.
    Poly monic() const;

    /// Euclidean division by a nonzero divisor: *this = q*d + r, deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    /// Quotient when the division is exact, nullopt otherwise.
    std::optional<Poly> exact_div(const Poly& d) const;
    bool divisible_by(const Poly& d) const;

    /// Rendered as human algebra, e.g. "x^2 - x - 1".
    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// Monic gcd with Bezout witnesses: x*a + y*b = g. gcd(0,0) = 0 with x = y = 0.
struct GcdBezout {
    Poly g, x, y;
};
GcdBezout poly_gcd_bezout(const Poly& a, const Poly& b);

}  // namespace bct

#endif
