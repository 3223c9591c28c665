#include "bct/poly.hpp"

#include <atomic>
#include <sstream>

namespace bct {

namespace {
std::atomic<int> g_degree_cap{64};
}

int degree_cap() { return g_degree_cap.load(); }
void set_degree_cap(int cap) { g_degree_cap.store(cap); }

Poly::Poly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::x() { return monomial(1, 1); }

Poly Poly::monomial(const Rational& c, int k) {
    if (c == 0) return {};
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(k)];
}

Rational Poly::lead() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const int deg = a.degree() + b.degree();
    if (deg > degree_cap()) throw degree_cap_error(deg, degree_cap());
    std::vector<Rational> v(static_cast<size_t>(deg) + 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& c) const {
    if (c == 0) return {};
    Poly r(*this);
    for (auto& e : r.coeffs_) e *= c;
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / lead());
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Poly r(*this);
    std::vector<Rational> q;
    if (degree() >= d.degree()) q.assign(static_cast<size_t>(degree() - d.degree()) + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const int k = r.degree() - d.degree();
        const Rational c = r.lead() / d.lead();
        q[static_cast<size_t>(k)] = c;
        r -= Poly::monomial(c, k) * d;
    }
    return {Poly(std::move(q)), r};
}

std::optional<Poly> Poly::exact_div(const Poly& d) const {
    if (is_zero()) return Poly{};
    if (d.is_zero()) return std::nullopt;
    auto [q, r] = divmod(d);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

bool Poly::divisible_by(const Poly& d) const { return exact_div(d).has_value(); }

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational c = coeff(k);
        if (c == 0) continue;
        const Rational a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0 || a != 1) out << a.get_str();
        if (k > 0) {
            if (a != 1) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

GcdBezout poly_gcd_bezout(const Poly& a, const Poly& b) {
    // Extended Euclid, with the gcd normalized monic at the end.
    Poly r0 = a, r1 = b;
    Poly s0 = 1, s1 = 0;
    Poly t0 = 0, t1 = 1;
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        Poly s = s0 - q * s1;
        Poly t = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if (r0.is_zero()) return {Poly{}, Poly{}, Poly{}};
    const Rational inv = Rational(1) / r0.lead();
    return {r0 * inv, s0 * inv, t0 * inv};
}

}  // namespace bct
