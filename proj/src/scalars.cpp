#include "workbench/scalars.hpp"

#include <mutex>
#include <sstream>

namespace workbench {

long euler_phi(long m) {
    long result = m;
    long n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, used to peel off lower
// cyclotomic factors from x^m - 1.
std::vector<BigInt> poly_div_exact(const std::vector<BigInt>& num,
                                   const std::vector<BigInt>& den) {
    std::vector<BigInt> rem = num;
    std::vector<BigInt> quot(num.size() - den.size() + 1, BigInt(0));
    const BigInt lead = den.back();
    for (long i = static_cast<long>(rem.size()) - 1;
         i >= static_cast<long>(den.size()) - 1; --i) {
        if (rem[i] == 0) continue;
        BigInt c = rem[i] / lead;
        long shift = i - (static_cast<long>(den.size()) - 1);
        quot[shift] = c;
        for (size_t j = 0; j < den.size(); ++j) rem[shift + j] -= c * den[j];
    }
    for (const BigInt& r : rem)
        if (r != 0) throw Error("cyclotomic division not exact");
    return quot;
}

std::vector<BigInt> compute_cyclotomic(long m) {
    // x^m - 1 divided by the product of Phi_d over proper divisors d.
    std::vector<BigInt> poly(m + 1, BigInt(0));
    poly[0] = -1;
    poly[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        poly = poly_div_exact(poly, cyclotomic_polynomial(d));
    }
    return poly;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(long m) {
    if (m < 1) throw Error("cyclotomic_polynomial: order must be positive");
    static std::map<long, std::vector<BigInt>> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    std::vector<BigInt> result = compute_cyclotomic(m);
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(m, result);
    return result;
}

Cyclotomic::Cyclotomic(long m, const Rational& constant) : m_(m) {
    check_order();
    if (constant != 0) coeffs_.push_back(constant);
}

Cyclotomic Cyclotomic::zeta_pow(long m, long k) {
    Cyclotomic z(m);
    long e = ((k % m) + m) % m;
    std::vector<Rational> p(e + 1, Rational(0));
    p[e] = 1;
    z.reduce(p);
    z.coeffs_ = std::move(p);
    return z;
}

void Cyclotomic::check_order() const {
    if (m_ < 1) throw Error("Cyclotomic: order must be positive");
}

void Cyclotomic::check_same_order(const Cyclotomic& o) const {
    if (m_ != o.m_) throw Error("incompatible cyclotomic orders");
}

void Cyclotomic::reduce(std::vector<Rational>& p) const {
    const std::vector<BigInt> phi = cyclotomic_polynomial(m_);
    const size_t deg = phi.size() - 1;  // = euler_phi(m_), monic
    while (p.size() > deg) {
        Rational c = p.back();
        p.pop_back();
        if (c == 0) continue;
        size_t shift = p.size() - deg;
        for (size_t j = 0; j < deg; ++j)
            p[shift + j] -= c * Rational(phi[j]);
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Rational Cyclotomic::rational_value() const {
    if (coeffs_.size() > 1) throw Error("Cyclotomic: value is not rational");
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    check_same_order(o);
    Cyclotomic r(m_);
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    while (!r.coeffs_.empty() && r.coeffs_.back() == 0) r.coeffs_.pop_back();
    return r;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(m_);
    r.coeffs_ = coeffs_;
    for (Rational& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    return *this + (-o);
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    check_same_order(o);
    Cyclotomic r(m_);
    if (coeffs_.empty() || o.coeffs_.empty()) return r;
    std::vector<Rational> p(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            p[i + j] += coeffs_[i] * o.coeffs_[j];
    r.reduce(p);
    r.coeffs_ = std::move(p);
    return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    return m_ == o.m_ && coeffs_ == o.coeffs_;
}

Rational Cyclotomic::evaluate_at_one() const {
    Rational v(0);
    for (size_t i = coeffs_.size(); i > 0; --i) v = v + coeffs_[i - 1];
    return v;
}

std::string Cyclotomic::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i].str();
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    return os.str();
}

CycloLaurent::CycloLaurent(long m, const Rational& constant) : m_(m) {
    if (constant != 0) terms_.emplace(0, Cyclotomic(m, constant));
}

CycloLaurent::CycloLaurent(const Cyclotomic& c) : m_(c.order()) {
    if (!c.is_zero()) terms_.emplace(0, c);
}

CycloLaurent CycloLaurent::half_power(long m, long k) {
    CycloLaurent r(m);
    r.terms_.emplace(k, Cyclotomic(m, Rational(1)));
    return r;
}

void CycloLaurent::check_same_order(const CycloLaurent& o) const {
    if (m_ != o.m_) throw Error("incompatible cyclotomic orders");
}

void CycloLaurent::add_term(long power, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(power);
    if (it == terms_.end()) {
        terms_.emplace(power, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

CycloLaurent CycloLaurent::operator+(const CycloLaurent& o) const {
    check_same_order(o);
    CycloLaurent r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, c);
    return r;
}

CycloLaurent& CycloLaurent::operator+=(const CycloLaurent& o) {
    check_same_order(o);
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

CycloLaurent CycloLaurent::operator-() const {
    CycloLaurent r(m_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

CycloLaurent CycloLaurent::operator-(const CycloLaurent& o) const {
    return *this + (-o);
}

CycloLaurent CycloLaurent::operator*(const CycloLaurent& o) const {
    check_same_order(o);
    CycloLaurent r(m_);
    for (const auto& [p1, c1] : terms_)
        for (const auto& [p2, c2] : o.terms_) r.add_term(p1 + p2, c1 * c2);
    return r;
}

CycloLaurent& CycloLaurent::operator*=(const CycloLaurent& o) {
    *this = *this * o;
    return *this;
}

bool CycloLaurent::operator==(const CycloLaurent& o) const {
    return m_ == o.m_ && terms_ == o.terms_;
}

Cyclotomic CycloLaurent::specialize_v_one() const {
    Cyclotomic r(m_);
    for (const auto& [p, c] : terms_) r = r + c;
    return r;
}

std::string CycloLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        if (p != 0) os << "*v^" << p;
        first = false;
    }
    return os.str();
}

}  // namespace workbench
