#ifndef WORKBENCH_SCALARS_HPP_
#define WORKBENCH_SCALARS_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace workbench {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Error type for all domain-level failures (incompatible ambients,
/// violated preconditions, malformed input).
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// m-th cyclotomic polynomial, monic with integer coefficients,
/// returned as coefficient vector c[0] + c[1]x + ... (degree phi(m)).
std::vector<BigInt> cyclotomic_polynomial(long m);

/// Euler totient.
long euler_phi(long m);

/// Element of Q(zeta_m), stored as the canonical representative of a
/// rational polynomial modulo the m-th cyclotomic polynomial.
/// Equality of values is equality of representatives.
class Cyclotomic {
  public:
    Cyclotomic() : m_(1) {}
    explicit Cyclotomic(long m) : m_(m) { check_order(); }
    Cyclotomic(long m, const Rational& constant);

    /// zeta_m^k
    static Cyclotomic zeta_pow(long m, long k);

    long order() const { return m_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const { return coeffs_.size() <= 1; }
    /// Constant term; valid only when is_rational().
    Rational rational_value() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Evaluate the canonical representative at zeta -> 1. This is a
    /// well-defined map on canonical forms (not a ring morphism for m > 2).
    Rational evaluate_at_one() const;

    std::string str() const;

  private:
    void check_order() const;
    void reduce(std::vector<Rational>& p) const;
    void check_same_order(const Cyclotomic& o) const;

    long m_;
    std::vector<Rational> coeffs_;  // degree < phi(m), trailing zeros trimmed
};

/// Laurent polynomial in v (v^2 = q) with Cyclotomic coefficients:
/// the coefficient ring Q(zeta_m)[v, v^-1]. Canonical form, no zero terms.
class CycloLaurent {
  public:
    CycloLaurent() : m_(1) {}
    explicit CycloLaurent(long m) : m_(m) {}
    CycloLaurent(long m, const Rational& constant);
    explicit CycloLaurent(const Cyclotomic& c);

    /// Monomial v^k, i.e. q^(k/2).
    static CycloLaurent half_power(long m, long k);
    static CycloLaurent one(long m) { return half_power(m, 0); }

    long order() const { return m_; }
    const std::map<long, Cyclotomic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CycloLaurent operator+(const CycloLaurent& o) const;
    CycloLaurent operator-(const CycloLaurent& o) const;
    CycloLaurent operator-() const;
    CycloLaurent operator*(const CycloLaurent& o) const;
    CycloLaurent& operator+=(const CycloLaurent& o);
    CycloLaurent& operator*=(const CycloLaurent& o);
    bool operator==(const CycloLaurent& o) const;
    bool operator!=(const CycloLaurent& o) const { return !(*this == o); }

    void add_term(long power, const Cyclotomic& c);

    /// v -> 1 specialization; a ring morphism onto Q(zeta_m).
    Cyclotomic specialize_v_one() const;

    std::string str() const;

  private:
    void check_same_order(const CycloLaurent& o) const;

    long m_;
    std::map<long, Cyclotomic> terms_;
};

}  // namespace workbench

#endif  // WORKBENCH_SCALARS_HPP_
