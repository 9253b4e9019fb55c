#ifndef GRADUS_LAURENT_HPP
#define GRADUS_LAURENT_HPP

#include "gradus/basic.hpp"

#include <iosfwd>
#include <vector>

namespace gradus {

/*
  Exact Laurent polynomials in v with rational coefficients, and their
  fraction field.  Every value is kept in a canonical form so that equality
  is representation equality:

    - Laurent: dense coefficient window [lo, lo+coeffs.size()); the first and
      last stored coefficients are nonzero; 0 is the empty window.
    - Field: num/den with den a polynomial in v, den(0) = 1, and
      gcd(num cleared of v-powers, den) = 1.
*/

class Laurent {
  public:
    Laurent() = default;
    explicit Laurent(const Rat& constant);
    Laurent(const Rat& coeff, int exponent);  // coeff * v^exponent

    static Laurent zero() { return Laurent(); }
    static Laurent one() { return Laurent(Rat(1)); }
    static Laurent v_power(int k) { return Laurent(Rat(1), k); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;

    int lowest_exponent() const;   // requires nonzero
    int highest_exponent() const;  // requires nonzero
    const Rat& coeff(int exponent) const;

    // Terms in increasing exponent order.
    std::vector<std::pair<int, Rat>> terms() const;

    Laurent operator-() const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    bool operator==(const Laurent& o) const = default;

    Laurent scaled(const Rat& c) const;
    Laurent shifted(int k) const;  // * v^k

    // v -> v^{-1}
    Laurent bar() const;

    // Exact evaluation at a rational point (test helper; v=0 allowed only
    // for polynomials).
    Rat evaluate(const Rat& x) const;

    bool is_polynomial() const { return is_zero() || lowest_exponent() >= 0; }
    // True iff in Z[v] (resp. Z[v,v^{-1}], resp. 1 + vZ[v], resp. vZ[v]).
    bool has_integer_coeffs() const;
    bool in_one_plus_vZ() const;
    bool in_vZ() const;
    // True iff only even exponents occur.
    bool is_even() const;

    // Constant coefficient and the remainder class mod vZ[v].  Errors with
    // NegativeExponent unless *this lies in Q[v].
    struct ModV {
        Rat constant;
        Laurent remainder;  // *this - constant, a multiple of v
    };
    ModV truncate_mod_v() const;

    // Minimal exponent with nonzero coefficient and that coefficient.
    // Errors with ZeroPolynomial on 0.
    std::pair<int, Rat> lowest_degree() const;

    // Rendering "c*v^k + ..." in increasing exponent order; parse() accepts
    // exactly that format (plus "0").
    std::string to_string() const;
    static Laurent parse(const std::string& text);

  private:
    void normalize();
    int lo_ = 0;
    std::vector<Rat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Laurent& f);

// Polynomial helpers (arguments must be polynomials in v).
Laurent poly_divmod(const Laurent& a, const Laurent& b, Laurent& remainder);
Laurent poly_gcd(const Laurent& a, const Laurent& b);  // monic
bool poly_divides(const Laurent& a, const Laurent& b);  // a | b
Laurent poly_div_exact(const Laurent& a, const Laurent& b);

class Field {
  public:
    Field() : num_(), den_(Laurent::one()) {}
    Field(const Laurent& numerator, const Laurent& denominator);
    explicit Field(const Laurent& f) : num_(f), den_(Laurent::one()) {}
    explicit Field(const Rat& c) : num_(Laurent(c)), den_(Laurent::one()) {}

    static Field zero() { return Field(); }
    static Field one() { return Field(Laurent::one()); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_laurent() const { return den_.is_one(); }
    // Errors with NonPolynomialEntry if the denominator is not 1.
    const Laurent& as_laurent(const char* context = "scalar") const;

    Field operator-() const;
    Field operator+(const Field& o) const;
    Field operator-(const Field& o) const;
    Field operator*(const Field& o) const;
    Field operator/(const Field& o) const;
    Field& operator+=(const Field& o) { return *this = *this + o; }
    Field& operator-=(const Field& o) { return *this = *this - o; }
    Field& operator*=(const Field& o) { return *this = *this * o; }
    Field& operator/=(const Field& o) { return *this = *this / o; }
    bool operator==(const Field& o) const = default;

    Field inverse() const;
    Field bar() const;

    std::string to_string() const;
    static Field parse(const std::string& text);

  private:
    void canonicalize();
    Laurent num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Field& f);

inline Field field_v_power(int k) { return Field(Laurent::v_power(k)); }

}  // namespace gradus

#endif
