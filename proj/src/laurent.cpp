#include "gradus/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace gradus {

Laurent::Laurent(const Rat& constant) {
    if (constant != 0) {
        lo_ = 0;
        coeffs_.push_back(constant);
    }
}

Laurent::Laurent(const Rat& coeff, int exponent) {
    if (coeff != 0) {
        lo_ = exponent;
        coeffs_.push_back(coeff);
    }
}

void Laurent::normalize() {
    size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    size_t last = coeffs_.size();
    while (last > first && coeffs_[last - 1] == 0) --last;
    if (first == last) {
        coeffs_.clear();
        lo_ = 0;
        return;
    }
    if (first > 0 || last < coeffs_.size()) {
        std::vector<Rat> trimmed(coeffs_.begin() + first, coeffs_.begin() + last);
        coeffs_ = std::move(trimmed);
        lo_ += static_cast<int>(first);
    }
}

bool Laurent::is_one() const {
    return coeffs_.size() == 1 && lo_ == 0 && coeffs_[0] == 1;
}

int Laurent::lowest_exponent() const {
    if (is_zero()) throw InvariantViolation("ZeroPolynomial", "lowest_exponent of 0");
    return lo_;
}

int Laurent::highest_exponent() const {
    if (is_zero()) throw InvariantViolation("ZeroPolynomial", "highest_exponent of 0");
    return lo_ + static_cast<int>(coeffs_.size()) - 1;
}

const Rat& Laurent::coeff(int exponent) const {
    static const Rat kZero(0);
    if (is_zero() || exponent < lo_ || exponent >= lo_ + static_cast<int>(coeffs_.size()))
        return kZero;
    return coeffs_[exponent - lo_];
}

std::vector<std::pair<int, Rat>> Laurent::terms() const {
    std::vector<std::pair<int, Rat>> out;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.emplace_back(lo_ + static_cast<int>(i), coeffs_[i]);
    return out;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int lo = std::min(lo_, o.lo_);
    int hi = std::max(lo_ + static_cast<int>(coeffs_.size()),
                      o.lo_ + static_cast<int>(o.coeffs_.size()));
    Laurent r;
    r.lo_ = lo;
    r.coeffs_.assign(static_cast<size_t>(hi - lo), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[lo_ - lo + i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[o.lo_ - lo + i] += o.coeffs_[i];
    r.normalize();
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    if (is_zero() || o.is_zero()) return Laurent();
    Laurent r;
    r.lo_ = lo_ + o.lo_;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    r.normalize();
    return r;
}

Laurent Laurent::scaled(const Rat& c) const {
    if (c == 0) return Laurent();
    Laurent r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Laurent Laurent::shifted(int k) const {
    Laurent r = *this;
    if (!r.is_zero()) r.lo_ += k;
    return r;
}

Laurent Laurent::bar() const {
    if (is_zero()) return Laurent();
    Laurent r;
    r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    r.lo_ = -(lo_ + static_cast<int>(coeffs_.size()) - 1);
    return r;
}

Rat Laurent::evaluate(const Rat& x) const {
    if (is_zero()) return Rat(0);
    if (x == 0 && lo_ < 0)
        throw InvariantViolation("NegativeExponent", "evaluating v^(<0) at 0");
    // Horner on the polynomial part, then the v^lo factor.
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    Rat p(1);
    int e = lo_ < 0 ? -lo_ : lo_;
    for (int i = 0; i < e; ++i) p *= x;
    return lo_ < 0 ? acc / p : acc * p;
}

bool Laurent::has_integer_coeffs() const {
    for (const auto& c : coeffs_)
        if (denominator(c) != 1) return false;
    return true;
}

bool Laurent::in_one_plus_vZ() const {
    if (!is_polynomial() || !has_integer_coeffs()) return false;
    return coeff(0) == 1;
}

bool Laurent::in_vZ() const {
    if (is_zero()) return true;
    return is_polynomial() && has_integer_coeffs() && lowest_exponent() >= 1;
}

bool Laurent::is_even() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0 && (lo_ + static_cast<int>(i)) % 2 != 0) return false;
    return true;
}

Laurent::ModV Laurent::truncate_mod_v() const {
    if (!is_polynomial())
        throw InvariantViolation("NegativeExponent",
                                 "truncate_mod_v on " + to_string());
    ModV out;
    out.constant = coeff(0);
    out.remainder = *this - Laurent(out.constant);
    return out;
}

std::pair<int, Rat> Laurent::lowest_degree() const {
    if (is_zero()) throw InvariantViolation("ZeroPolynomial", "lowest_degree of 0");
    return {lo_, coeffs_.front()};
}

std::string Laurent::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = c > 0 ? c : Rat(-c);
        os << a << "*v^" << e;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Laurent& f) { return os << f.to_string(); }

namespace {

// One term "c*v^k"; `c` is an unsigned rational literal.
std::pair<int, Rat> parse_term(const std::string& t) {
    auto star = t.find("*v^");
    if (star == std::string::npos)
        throw InputError("bad Laurent term '" + t + "' (want c*v^k)");
    Rat c = parse_rat(t.substr(0, star));
    std::string es = t.substr(star + 3);
    try {
        return {std::stoi(es), c};
    } catch (const std::exception&) {
        throw InputError("bad exponent in Laurent term '" + t + "'");
    }
}

}  // namespace

Laurent Laurent::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ') s.push_back(ch);
    if (s.empty()) throw InputError("empty Laurent literal");
    if (s == "0") return Laurent();
    Laurent out;
    size_t pos = 0;
    int sign = 1;
    if (s[0] == '-') {
        sign = -1;
        pos = 1;
    } else if (s[0] == '+') {
        pos = 1;
    }
    while (pos < s.size()) {
        size_t next = pos;
        // The split points are top-level +/- signs; exponents may carry their
        // own '-' right after '^'.
        while (next < s.size()) {
            if ((s[next] == '+' || s[next] == '-') && next > 0 && s[next - 1] != '^') break;
            ++next;
        }
        auto [e, c] = parse_term(s.substr(pos, next - pos));
        out += Laurent(sign > 0 ? c : Rat(-c), e);
        if (next >= s.size()) break;
        sign = s[next] == '-' ? -1 : 1;
        pos = next + 1;
    }
    return out;
}

Laurent poly_divmod(const Laurent& a, const Laurent& b, Laurent& remainder) {
    if (!a.is_polynomial() || !b.is_polynomial())
        throw InvariantViolation("NegativeExponent", "poly_divmod on Laurent input");
    if (b.is_zero()) throw InvariantViolation("ZeroPolynomial", "division by zero");
    Laurent q, r = a;
    int db = b.highest_exponent();
    const Rat lead_b = b.coeff(db);
    while (!r.is_zero() && r.highest_exponent() >= db) {
        int k = r.highest_exponent() - db;
        Rat c = r.coeff(r.highest_exponent()) / lead_b;
        Laurent t(c, k);
        q += t;
        r -= t * b;
    }
    remainder = r;
    return q;
}

Laurent poly_gcd(const Laurent& a, const Laurent& b) {
    Laurent x = a, y = b;
    while (!y.is_zero()) {
        Laurent r;
        poly_divmod(x, y, r);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.scaled(Rat(1) / x.coeff(x.highest_exponent()));  // monic
}

bool poly_divides(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) return true;
    Laurent r;
    poly_divmod(b, a, r);
    return r.is_zero();
}

Laurent poly_div_exact(const Laurent& a, const Laurent& b) {
    Laurent r;
    Laurent q = poly_divmod(a, b, r);
    if (!r.is_zero())
        throw InvariantViolation("NonPolynomialEntry",
                                 "inexact polynomial division: (" + a.to_string() +
                                     ") / (" + b.to_string() + ")");
    return q;
}

Field::Field(const Laurent& numerator, const Laurent& denominator)
    : num_(numerator), den_(denominator) {
    if (den_.is_zero()) throw InvariantViolation("ZeroPolynomial", "zero denominator");
    canonicalize();
}

void Field::canonicalize() {
    if (num_.is_zero()) {
        den_ = Laurent::one();
        return;
    }
    // Clear v-powers so both parts are polynomials with nonzero constant term,
    // remembering the net shift on the numerator.
    int shift = num_.lowest_exponent() - den_.lowest_exponent();
    Laurent a = num_.shifted(-num_.lowest_exponent());
    Laurent b = den_.shifted(-den_.lowest_exponent());
    Laurent g = poly_gcd(a, b);
    if (!g.is_one()) {
        a = poly_div_exact(a, g);
        b = poly_div_exact(b, g);
    }
    // den(0) = 1 pins the remaining unit.
    Rat c = b.coeff(0);
    num_ = a.scaled(Rat(1) / c).shifted(shift);
    den_ = b.scaled(Rat(1) / c);
}

const Laurent& Field::as_laurent(const char* context) const {
    if (!den_.is_one())
        throw InvariantViolation("NonPolynomialEntry",
                                 std::string(context) + " is not a Laurent polynomial: " +
                                     to_string());
    return num_;
}

Field Field::operator-() const {
    Field r = *this;
    r.num_ = -r.num_;
    return r;
}

Field Field::operator+(const Field& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return Field(num_ + o.num_, den_);
    return Field(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Field Field::operator-(const Field& o) const { return *this + (-o); }

Field Field::operator*(const Field& o) const {
    if (is_zero() || o.is_zero()) return Field();
    return Field(num_ * o.num_, den_ * o.den_);
}

Field Field::operator/(const Field& o) const { return *this * o.inverse(); }

Field Field::inverse() const {
    if (is_zero()) throw InvariantViolation("ZeroPolynomial", "inverse of 0");
    return Field(den_, num_);
}

Field Field::bar() const {
    if (is_zero()) return Field();
    return Field(num_.bar(), den_.bar());
}

std::string Field::to_string() const {
    if (is_laurent()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Field Field::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ') s.push_back(ch);
    if (!s.empty() && s[0] == '(') {
        auto mid = s.find(")/(");
        if (mid == std::string::npos || s.back() != ')')
            throw InputError("bad Field literal '" + text + "'");
        return Field(Laurent::parse(s.substr(1, mid - 1)),
                     Laurent::parse(s.substr(mid + 3, s.size() - mid - 4)));
    }
    return Field(Laurent::parse(s));
}

std::ostream& operator<<(std::ostream& os, const Field& f) { return os << f.to_string(); }

}  // namespace gradus
