#pragma once

// Exact arithmetic for two-variable Laurent polynomials over arbitrary-
// precision integers. This is the value type everything else in the
// library computes with: cluster variables, matching polynomials,
// Chebyshev-type basis elements.
//
// Terms are kept in a canonical order (graded lexicographic, x1 before x2,
// descending), so printing, JSON output and equality are deterministic.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rank2 {

using Int = boost::multiprecision::cpp_int;

struct NotDivisible : std::runtime_error {
    NotDivisible() : std::runtime_error("laurent: exact division failed") {}
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct NonUnitAtNegativeExponent : std::runtime_error {
    NonUnitAtNegativeExponent()
        : std::runtime_error("laurent: evaluation at a non-unit with a negative exponent") {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error("laurent parse: " + what) {}
};

// Exponent pair of a Laurent monomial x1^e1 * x2^e2; either entry may be
// negative.
struct Exponents {
    std::int64_t e1 = 0;
    std::int64_t e2 = 0;

    friend bool operator==(const Exponents&, const Exponents&) = default;
};

// Canonical term order: total degree descending, then e1 descending, then
// e2 descending.
struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const std::int64_t ga = a.e1 + a.e2;
        const std::int64_t gb = b.e1 + b.e2;
        if (ga != gb) return ga > gb;
        if (a.e1 != b.e1) return a.e1 > b.e1;
        return a.e2 > b.e2;
    }
};

class Laurent {
public:
    using TermMap = std::map<Exponents, Int, TermOrder>;

    Laurent() = default;
    Laurent(int c) { add_term({0, 0}, c); }                // NOLINT(google-explicit-constructor)
    Laurent(const Int& c) { add_term({0, 0}, c); }         // NOLINT(google-explicit-constructor)

    static Laurent monomial(std::int64_t e1, std::int64_t e2, Int coeff = 1) {
        Laurent p;
        p.add_term({e1, e2}, std::move(coeff));
        return p;
    }
    static Laurent x1() { return monomial(1, 0); }
    static Laurent x2() { return monomial(0, 1); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Int coeff(std::int64_t e1, std::int64_t e2) const {
        auto it = terms_.find({e1, e2});
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Exponents& e, Int c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Bulk-append of nonzero terms already in canonical order, strictly
    // after everything stored so far.
    void append_sorted(const Exponents& e, Int c) { terms_.emplace_hint(terms_.end(), e, std::move(c)); }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend Laurent operator-(const Laurent& a) { return Laurent() - a; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
    Laurent& operator-=(const Laurent& b) { return *this = *this - b; }
    Laurent& operator*=(const Laurent& b) { return *this = *this * b; }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    // Exchanges the roles of the two variables in every term.
    Laurent swap_vars() const {
        Laurent r;
        for (const auto& [e, c] : terms_) r.add_term({e.e2, e.e1}, c);
        return r;
    }

    // True iff the polynomial is nonzero and every stored coefficient is
    // positive.
    bool is_strictly_positive() const {
        if (terms_.empty()) return false;
        for (const auto& [e, c] : terms_)
            if (c <= 0) return false;
        return true;
    }

    // Smallest exponent of x1 (resp. x2) over all terms; nullopt for 0.
    std::optional<std::int64_t> min_e1() const {
        std::optional<std::int64_t> m;
        for (const auto& [e, c] : terms_)
            if (!m || e.e1 < *m) m = e.e1;
        return m;
    }
    std::optional<std::int64_t> min_e2() const {
        std::optional<std::int64_t> m;
        for (const auto& [e, c] : terms_)
            if (!m || e.e2 < *m) m = e.e2;
        return m;
    }

    // The polynomial with all exponents shifted by (d1, d2).
    Laurent shifted(std::int64_t d1, std::int64_t d2) const {
        Laurent r;
        for (const auto& [e, c] : terms_) r.add_term({e.e1 + d1, e.e2 + d2}, c);
        return r;
    }

    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const Laurent& p) {
        return os << p.to_string();
    }

private:
    TermMap terms_;
};

namespace detail {

// Multiplication accumulates into a hash map keyed by packed exponents and
// sorts once at the end; term counts grow into the thousands for deep
// recurrence indices and a tree insert per partial product is the
// bottleneck there.
class Accumulator {
public:
    void add(std::int64_t e1, std::int64_t e2, const Int& ca, const Int& cb) {
        Int& slot = sums_[pack(e1, e2)];
        slot += ca * cb;
    }
    void add_doubled(std::int64_t e1, std::int64_t e2, const Int& ca, const Int& cb) {
        Int& slot = sums_[pack(e1, e2)];
        Int prod = ca * cb;
        prod <<= 1;
        slot += prod;
    }

    Laurent take() {
        std::vector<std::pair<Exponents, Int>> flat;
        flat.reserve(sums_.size());
        for (auto& [key, c] : sums_) {
            if (c != 0) flat.emplace_back(unpack(key), std::move(c));
        }
        std::sort(flat.begin(), flat.end(),
                  [](const auto& a, const auto& b) { return TermOrder{}(a.first, b.first); });
        Laurent out;
        for (auto& [e, c] : flat) out.append_sorted(e, std::move(c));
        return out;
    }

private:
    static std::uint64_t pack(std::int64_t e1, std::int64_t e2) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e1)) << 32) |
               static_cast<std::uint32_t>(e2);
    }
    static Exponents unpack(std::uint64_t key) {
        return {static_cast<std::int32_t>(key >> 32),
                static_cast<std::int32_t>(key & 0xffffffffu)};
    }
    struct Mix {
        std::size_t operator()(std::uint64_t k) const {
            return static_cast<std::size_t>(k * 0x9E3779B97F4A7C15ull);
        }
    };
    std::unordered_map<std::uint64_t, Int, Mix> sums_;
};

}  // namespace detail

inline Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Single-term factors are pure shifts.
    if (b.term_count() == 1) {
        const auto& [eb, cb] = *b.terms().begin();
        Laurent r;
        for (const auto& [ea, ca] : a.terms()) r.append_sorted({ea.e1 + eb.e1, ea.e2 + eb.e2}, ca * cb);
        return r;
    }
    if (a.term_count() == 1) return b * a;
    detail::Accumulator acc;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) acc.add(ea.e1 + eb.e1, ea.e2 + eb.e2, ca, cb);
    return acc.take();
}

// Squaring only walks the upper triangle of the term-pair matrix.
inline Laurent square(const Laurent& a) {
    if (a.is_zero()) return {};
    detail::Accumulator acc;
    for (auto i = a.terms().begin(); i != a.terms().end(); ++i) {
        acc.add(2 * i->first.e1, 2 * i->first.e2, i->second, i->second);
        for (auto j = std::next(i); j != a.terms().end(); ++j)
            acc.add_doubled(i->first.e1 + j->first.e1, i->first.e2 + j->first.e2, i->second,
                            j->second);
    }
    return acc.take();
}

inline Laurent pow(const Laurent& a, std::uint64_t k) {
    if (k == 0) return 1;
    if (k == 1) return a;
    Laurent half = pow(a, k / 2);
    Laurent result = square(half);
    if (k & 1) result *= a;
    return result;
}

namespace detail {

// Exact division of univariate polynomials in x2 over the integers.
// Inputs are Laurent values whose terms all have e1 == 0 and e2 >= 0.
inline Laurent exact_div_univariate_x2(Laurent a, const Laurent& b) {
    auto deg = [](const Laurent& p) {
        std::int64_t d = -1;
        for (const auto& [e, c] : p.terms())
            if (e.e2 > d) d = e.e2;
        return d;
    };
    const std::int64_t db = deg(b);
    Int lb;
    for (const auto& [e, c] : b.terms())
        if (e.e2 == db) lb = c;

    Laurent q;
    while (!a.is_zero()) {
        const std::int64_t da = deg(a);
        if (da < db) throw NotDivisible();
        Int la;
        for (const auto& [e, c] : a.terms())
            if (e.e2 == da) la = c;
        if (la % lb != 0) throw NotDivisible();
        const Laurent t = Laurent::monomial(0, da - db, la / lb);
        q += t;
        a -= t * b;
    }
    return q;
}

// Exact division of ordinary (nonnegative-exponent) bivariate polynomials,
// performed as univariate division in x1 with coefficients in Z[x2].
inline Laurent exact_div_poly(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return {};

    auto coeffs_by_e1 = [](const Laurent& p) {
        std::map<std::int64_t, Laurent> out;
        for (const auto& [e, c] : p.terms()) out[e.e1].add_term({0, e.e2}, c);
        return out;
    };

    std::map<std::int64_t, Laurent> ra = coeffs_by_e1(a);
    const std::map<std::int64_t, Laurent> rb = coeffs_by_e1(b);
    const std::int64_t db = rb.rbegin()->first;
    const Laurent& lead_b = rb.rbegin()->second;

    Laurent q;
    while (!ra.empty()) {
        const std::int64_t da = ra.rbegin()->first;
        if (da < db) throw NotDivisible();
        const Laurent t = exact_div_univariate_x2(ra.rbegin()->second, lead_b).shifted(da - db, 0);
        q += t;
        for (const auto& [eb, cb] : rb) {
            auto& slot = ra[eb + da - db];
            slot -= t.shifted(-(da - db), 0) * cb;
            if (slot.is_zero()) ra.erase(eb + da - db);
        }
    }
    return q;
}

}  // namespace detail

// Exact division: returns q with q*b == a, or throws NotDivisible when no
// such Laurent polynomial exists. Negative exponents are first cleared by
// monomial shifts; the lowest exponent of each variable in the quotient is
// determined by the factorization, so the shifted problem is an ordinary
// polynomial division.
inline Laurent div_exact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw std::invalid_argument("div_exact: division by zero");
    if (a.is_zero()) return {};
    const std::int64_t a1 = *a.min_e1(), a2 = *a.min_e2();
    const std::int64_t b1 = *b.min_e1(), b2 = *b.min_e2();
    const Laurent q = detail::exact_div_poly(a.shifted(-a1, -a2), b.shifted(-b1, -b2));
    return q.shifted(a1 - b1, a2 - b2);
}

// Evaluates at integer arguments. A negative exponent is only legal when
// the corresponding argument is 1 or -1.
inline Int eval(const Laurent& p, const Int& v1, const Int& v2) {
    auto ipow = [](const Int& v, std::int64_t e) -> Int {
        if (e < 0) {
            if (v != 1 && v != -1) throw NonUnitAtNegativeExponent();
            e = -e;
        }
        Int r = 1, base = v;
        auto k = static_cast<std::uint64_t>(e);
        while (k > 0) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    };
    Int total = 0;
    for (const auto& [e, c] : p.terms()) total += c * ipow(v1, e.e1) * ipow(v2, e.e2);
    return total;
}

inline Laurent swap_vars(const Laurent& p) { return p.swap_vars(); }
inline bool is_strictly_positive(const Laurent& p) { return p.is_strictly_positive(); }

// A Laurent monomial with unit coefficient, used for denominators and edge
// weights.
struct Monomial {
    std::int64_t e1 = 0;
    std::int64_t e2 = 0;

    Laurent laurent() const { return Laurent::monomial(e1, e2); }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// ---------------------------------------------------------------------------
// Canonical text form: `c*x1^a*x2^b` terms joined by `+`/`-`, in canonical
// term order. parse() accepts exactly what to_string() produces (plus
// arbitrary spacing).

inline std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c < 0;
        const Int mag = neg ? Int(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::ostringstream term;
        bool printed = false;
        if (mag != 1 || (e.e1 == 0 && e.e2 == 0)) {
            term << mag;
            printed = true;
        }
        auto var = [&](const char* name, std::int64_t exp) {
            if (exp == 0) return;
            if (printed) term << "*";
            term << name;
            if (exp != 1) term << "^" << exp;
            printed = true;
        };
        var("x1", e.e1);
        var("x2", e.e2);
        os << term.str();
    }
    return os.str();
}

namespace detail {

class TermParser {
public:
    explicit TermParser(const std::string& s) : s_(s) {}

    Laurent parse() {
        Laurent result;
        skip_ws();
        bool neg = accept('-');
        while (true) {
            Laurent t = parse_term();
            result += neg ? -t : t;
            skip_ws();
            if (accept('+')) neg = false;
            else if (accept('-')) neg = true;
            else break;
        }
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input at offset " + std::to_string(pos_));
        return result;
    }

private:
    Laurent parse_term() {
        skip_ws();
        Int coeff = 1;
        std::int64_t e1 = 0, e2 = 0;
        bool any = false;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            coeff = parse_int();
            any = true;
        }
        while (true) {
            skip_ws();
            if (any && !accept('*')) break;
            skip_ws();
            if (pos_ + 1 < s_.size() && s_[pos_] == 'x' && (s_[pos_ + 1] == '1' || s_[pos_ + 1] == '2')) {
                const bool first_var = s_[pos_ + 1] == '1';
                pos_ += 2;
                std::int64_t exp = 1;
                skip_ws();
                if (accept('^')) {
                    skip_ws();
                    const bool negexp = accept('-');
                    exp = parse_small_int();
                    if (negexp) exp = -exp;
                }
                (first_var ? e1 : e2) += exp;
                any = true;
            } else if (!any) {
                throw ParseError("expected term at offset " + std::to_string(pos_));
            } else {
                throw ParseError("expected variable after '*' at offset " + std::to_string(pos_));
            }
        }
        if (!any) throw ParseError("empty term");
        Laurent t;
        t.add_term({e1, e2}, coeff);
        return t;
    }

    Int parse_int() {
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
        if (digits.empty()) throw ParseError("expected integer at offset " + std::to_string(pos_));
        return Int(digits);
    }

    std::int64_t parse_small_int() {
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
        if (digits.empty()) throw ParseError("expected exponent at offset " + std::to_string(pos_));
        return std::stoll(digits);
    }

    void skip_ws() {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }
    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Laurent parse_laurent(const std::string& s) { return detail::TermParser(s).parse(); }

// JSON term list: [[e1, e2, "coeff"], ...] in canonical order. Kept as a
// plain triple vector so callers can serialize with whatever JSON layer
// they use.
inline std::vector<std::tuple<std::int64_t, std::int64_t, std::string>> json_terms(const Laurent& p) {
    std::vector<std::tuple<std::int64_t, std::int64_t, std::string>> out;
    out.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) out.emplace_back(e.e1, e.e2, c.str());
    return out;
}

}  // namespace rank2
