#include "qq/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qq {

std::string to_string(const GaussRat& z) {
    if (z.is_zero()) return "0";
    std::string out;
    if (z.re != 0) out += z.re.get_str();
    if (z.im != 0) {
        if (z.im > 0 && !out.empty()) out += "+";
        if (z.im == 1)
            out += "i";
        else if (z.im == -1)
            out += "-i";
        else
            out += z.im.get_str() + "i";
    }
    return out;
}

std::string to_string(const Valuation& v) {
    std::ostringstream os;
    if (v.is_finite())
        os << v.value;
    else
        os << ">=" << v.value;
    return os.str();
}

Series::Series(std::map<unsigned, GaussRat> coeffs, unsigned precision)
    : precision_(std::min(precision, max_precision)) {
    if (precision_ < 1) throw error(errc::precondition, "series precision must be >= 1");
    for (auto& [e, c] : coeffs) {
        if (e >= precision_) break;
        if (!c.is_zero()) coeffs_.emplace(e, std::move(c));
    }
}

namespace {
// Exponent below which every coefficient is known to vanish.
unsigned val_lower_bound(const Series& s) {
    return s.is_zero() ? s.precision() : s.coeffs().begin()->first;
}
} // namespace

Series Series::monomial(const GaussRat& c, unsigned exponent, unsigned precision) {
    std::map<unsigned, GaussRat> m;
    m.emplace(exponent, c);
    return Series(std::move(m), precision);
}

GaussRat Series::coeff(unsigned exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? GaussRat() : it->second;
}

Series Series::operator-() const {
    std::map<unsigned, GaussRat> m;
    for (const auto& [e, c] : coeffs_) m.emplace(e, -c);
    return Series(std::move(m), precision_);
}

Series operator+(const Series& a, const Series& b) {
    unsigned prec = std::min(a.precision_, b.precision_);
    std::map<unsigned, GaussRat> m = a.coeffs_;
    for (const auto& [e, c] : b.coeffs_) {
        auto [it, inserted] = m.emplace(e, c);
        if (!inserted) it->second += c;
    }
    return Series(std::move(m), prec);
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
    // Effective precision: a coefficient of the product at exponent n only
    // involves unknown inputs once n reaches precision + the other factor's
    // valuation lower bound.
    unsigned prec = std::min(a.precision_ + val_lower_bound(b),
                             b.precision_ + val_lower_bound(a));
    prec = std::min(prec, Series::max_precision);
    std::map<unsigned, GaussRat> m;
    for (const auto& [ea, ca] : a.coeffs_) {
        if (ea >= prec) break;
        for (const auto& [eb, cb] : b.coeffs_) {
            unsigned e = ea + eb;
            if (e >= prec) break;
            auto [it, inserted] = m.emplace(e, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    return Series(std::move(m), prec);
}

Series operator/(const Series& a, const Series& b) {
    Valuation vb = val(b);
    if (!vb.is_finite())
        throw error(errc::domain, "division by a series with no known nonzero coefficient");
    unsigned shift = vb.value;
    Valuation va = val(a);
    if (va.is_finite() && va.value < shift)
        throw error(errc::domain, "quotient would have negative valuation");
    if (!va.is_finite() && va.value < shift)
        throw error(errc::precision,
                    "cannot rule out a negative-valuation quotient at this precision");
    unsigned prec = std::min(a.precision_, b.precision_);
    if (prec <= shift) throw error(errc::precision, "no quotient coefficients are determined");
    unsigned qprec = prec - shift;

    // Long division: q_n = (a_{n+shift} - sum_{k<n} q_k b_{n+shift-k}) / b_shift.
    GaussRat lead = b.coeff(shift);
    std::map<unsigned, GaussRat> q;
    for (unsigned n = 0; n < qprec; ++n) {
        GaussRat acc = a.coeff(n + shift);
        for (const auto& [k, qk] : q) acc -= qk * b.coeff(n + shift - k);
        GaussRat qn = acc / lead;
        if (!qn.is_zero()) q.emplace(n, qn);
    }
    return Series(std::move(q), qprec);
}

Series series_arith(ArithOp op, const Series& a, const Series& b) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    throw error(errc::precondition, "unknown arithmetic op");
}

Valuation val(const Series& s) {
    if (s.is_zero()) return Valuation::at_least(s.precision());
    return Valuation::finite(s.coeffs().begin()->first);
}

GaussRat pan(const Series& s) {
    if (s.is_zero())
        throw error(errc::precision,
                    "pseudo-angular component undefined: all known coefficients vanish");
    return s.coeffs().begin()->second;
}

bool in_A(const Series& s) { return s.coeff(0).is_real(); }

bool is_strict_unit(const Series& s) { return s.coeff(0) == GaussRat(1); }

Series sqrt_strict_unit(const Series& s) {
    if (!is_strict_unit(s))
        throw error(errc::precondition, "square root requires a strict unit (constant term 1)");
    // u_0 = 1, u_n = (s_n - sum_{0<i<n} u_i u_{n-i}) / 2.
    std::map<unsigned, GaussRat> u;
    u.emplace(0u, GaussRat(1));
    for (unsigned n = 1; n < s.precision(); ++n) {
        GaussRat acc = s.coeff(n);
        for (unsigned i = 1; i < n; ++i) {
            auto it = u.find(i);
            if (it == u.end()) continue;
            auto jt = u.find(n - i);
            if (jt == u.end()) continue;
            acc -= it->second * jt->second;
        }
        GaussRat un = acc / GaussRat(2);
        if (!un.is_zero()) u.emplace(n, un);
    }
    return Series(std::move(u), s.precision());
}

Series square_witness(const Series& x, const Series& y) {
    Valuation vx = val(x), vy = val(y);
    if (!vx.is_finite() || !vy.is_finite())
        throw error(errc::precondition, "square witness requires finite valuations");
    if ((vx.value & 1u) != (vy.value & 1u))
        throw error(errc::precondition, "square witness: valuation parity mismatch");
    if (pan(x) != pan(y))
        throw error(errc::precondition, "square witness: pseudo-angular components differ");
    if (vy.value < vx.value)
        throw error(errc::precondition,
                    "square witness: val(y) < val(x) would leave C[[X]]");
    unsigned d = vy.value - vx.value;
    Series shifted = x * Series::monomial(GaussRat(1), d, x.precision() + d);
    Series ratio = y / shifted; // strict unit: same valuation and leading coefficient
    Series root = sqrt_strict_unit(ratio);
    return Series::monomial(GaussRat(1), d / 2, root.precision() + d / 2) * root;
}

Series mixed_square_witness(const Series& a, unsigned g, const GaussRat& k) {
    if (!val(a).is_finite())
        throw error(errc::precondition, "mixed square witness requires finite valuation");
    if (k.is_zero()) throw error(errc::precondition, "mixed square witness requires k != 0");
    return Series::monomial(k, g, a.precision() + g);
}

// --- text form ----------------------------------------------------------

namespace {

class SeriesParser {
public:
    explicit SeriesParser(const std::string& text) : text_(text) {}

    Series parse(std::optional<unsigned> precision_override) {
        skip_ws();
        if (eof()) fail("empty series");
        std::map<unsigned, GaussRat> coeffs;
        unsigned max_exp = 0;
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        while (true) {
            auto [c, e] = term();
            if (negate) c = -c;
            if (!c.is_zero()) {
                auto [it, inserted] = coeffs.emplace(e, c);
                if (!inserted) it->second += c;
            }
            max_exp = std::max(max_exp, e);
            skip_ws();
            if (eof()) break;
            if (peek() == '+')
                negate = false;
            else if (peek() == '-')
                negate = true;
            else
                fail("expected '+' or '-'");
            ++pos_;
        }
        unsigned prec = precision_override ? *precision_override : max_exp + 4;
        if (prec > Series::max_precision)
            throw error(errc::limit, "requested precision exceeds the desk-scale limit of 64");
        return Series(std::move(coeffs), prec);
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw error(errc::parse,
                    "series syntax error at position " + std::to_string(pos_) + ": " + msg);
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    // term := coefficient [xpart] | xpart
    std::pair<GaussRat, unsigned> term() {
        skip_ws();
        if (eof()) fail("expected term");
        GaussRat c(1);
        bool have_coeff = false;
        if (peek() == '(') {
            c = paren_coefficient();
            have_coeff = true;
        } else if (peek() == 'i') {
            ++pos_;
            c = gauss_i();
            have_coeff = true;
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Rat r = rational();
            if (!eof() && peek() == 'i') {
                ++pos_;
                c = GaussRat(Rat(0), r);
            } else {
                c = GaussRat(r);
            }
            have_coeff = true;
        }
        skip_ws();
        if (!eof() && (peek() == 'X' || peek() == 'x')) {
            ++pos_;
            unsigned e = 1;
            if (!eof() && peek() == '^') {
                ++pos_;
                e = exponent();
            }
            return {c, e};
        }
        if (!have_coeff) fail("expected coefficient or X");
        return {c, 0};
    }

    // (re+imi) | (re-imi) | (imi) | (re)
    GaussRat paren_coefficient() {
        ++pos_; // '('
        GaussRat c = signed_part();
        skip_ws();
        if (!eof() && (peek() == '+' || peek() == '-')) {
            bool neg = peek() == '-';
            ++pos_;
            GaussRat d = signed_part();
            c = neg ? c - d : c + d;
        }
        skip_ws();
        if (eof() || peek() != ')') fail("expected ')'");
        ++pos_;
        return c;
    }

    GaussRat signed_part() {
        skip_ws();
        bool neg = false;
        if (!eof() && (peek() == '+' || peek() == '-')) {
            neg = peek() == '-';
            ++pos_;
        }
        skip_ws();
        GaussRat c;
        if (!eof() && peek() == 'i') {
            ++pos_;
            c = gauss_i();
        } else {
            Rat r = rational();
            if (!eof() && peek() == 'i') {
                ++pos_;
                c = GaussRat(Rat(0), r);
            } else {
                c = GaussRat(r);
            }
        }
        return neg ? -c : c;
    }

    Rat rational() {
        skip_ws();
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected number");
        std::string num = text_.substr(start, pos_ - start);
        if (!eof() && peek() == '/') {
            ++pos_;
            std::size_t dstart = pos_;
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (pos_ == dstart) fail("expected denominator");
            std::string den = text_.substr(dstart, pos_ - dstart);
            if (Rat(den) == 0) fail("zero denominator");
            Rat r(num + "/" + den);
            r.canonicalize();
            return r;
        }
        return Rat(num);
    }

    unsigned exponent() {
        skip_ws();
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected exponent");
        unsigned long e = std::stoul(text_.substr(start, pos_ - start));
        if (e >= Series::max_precision)
            throw error(errc::limit, "exponent exceeds the desk-scale precision limit");
        return static_cast<unsigned>(e);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

// Writes one coefficient the way the term grammar reads it back.
std::string coefficient_text(const GaussRat& c, bool lead_of_term) {
    if (c.is_real()) {
        if (lead_of_term && c.re == 1) return "";
        if (lead_of_term && c.re == -1) return "-";
        return c.re.get_str();
    }
    if (c.re == 0) {
        if (c.im == 1) return "i";
        return c.im.get_str() + "i";
    }
    std::string s = "(" + c.re.get_str();
    if (c.im > 0) s += "+";
    if (c.im == 1)
        s += "i";
    else if (c.im == -1)
        s += "-i";
    else
        s += c.im.get_str() + "i";
    return s + ")";
}

} // namespace

Series parse_series(const std::string& text, std::optional<unsigned> precision_override) {
    return SeriesParser(text).parse(precision_override);
}

std::string to_string(const Series& s) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : s.coeffs()) {
        GaussRat shown = c;
        if (!first) {
            // pull a leading real minus out of the term when it prints nicer
            if (c.is_real() && c.re < 0) {
                out += " - ";
                shown = -c;
            } else if (!c.is_real() && c.re == 0 && c.im < 0) {
                out += " - ";
                shown = -c;
            } else {
                out += " + ";
            }
        }
        first = false;
        std::string coeff = coefficient_text(shown, e > 0);
        if (e == 0) {
            out += coeff.empty() ? "1" : coeff;
        } else {
            out += coeff + "X";
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

} // namespace qq
