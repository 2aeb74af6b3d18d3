#include "qq/char2.hpp"

#include <cctype>
#include <sstream>

namespace qq {

std::string to_string(F4 c) {
    switch (c.bits()) {
    case 0: return "0";
    case 1: return "1";
    case 2: return "w";
    default: return "w+1";
    }
}

Dyadic Dyadic::make(long long num, unsigned kexp) {
    if (num < 0) throw error(errc::precondition, "dyadic exponents are nonnegative here");
    if (kexp > 32) throw error(errc::limit, "dyadic denominator exponent too large");
    while (num != 0 && (num & 1) == 0 && kexp > 0) {
        num >>= 1;
        --kexp;
    }
    if (num == 0) kexp = 0;
    return Dyadic{num, kexp};
}

Dyadic Dyadic::halved() const { return make(num, kexp + 1); }

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    unsigned k = std::max(a.kexp, b.kexp);
    __int128 s = (static_cast<__int128>(a.num) << (k - a.kexp)) +
                 (static_cast<__int128>(b.num) << (k - b.kexp));
    if (s > (static_cast<__int128>(1) << 62))
        throw error(errc::limit, "dyadic numerator overflow");
    return Dyadic::make(static_cast<long long>(s), k);
}

bool operator<(const Dyadic& a, const Dyadic& b) {
    unsigned k = std::max(a.kexp, b.kexp);
    __int128 la = static_cast<__int128>(a.num) << (k - a.kexp);
    __int128 lb = static_cast<__int128>(b.num) << (k - b.kexp);
    return la < lb;
}

std::string to_string(const Dyadic& d) {
    if (d.kexp == 0) return std::to_string(d.num);
    return std::to_string(d.num) + "/" + std::to_string(1LL << d.kexp);
}

Dyadic parse_dyadic(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Dyadic::integer(std::stoll(text));
        long long num = std::stoll(text.substr(0, slash));
        long long den = std::stoll(text.substr(slash + 1));
        if (den <= 0 || (den & (den - 1)) != 0)
            throw error(errc::parse, "dyadic denominator must be a power of two: " + text);
        unsigned k = 0;
        while ((1LL << k) < den) ++k;
        return Dyadic::make(num, k);
    } catch (const std::invalid_argument&) {
        throw error(errc::parse, "bad dyadic: '" + text + "'");
    } catch (const std::out_of_range&) {
        throw error(errc::parse, "dyadic out of range: '" + text + "'");
    }
}

std::string to_string(const Descriptor& d) {
    if (d.is_zero()) return "(inf, -)";
    return "(" + to_string(*d.v) + ", " + to_string(d.p) + ")";
}

DyadicSeries::DyadicSeries(std::map<Dyadic, F4> terms) {
    for (auto& [e, c] : terms)
        if (!c.is_zero()) terms_.emplace(e, c);
}

DyadicSeries DyadicSeries::term(F4 c, Dyadic e) {
    std::map<Dyadic, F4> m;
    m.emplace(e, c);
    return DyadicSeries(std::move(m));
}

F4 DyadicSeries::coeff(const Dyadic& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? F4::zero() : it->second;
}

DyadicSeries operator+(const DyadicSeries& a, const DyadicSeries& b) {
    std::map<Dyadic, F4> m = a.terms_;
    for (const auto& [e, c] : b.terms_) {
        auto [it, inserted] = m.emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) m.erase(it);
        }
    }
    DyadicSeries out;
    out.terms_ = std::move(m);
    return out;
}

DyadicSeries operator*(const DyadicSeries& a, const DyadicSeries& b) {
    std::map<Dyadic, F4> m;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Dyadic e = ea + eb;
            F4 c = ca * cb;
            auto [it, inserted] = m.emplace(e, c);
            if (!inserted) {
                it->second = it->second + c;
                if (it->second.is_zero()) m.erase(it);
            }
        }
    }
    DyadicSeries out;
    out.terms_ = std::move(m);
    return out;
}

Descriptor dy_val_pan(const DyadicSeries& s) {
    if (s.is_zero()) return Descriptor::zero();
    const auto& [e, c] = *s.terms().begin();
    return Descriptor::of(e, c);
}

DyadicSeries dy_sqrt(const DyadicSeries& s) {
    // (sum c_e X^e)^2 = sum c_e^2 X^{2e} in characteristic two, so the square
    // root is termwise
    std::map<Dyadic, F4> m;
    for (const auto& [e, c] : s.terms()) m.emplace(e.halved(), c.sqrt());
    return DyadicSeries(std::move(m));
}

bool dy_in_A(const DyadicSeries& s) { return s.coeff(Dyadic::integer(0)).in_f2(); }

std::pair<DyadicSeries, DyadicSeries> two_squares(const DyadicSeries& x) {
    Descriptor d = dy_val_pan(x);
    if (!d.is_zero() && !(*d.v > Dyadic::integer(0)))
        throw error(errc::precondition, "two-squares needs an element of the maximal ideal");
    DyadicSeries u = dy_sqrt(DyadicSeries::one() + x);
    return {u, DyadicSeries::one()};
}

namespace {

struct DyParser {
    const std::string& t;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw error(errc::parse, "series syntax error at position " + std::to_string(pos) +
                                     ": " + msg);
    }
    void ws() {
        while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
    }
    bool eof() {
        ws();
        return pos >= t.size();
    }
    char peek() { return t[pos]; }

    F4 coefficient() {
        ws();
        if (pos >= t.size()) fail("expected coefficient");
        char c = t[pos];
        if (c == '0') { ++pos; return F4::zero(); }
        if (c == '1') { ++pos; return F4::one(); }
        if (c == 'w') { ++pos; return F4::omega(); }
        if (c == '(') {
            if (t.compare(pos, 5, "(w+1)") == 0) {
                pos += 5;
                return F4::omega1();
            }
            fail("expected (w+1)");
        }
        fail("expected 0, 1, w or (w+1)");
    }

    Dyadic exponent() {
        ws();
        if (pos < t.size() && t[pos] == '{') {
            ++pos;
            std::size_t close = t.find('}', pos);
            if (close == std::string::npos) fail("expected '}'");
            Dyadic d = parse_dyadic(t.substr(pos, close - pos));
            pos = close + 1;
            return d;
        }
        std::size_t start = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (pos == start) fail("expected exponent");
        return Dyadic::integer(std::stoll(t.substr(start, pos - start)));
    }

    std::pair<F4, Dyadic> term() {
        ws();
        F4 c = F4::one();
        bool have_coeff = false, have_star = false;
        if (pos < t.size() && peek() != 'X' && peek() != 'x') {
            c = coefficient();
            have_coeff = true;
            ws();
            if (pos < t.size() && peek() == '*') {
                ++pos;
                have_star = true;
            }
            ws();
        }
        if (have_star && (pos >= t.size() || (peek() != 'X' && peek() != 'x')))
            fail("expected X after '*'");
        if (pos < t.size() && (peek() == 'X' || peek() == 'x')) {
            ++pos;
            Dyadic e = Dyadic::integer(1);
            ws();
            if (pos < t.size() && peek() == '^') {
                ++pos;
                e = exponent();
            }
            return {c, e};
        }
        if (!have_coeff) fail("expected coefficient or X");
        return {c, Dyadic::integer(0)};
    }
};

} // namespace

DyadicSeries parse_dyadic_series(const std::string& text) {
    DyParser p{text};
    DyadicSeries out;
    if (p.eof()) p.fail("empty series");
    while (true) {
        auto [c, e] = p.term();
        out = out + DyadicSeries::term(c, e);
        if (p.eof()) break;
        if (p.peek() != '+') p.fail("terms are joined by '+'");
        ++p.pos;
    }
    return out;
}

std::string to_string(const DyadicSeries& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : s.terms()) {
        if (!first) os << " + ";
        first = false;
        bool unit_coeff = c == F4::one();
        std::string coeff = c == F4::omega1() ? "(w+1)" : to_string(c);
        if (e == Dyadic::integer(0)) {
            os << coeff;
            continue;
        }
        if (!unit_coeff) os << coeff << "*";
        os << "X";
        if (e != Dyadic::integer(1)) {
            if (e.kexp == 0)
                os << "^" << e.num;
            else
                os << "^{" << to_string(e) << "}";
        }
    }
    return os.str();
}

DyadicSeries random_dyadic_series(SplitMix& rng, unsigned max_terms, unsigned max_num,
                                  unsigned max_kexp) {
    DyadicSeries out;
    unsigned n = static_cast<unsigned>(rng.below(max_terms + 1));
    for (unsigned i = 0; i < n; ++i) {
        Dyadic e = Dyadic::make(rng.range(0, max_num), static_cast<unsigned>(rng.below(max_kexp + 1)));
        F4 c(static_cast<unsigned>(rng.below(4)));
        out = out + DyadicSeries::term(c, e);
    }
    return out;
}

} // namespace qq
