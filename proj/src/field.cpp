#include "schurq/field.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace schurq {

FieldElem FieldElem::rational(long num, long den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return FieldElem(r);
}

FieldElem FieldElem::sqrt2_pow(long e) {
    if (e < 0)
        return sqrt2_pow(-e).inverse();
    Rational p(1);
    for (long j = 0; j < e / 2; ++j)
        p *= 2;
    if (e % 2 == 0)
        return FieldElem(p);
    return FieldElem(0, 0, p, 0);
}

FieldElem FieldElem::two_pow(long e) {
    Rational p(1);
    for (long j = 0; j < (e >= 0 ? e : -e); ++j)
        p *= 2;
    if (e < 0)
        p = Rational(1) / p;
    return FieldElem(p);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    // (a1 + b1 i + c1 r + d1 ir)(a2 + b2 i + c2 r + d2 ir), r = sqrt2:
    // i^2 = -1, r^2 = 2, (ir)^2 = -2, i*r = ir, i*ir = -r, r*ir = 2i.
    return FieldElem(
        a_ * o.a_ - b_ * o.b_ + 2 * (c_ * o.c_ - d_ * o.d_),
        a_ * o.b_ + b_ * o.a_ + 2 * (c_ * o.d_ + d_ * o.c_),
        a_ * o.c_ + c_ * o.a_ - b_ * o.d_ - d_ * o.b_,
        a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_);
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    a_ += o.a_;
    b_ += o.b_;
    c_ += o.c_;
    d_ += o.d_;
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    c_ -= o.c_;
    d_ -= o.d_;
    return *this;
}

FieldElem FieldElem::inverse() const {
    if (is_zero())
        throw std::domain_error("division by zero in Q(i,sqrt2)");
    // x * conj_i(x) lies in Q(sqrt2); multiplying by its sqrt2-conjugate
    // lands in Q, so the inverse is (conj products) / norm.
    FieldElem u = *this * conj_i();               // in Q(sqrt2)
    FieldElem norm = u * u.conj_sqrt2();          // in Q
    Rational n = norm.a_;
    FieldElem num = conj_i() * u.conj_sqrt2();
    Rational inv_n = Rational(1) / n;
    return FieldElem(num.a_ * inv_n, num.b_ * inv_n, num.c_ * inv_n, num.d_ * inv_n);
}

Classification FieldElem::classify() const {
    Subfield sub;
    if (b_ == 0 && c_ == 0 && d_ == 0)
        sub = Subfield::rational;
    else if (c_ == 0 && d_ == 0)
        sub = Subfield::gaussian;
    else if (b_ == 0 && d_ == 0)
        sub = Subfield::real_quadratic;
    else
        sub = Subfield::generic;
    bool integral = a_.get_den() == 1 && b_.get_den() == 1 && c_.get_den() == 1 &&
                    d_.get_den() == 1;
    return Classification{sub, integral};
}

bool FieldElem::is_integer() const {
    return b_ == 0 && c_ == 0 && d_ == 0 && a_.get_den() == 1;
}

std::string Classification::str() const {
    std::string s;
    switch (subfield) {
    case Subfield::rational: s = "rational"; break;
    case Subfield::gaussian: s = "gaussian"; break;
    case Subfield::real_quadratic: s = "real-quadratic"; break;
    case Subfield::generic: s = "generic"; break;
    }
    s += integral ? ", integral" : ", non-integral";
    return s;
}

static std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r.get_num() << "/" << r.get_den();
    return os.str();
}

std::string FieldElem::str() const {
    return rat_str(a_) + " + " + rat_str(b_) + "*i + " + rat_str(c_) + "*r2 + " +
           rat_str(d_) + "*ir2";
}

static Rational parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("bad rational: " + s);
    Rational r(s);
    r.canonicalize();
    return r;
}

FieldElem FieldElem::parse(const std::string& text) {
    // Split on " + "; expect exactly the four canonical components.
    std::vector<std::string> parts;
    size_t pos = 0;
    while (true) {
        auto next = text.find(" + ", pos);
        if (next == std::string::npos) {
            parts.push_back(text.substr(pos));
            break;
        }
        parts.push_back(text.substr(pos, next - pos));
        pos = next + 3;
    }
    if (parts.size() != 4)
        throw std::invalid_argument("bad field element: " + text);
    auto strip = [](std::string s, const std::string& suffix) {
        if (s.size() < suffix.size() || s.substr(s.size() - suffix.size()) != suffix)
            throw std::invalid_argument("bad field component: " + s);
        return s.substr(0, s.size() - suffix.size());
    };
    return FieldElem(parse_rat(parts[0]), parse_rat(strip(parts[1], "*i")),
                     parse_rat(strip(parts[2], "*r2")), parse_rat(strip(parts[3], "*ir2")));
}

static std::string short_rat(const Rational& r) {
    std::ostringstream os;
    if (r.get_den() == 1)
        os << r.get_num();
    else
        os << r.get_num() << "/" << r.get_den();
    return os.str();
}

std::string FieldElem::short_str() const {
    if (is_zero())
        return "0";
    std::string out;
    auto add = [&out](const Rational& r, const char* unit) {
        if (r == 0)
            return;
        std::string term;
        if (unit[0] == '\0') {
            term = short_rat(r);
        } else if (r == 1) {
            term = unit;
        } else if (r == -1) {
            term = std::string("-") + unit;
        } else {
            term = short_rat(r) + "*" + unit;
        }
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    };
    add(a_, "");
    add(b_, "i");
    add(c_, "r2");
    add(d_, "ir2");
    return out;
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) {
    return os << x.short_str();
}

FieldElem pow(const FieldElem& x, long e) {
    if (e < 0)
        return pow(x, -e).inverse();
    FieldElem out = FieldElem::one();
    FieldElem base = x;
    while (e > 0) {
        if (e & 1)
            out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

} // namespace schurq
