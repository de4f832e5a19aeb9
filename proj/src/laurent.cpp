#include "homocyl/laurent.hpp"

#include <cctype>
#include <sstream>

namespace homocyl {

Laurent Laurent::constant(std::vector<std::string> vars, const Rational& c) {
    Laurent p(std::move(vars));
    p.add_term(ExpVec(p.vars_.size(), 0), c);
    return p;
}

Laurent Laurent::monomial(std::vector<std::string> vars, ExpVec e, const Rational& c) {
    Laurent p(std::move(vars));
    if (e.size() != p.vars_.size())
        throw std::domain_error("monomial: exponent vector length does not match variable list");
    p.add_term(e, c);
    return p;
}

Laurent Laurent::variable(std::vector<std::string> vars, const std::string& name) {
    Laurent p(std::move(vars));
    int i = p.var_index(name);
    if (i < 0) throw std::domain_error("unknown variable: " + name);
    ExpVec e(p.vars_.size(), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.add_term(e, 1);
    return p;
}

bool Laurent::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    return c == 1 && std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

bool Laurent::is_monomial_unit() const {
    if (terms_.size() != 1) return false;
    const Rational& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

bool Laurent::is_integral() const {
    for (const auto& [e, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

const std::pair<const ExpVec, Rational>& Laurent::lead() const {
    if (is_zero()) throw std::domain_error("lead() of zero polynomial");
    return *terms_.begin();
}

void Laurent::add_term(const ExpVec& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Laurent::check_same_vars(const Laurent& o) const {
    if (vars_ != o.vars_)
        throw std::domain_error("Laurent arithmetic on mismatched variable lists");
}

int Laurent::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

Laurent Laurent::operator-() const {
    Laurent r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    a.check_same_vars(b);
    Laurent r(a.vars_);
    ExpVec e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Laurent Laurent::scaled(const Rational& c) const {
    Laurent r(vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Laurent Laurent::involute() const {
    Laurent r(vars_);
    ExpVec e(vars_.size());
    for (const auto& [ex, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = -ex[i];
        r.terms_.emplace(e, c);
    }
    return r;
}

Laurent Laurent::shift(const ExpVec& delta) const {
    if (delta.size() != vars_.size())
        throw std::domain_error("shift: exponent vector length mismatch");
    Laurent r(vars_);
    ExpVec e(vars_.size());
    for (const auto& [ex, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + delta[i];
        r.terms_.emplace(e, c);
    }
    return r;
}

ExpVec Laurent::min_exponents() const {
    if (is_zero()) throw std::domain_error("min_exponents of zero polynomial");
    ExpVec m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

int Laurent::degree_in(const std::string& var) const {
    if (is_zero()) throw std::domain_error("degree_in of zero polynomial");
    int i = var_index(var);
    if (i < 0) throw std::domain_error("unknown variable: " + var);
    int d = terms_.begin()->first[static_cast<std::size_t>(i)];
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
    return d;
}

namespace {

Rational rational_pow(const Rational& base, int e) {
    if (e == 0) return 1;
    if (base == 0) {
        if (e < 0) throw std::domain_error("zero substituted into a negative exponent");
        return 0;
    }
    Rational b = base;
    bool inv = e < 0;
    unsigned k = static_cast<unsigned>(inv ? -(long long)e : e);
    Rational r = 1;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    if (inv) r = rational_inverse(r);
    return r;
}

}  // namespace

Rational Laurent::evaluate(const std::map<std::string, Rational>& point) const {
    std::vector<Rational> vals;
    vals.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = point.find(v);
        if (it == point.end()) throw std::domain_error("evaluate: no value for variable " + v);
        vals.push_back(it->second);
    }
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < vals.size(); ++i)
            if (e[i] != 0) t *= rational_pow(vals[i], e[i]);
        sum += t;
    }
    return sum;
}

Rational Laurent::evaluate_all(const Rational& v) const {
    std::map<std::string, Rational> point;
    for (const auto& name : vars_) point.emplace(name, v);
    return evaluate(point);
}

Rational Laurent::constant_term() const {
    ExpVec zero(vars_.size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

Laurent Laurent::specialize(const std::string& var, const std::map<std::string, int>& image) const {
    int vi = var_index(var);
    if (vi < 0) throw std::domain_error("specialize: unknown variable " + var);
    std::vector<std::string> nv;
    for (const auto& v : vars_)
        if (v != var) nv.push_back(v);
    std::vector<int> img(nv.size(), 0);
    for (const auto& [name, k] : image) {
        auto it = std::find(nv.begin(), nv.end(), name);
        if (it == nv.end())
            throw std::domain_error("specialize: image variable " + name + " not in remaining list");
        img[static_cast<std::size_t>(it - nv.begin())] = k;
    }
    Laurent r(nv);
    ExpVec e(nv.size());
    for (const auto& [ex, c] : terms_) {
        std::size_t j = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (static_cast<int>(i) != vi) e[j++] = ex[i];
        int k = ex[static_cast<std::size_t>(vi)];
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += k * img[i];
        r.add_term(e, c);
    }
    return r;
}

std::string Laurent::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << a;
        } else if (a == 1) {
            os << mono;
        } else {
            os << a << "*" << mono;
        }
    }
    return os.str();
}

namespace {

struct PolyLexer {
    const std::string& s;
    std::size_t i = 0;
    explicit PolyLexer(const std::string& text) : s(text) {}
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    Int integer() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw std::domain_error("polynomial parse error: digit expected at offset " + std::to_string(start));
        return Int(s.substr(start, i - start));
    }
    std::string name() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        if (i == start) throw std::domain_error("polynomial parse error: name expected at offset " + std::to_string(start));
        return s.substr(start, i - start);
    }
};

}  // namespace

Laurent Laurent::parse(const std::string& text, std::vector<std::string> vars) {
    Laurent out(std::move(vars));
    PolyLexer lx(text);
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        if (lx.accept('-')) sign = -1;
        else if (lx.accept('+')) sign = 1;
        else if (!first)
            throw std::domain_error("polynomial parse error: '+' or '-' expected");
        first = false;

        Rational coef = sign;
        ExpVec e(out.vars_.size(), 0);
        bool saw_factor = false;
        for (;;) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Int num = lx.integer();
                if (lx.accept('/')) {
                    Int den = lx.integer();
                    if (den == 0) throw std::domain_error("polynomial parse error: zero denominator");
                    coef *= Rational(num, den);
                } else {
                    coef *= Rational(num);
                }
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string nm = lx.name();
                int vi = out.var_index(nm);
                if (vi < 0) throw std::domain_error("polynomial parse error: unknown variable " + nm);
                int exp = 1;
                if (lx.accept('^')) {
                    int s2 = lx.accept('-') ? -1 : 1;
                    Int k = lx.integer();
                    exp = s2 * static_cast<int>(k.convert_to<long long>());
                }
                e[static_cast<std::size_t>(vi)] += exp;
            } else {
                throw std::domain_error("polynomial parse error: factor expected");
            }
            saw_factor = true;
            if (!lx.accept('*')) break;
        }
        if (!saw_factor) throw std::domain_error("polynomial parse error: empty term");
        out.add_term(e, coef);
    }
    return out;
}

std::optional<Laurent> try_divide(const Laurent& num, const Laurent& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) return Laurent(num.vars());
    if (num.vars() != den.vars())
        throw std::domain_error("Laurent arithmetic on mismatched variable lists");

    // strip monomial content so lex leads are well-founded under reduction
    ExpVec mn = num.min_exponents();
    ExpVec md = den.min_exponents();
    ExpVec neg_mn(mn.size()), neg_md(md.size()), off(mn.size());
    for (std::size_t i = 0; i < mn.size(); ++i) {
        neg_mn[i] = -mn[i];
        neg_md[i] = -md[i];
        off[i] = mn[i] - md[i];
    }
    Laurent p = num.shift(neg_mn);
    Laurent d = den.shift(neg_md);

    Laurent q(num.vars());
    const auto& [ed, cd] = d.lead();
    ExpVec diff(ed.size());
    while (!p.is_zero()) {
        const auto& [ep, cp] = p.lead();
        for (std::size_t i = 0; i < diff.size(); ++i) {
            diff[i] = ep[i] - ed[i];
            if (diff[i] < 0) return std::nullopt;
        }
        Laurent m = Laurent::monomial(num.vars(), diff, cp / cd);
        q += m;
        p -= m * d;
    }
    return q.shift(off);
}

Laurent divide_exact(const Laurent& num, const Laurent& den) {
    auto q = try_divide(num, den);
    if (!q)
        throw std::logic_error("internal arithmetic bug: exact division failed on " + num.str() +
                               " / " + den.str());
    return *q;
}

Laurent laurent_det(std::vector<std::vector<Laurent>> m, const std::vector<std::string>& vars) {
    const std::size_t n = m.size();
    Laurent one = Laurent::constant(vars, 1);
    if (n == 0) return one;
    ExpVec total_shift(vars.size(), 0);
    for (auto& row : m) {
        if (row.size() != n) throw std::domain_error("laurent_det: matrix not square");
        ExpVec mn;
        bool any = false;
        for (const auto& p : row) {
            if (p.vars() != vars)
                throw std::domain_error("laurent_det: entry variable list mismatch");
            if (p.is_zero()) continue;
            ExpVec e = p.min_exponents();
            if (!any) {
                mn = e;
                any = true;
            } else {
                for (std::size_t i = 0; i < mn.size(); ++i) mn[i] = std::min(mn[i], e[i]);
            }
        }
        if (!any) return Laurent(vars);  // zero row
        ExpVec neg(mn.size());
        bool trivial = true;
        for (std::size_t i = 0; i < mn.size(); ++i) {
            neg[i] = -mn[i];
            total_shift[i] += mn[i];
            if (mn[i] != 0) trivial = false;
        }
        if (!trivial)
            for (auto& p : row) p = p.shift(neg);
    }

    // Bareiss: every division by the previous pivot is exact in the
    // polynomial ring; a failure aborts via divide_exact.
    int sign = 1;
    Laurent prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return Laurent(vars);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Laurent t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = prev.is_one() ? std::move(t) : divide_exact(t, prev);
            }
            m[i][k] = Laurent(vars);
        }
        prev = m[k][k];
    }
    Laurent det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det.shift(total_shift);
}

std::optional<NormalizedAlexander> normalize_alexander(const Laurent& p) {
    if (p.vars().size() != 1)
        throw std::domain_error("normalize_alexander expects a one-variable polynomial");
    if (p.is_zero()) return std::nullopt;
    ExpVec mn = p.min_exponents();
    Laurent q = p.shift({-mn[0]});
    if (q.constant_term() < 0) q = -q;
    NormalizedAlexander out;
    out.degree = q.lead().first[0];
    out.poly = std::move(q);
    return out;
}

}  // namespace homocyl
