#include "trw/intpoly.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "trw/errors.hpp"
#include "bareiss.hpp"

namespace trw {

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly::IntPoly(std::vector<mpz_class> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    normalize();
}

IntPoly::IntPoly(std::initializer_list<long> ascending_coeffs) {
    c_.reserve(ascending_coeffs.size());
    for (long v : ascending_coeffs) c_.emplace_back(v);
    normalize();
}

IntPoly IntPoly::constant(mpz_class c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

IntPoly IntPoly::monomial(mpz_class c, std::size_t k) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(k + 1, mpz_class(0));
        p.c_[k] = std::move(c);
    }
    return p;
}

const mpz_class& IntPoly::coeff(std::size_t i) const {
    static const mpz_class kZero = 0;
    return i < c_.size() ? c_[i] : kZero;
}

const mpz_class& IntPoly::leading() const {
    if (c_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
    return c_.back();
}

bool IntPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& a : r.c_) a = -a;
    return r;
}

IntPoly operator+(const IntPoly& f, const IntPoly& g) {
    IntPoly r;
    r.c_.resize(std::max(f.c_.size(), g.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < f.c_.size(); ++i) r.c_[i] = f.c_[i];
    for (std::size_t i = 0; i < g.c_.size(); ++i) r.c_[i] += g.c_[i];
    r.normalize();
    return r;
}

IntPoly operator-(const IntPoly& f, const IntPoly& g) {
    IntPoly r;
    r.c_.resize(std::max(f.c_.size(), g.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < f.c_.size(); ++i) r.c_[i] = f.c_[i];
    for (std::size_t i = 0; i < g.c_.size(); ++i) r.c_[i] -= g.c_[i];
    r.normalize();
    return r;
}

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(f.c_.size() + g.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
        if (f.c_[i] == 0) continue;
        for (std::size_t j = 0; j < g.c_.size(); ++j) r.c_[i + j] += f.c_[i] * g.c_[j];
    }
    r.normalize();
    return r;
}

IntPoly mul(const IntPoly& f, const IntPoly& g) { return f * g; }

IntPoly mul_scalar(const IntPoly& f, const mpz_class& c) {
    if (c == 0) return IntPoly();
    std::vector<mpz_class> r(f.coeffs());
    for (auto& a : r) a *= c;
    return IntPoly(std::move(r));
}

IntPoly pow(const IntPoly& f, unsigned long e) {
    IntPoly acc = IntPoly::constant(1);
    IntPoly base = f;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

mpz_class eval(const IntPoly& f, const mpz_class& x0) {
    mpz_class acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) {
        acc *= x0;
        acc += f.coeff(i);
    }
    return acc;
}

IntPoly derivative(const IntPoly& f) {
    if (f.degree() < 1) return IntPoly();
    std::vector<mpz_class> r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = f.coeff(i) * static_cast<unsigned long>(i);
    return IntPoly(std::move(r));
}

IntPoly taylor_shift(const IntPoly& f, const mpz_class& k) {
    // Horner in (x + k): ((a_n (x+k) + a_{n-1})(x+k) + ...).
    IntPoly acc;
    IntPoly xk = IntPoly{0, 1} + IntPoly::constant(k);
    for (std::size_t i = f.size(); i-- > 0;) {
        acc = acc * xk + IntPoly::constant(f.coeff(i));
    }
    return acc;
}

mpz_class content(const IntPoly& f) {
    mpz_class g = 0;
    for (const auto& a : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return f;
    mpz_class c = content(f);
    if (c == 1) return f;
    std::vector<mpz_class> r(f.coeffs());
    for (auto& a : r) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(r));
}

IntPoly divexact(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    if (f.is_zero()) return IntPoly();
    if (f.degree() < g.degree())
        throw InternalDivisibility("divexact: divisor degree exceeds dividend degree");
    std::vector<mpz_class> rem(f.coeffs());
    std::vector<mpz_class> quo(f.size() - g.size() + 1, mpz_class(0));
    const mpz_class& lg = g.leading();
    for (std::size_t qi = quo.size(); qi-- > 0;) {
        mpz_class& top = rem[qi + g.size() - 1];
        if (top == 0) continue;
        mpz_class q;
        mpz_class r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lg.get_mpz_t());
        if (r != 0) throw InternalDivisibility("divexact: leading coefficient does not divide");
        quo[qi] = q;
        for (std::size_t j = 0; j < g.size(); ++j) rem[qi + j] -= q * g.coeff(j);
    }
    for (const auto& a : rem)
        if (a != 0) throw InternalDivisibility("divexact: nonzero remainder");
    return IntPoly(std::move(quo));
}

IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw ZeroPolynomial("pseudo-remainder by the zero polynomial");
    if (f.degree() < g.degree()) return f;
    IntPoly r = f;
    const mpz_class& lg = g.leading();
    int steps = f.degree() - g.degree() + 1;
    int used = 0;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        int shift = r.degree() - g.degree();
        IntPoly t = IntPoly::monomial(r.leading(), static_cast<std::size_t>(shift)) * g;
        r = mul_scalar(r, lg) - t;
        ++used;
    }
    // Pad so the multiplier is exactly lc(g)^(deg f - deg g + 1) even when a
    // degree drop skipped steps; Sturm sign bookkeeping relies on it.
    for (; used < steps; ++used) r = mul_scalar(r, lg);
    return r;
}

IntPoly gcd(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero()) return IntPoly();
    mpz_class cont;
    mpz_gcd(cont.get_mpz_t(), content(f).get_mpz_t(), content(g).get_mpz_t());
    IntPoly a = primitive_part(f);
    IntPoly b = primitive_part(g);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.leading() < 0) a = -a;
    return mul_scalar(a, cont);
}

IntPoly squarefree_part(const IntPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("squarefree part of the zero polynomial");
    if (f.degree() == 0) return IntPoly::constant(1);
    IntPoly g = primitive_part(gcd(f, derivative(f)));
    IntPoly sf = divexact(primitive_part(f), g);
    sf = primitive_part(sf);
    if (sf.leading() < 0) sf = -sf;
    return sf;
}

namespace {

struct MpzOps {
    static bool is_zero(const mpz_class& a) { return a == 0; }
    static mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
};

}

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("resultant of the zero polynomial");
    const int m = f.degree();
    const int n = g.degree();
    if (m == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), f.coeff(0).get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    if (n == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), g.coeff(0).get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    // Sylvester matrix: n shifted rows of f over m shifted rows of g.
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size, mpz_class(0)));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i)
            s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + i)] =
                f.coeff(static_cast<std::size_t>(m - i));
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i)
            s[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + i)] =
                g.coeff(static_cast<std::size_t>(n - i));
    return detail::bareiss_determinant<mpz_class, MpzOps>(std::move(s), mpz_class(1));
}

mpz_class discriminant(const IntPoly& f) {
    if (f.degree() < 1) throw DegreeTooSmall("discriminant requires degree >= 1");
    if (!f.is_monic()) throw NotMonic("discriminant requires a monic polynomial");
    if (f.degree() == 1) return 1;
    mpz_class res = resultant(f, derivative(f));
    const long n = f.degree();
    return (n * (n - 1) / 2) % 2 == 0 ? res : mpz_class(-res);
}

mpz_class trace_power(const IntPoly& f, unsigned long m) {
    if (!f.is_monic()) throw NotMonic("trace_power requires a monic polynomial");
    const int n = f.degree();
    if (n < 1) throw DegreeTooSmall("trace_power requires degree >= 1");
    const std::size_t un = static_cast<std::size_t>(n);
    if (m == 0) return mpz_class(n);

    using Mat = std::vector<std::vector<mpz_class>>;
    auto matmul = [un](const Mat& a, const Mat& b) {
        Mat c(un, std::vector<mpz_class>(un, mpz_class(0)));
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t k = 0; k < un; ++k) {
                if (a[i][k] == 0) continue;
                for (std::size_t j = 0; j < un; ++j)
                    if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
            }
        return c;
    };

    // Companion matrix: subdiagonal ones, last column -a_i.
    Mat comp(un, std::vector<mpz_class>(un, mpz_class(0)));
    for (std::size_t i = 0; i + 1 < un; ++i) comp[i + 1][i] = 1;
    for (std::size_t i = 0; i < un; ++i) comp[i][un - 1] = -f.coeff(i);

    Mat acc;
    bool has_acc = false;
    Mat base = comp;
    unsigned long e = m;
    while (e > 0) {
        if (e & 1) {
            acc = has_acc ? matmul(acc, base) : base;
            has_acc = true;
        }
        e >>= 1;
        if (e > 0) base = matmul(base, base);
    }
    mpz_class tr = 0;
    for (std::size_t i = 0; i < un; ++i) tr += acc[i][i];
    return tr;
}

std::string to_string(const IntPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.size(); i-- > 0;) {
        const mpz_class& a = f.coeff(i);
        if (a == 0) continue;
        mpz_class mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) { return os << to_string(f); }

}
