#include "hypcode/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hypcode {

int SparsePolynomial::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void SparsePolynomial::set_coeff(const Exponent& e, int c) {
    if ((int)e.size() != m_)
        throw std::invalid_argument("exponent arity does not match the polynomial");
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

int SparsePolynomial::degree_in(int v) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
}

int SparsePolynomial::eval(const Field& f, const std::vector<int>& point) const {
    if ((int)point.size() != m_)
        throw std::invalid_argument("point arity does not match the polynomial");
    int acc = 0;
    for (const auto& [e, c] : terms_) {
        int t = c;
        for (int j = 0; j < m_; ++j) t = f.mul(t, f.pow(point[j], e[j]));
        acc = f.add(acc, t);
    }
    return acc;
}

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << ' ';
        first = false;
        os << exponent_to_string(e) << ':' << c;
    }
    return os.str();
}

SparsePolynomial poly_add(const Field& f, const SparsePolynomial& a,
                          const SparsePolynomial& b) {
    SparsePolynomial out = a;
    for (const auto& [e, c] : b.terms())
        out.set_coeff(e, f.add(out.coeff(e), c));
    return out;
}

SparsePolynomial poly_sub(const Field& f, const SparsePolynomial& a,
                          const SparsePolynomial& b) {
    SparsePolynomial out = a;
    for (const auto& [e, c] : b.terms())
        out.set_coeff(e, f.sub(out.coeff(e), c));
    return out;
}

SparsePolynomial poly_scale(const Field& f, const SparsePolynomial& a, int c) {
    SparsePolynomial out(a.vars());
    if (c == 0) return out;
    for (const auto& [e, v] : a.terms()) out.set_coeff(e, f.mul(v, c));
    return out;
}

SparsePolynomial poly_mul(const Field& f, const SparsePolynomial& a,
                          const SparsePolynomial& b) {
    SparsePolynomial out(a.vars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Exponent e(a.vars());
            for (int j = 0; j < a.vars(); ++j) e[j] = ea[j] + eb[j];
            out.set_coeff(e, f.add(out.coeff(e), f.mul(ca, cb)));
        }
    return out;
}

SparsePolynomial poly_reduce(const Field& f, const SparsePolynomial& a) {
    SparsePolynomial out(a.vars());
    for (const auto& [e, c] : a.terms()) {
        Exponent r = reduce_exponent(e, f.q());
        out.set_coeff(r, f.add(out.coeff(r), c));
    }
    return out;
}

SparsePolynomial poly_mul_reduced(const Field& f, const SparsePolynomial& a,
                                  const SparsePolynomial& b) {
    return poly_reduce(f, poly_mul(f, a, b));
}

} // namespace hypcode
