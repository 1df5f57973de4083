#include "tilt/ff/poly.hpp"

#include <algorithm>

namespace tilt::ff {

Poly::Poly(std::vector<Elem> coeffs, std::uint32_t p) : c_(std::move(coeffs)), p_(p) {
    for (auto& c : c_) c %= p_;
    trim();
}

Poly Poly::monomial(std::size_t deg, Elem c, std::uint32_t p) {
    std::vector<Elem> v(deg + 1, 0);
    v[deg] = c;
    return Poly(std::move(v), p);
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    auto f = PrimeField::unchecked(p_);
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(coeff(i), o.coeff(i));
    return Poly(std::move(r), p_);
}

Poly Poly::operator-(const Poly& o) const {
    auto f = PrimeField::unchecked(p_);
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(coeff(i), o.coeff(i));
    return Poly(std::move(r), p_);
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly({}, p_);
    auto f = PrimeField::unchecked(p_);
    std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(c_[i], o.c_[j]));
    return Poly(std::move(r), p_);
}

Poly Poly::scaled(Elem s) const {
    auto f = PrimeField::unchecked(p_);
    std::vector<Elem> r(c_);
    for (auto& c : r) c = f.mul(c, s);
    return Poly(std::move(r), p_);
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(PrimeField::unchecked(p_).inv(lead()));
}

Poly Poly::derivative() const {
    auto f = PrimeField::unchecked(p_);
    std::vector<Elem> r(c_.size() > 1 ? c_.size() - 1 : 0);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = f.mul(c_[i], static_cast<Elem>(i % p_));
    return Poly(std::move(r), p_);
}

PolyDivision divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw FieldError("polynomial division by zero");
    auto f = PrimeField::unchecked(a.p());
    std::vector<Elem> rem = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db) return {Poly({}, a.p()), a};
    std::vector<Elem> q(static_cast<std::size_t>(da - db + 1), 0);
    Elem inv = f.inv(b.lead());
    for (int i = da; i >= db; --i) {
        Elem c = f.mul(rem[static_cast<std::size_t>(i)], inv);
        if (c == 0) continue;
        q[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            auto k = static_cast<std::size_t>(i - db + j);
            rem[k] = f.sub(rem[k], f.mul(c, b.coeff(static_cast<std::size_t>(j))));
        }
    }
    return {Poly(std::move(q), a.p()), Poly(std::move(rem), a.p())};
}

Poly mod(const Poly& a, const Poly& m) { return divmod(a, m).remainder; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
    Poly result = mod(Poly::constant(1, m.p()), m);
    Poly b = mod(base, m);
    while (e) {
        if (e & 1) result = mod(result * b, m);
        b = mod(b * b, m);
        e >>= 1;
    }
    return result;
}

Poly charpoly(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("charpoly of non-square matrix");
    const std::size_t n = m.rows();
    const std::uint32_t p = m.p();
    if (n == 0) return Poly::constant(1, p == 0 ? 3 : p);
    auto f = PrimeField::unchecked(p);
    Matrix h = m;
    for (std::size_t c = 0; c + 2 <= n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c + 1; i < n; ++i)
            if (h(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == n) continue;
        if (piv != c + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(c + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, c + 1));
        }
        Elem inv = f.inv(h(c + 1, c));
        for (std::size_t i = c + 2; i < n; ++i) {
            Elem u = f.mul(h(i, c), inv);
            if (u == 0) continue;
            for (std::size_t j = 0; j < n; ++j) h(i, j) = f.sub(h(i, j), f.mul(u, h(c + 1, j)));
            for (std::size_t k = 0; k < n; ++k) h(k, c + 1) = f.add(h(k, c + 1), f.mul(u, h(k, i)));
        }
    }
    // chi_k = det(xI - H[0..k, 0..k])
    std::vector<Poly> chi;
    chi.push_back(Poly::constant(1, p));
    Poly x = Poly::monomial(1, 1, p);
    for (std::size_t k = 1; k <= n; ++k) {
        Poly next = (x - Poly::constant(h(k - 1, k - 1), p)) * chi[k - 1];
        Elem t = 1;
        for (std::size_t i = k - 1; i-- > 0;) {
            t = f.mul(t, h(i + 1, i));
            if (t == 0) break;
            next = next - chi[i].scaled(f.mul(t, h(i, k - 1)));
        }
        chi.push_back(std::move(next));
    }
    return chi[n];
}

Matrix evaluate(const Poly& q, const Matrix& m) {
    const std::size_t n = m.rows();
    Matrix r = Matrix::zero(n, n, m.p());
    for (int i = q.degree(); i >= 0; --i) {
        r = r * m;
        Elem c = q.coeff(static_cast<std::size_t>(i));
        if (c != 0)
            for (std::size_t j = 0; j < n; ++j) r(j, j) = PrimeField::unchecked(m.p()).add(r(j, j), c);
    }
    return r;
}

std::optional<Poly> squarefree_part(const Poly& f) {
    Poly d = f.derivative();
    if (d.is_zero()) {
        if (f.degree() <= 0) return f.monic();
        return std::nullopt;
    }
    Poly g = gcd(f, d);
    Poly s = divmod(f, g).quotient.monic();
    // a repeated factor of multiplicity divisible by p survives in g but not in f/g; such
    // factors are already present in s unless the whole factor is a p-th power
    Poly rest = divmod(g, gcd(g, s)).quotient;
    while (rest.degree() > 0) {
        Poly c = gcd(rest, s);
        if (c.degree() <= 0) break;
        rest = divmod(rest, c).quotient;
    }
    if (rest.degree() > 0) return std::nullopt;
    return s;
}

namespace {

Poly random_poly(std::size_t below_deg, std::uint32_t p, std::mt19937_64& rng) {
    std::vector<Elem> c(below_deg);
    for (auto& e : c) e = static_cast<Elem>(rng() % p);
    return Poly(std::move(c), p);
}

// s squarefree with all irreducible factors of degree k; splits it (Cantor-Zassenhaus).
Poly equal_degree_split(const Poly& s, int k, std::mt19937_64& rng) {
    const std::uint32_t p = s.p();
    for (int attempt = 0; attempt < 256; ++attempt) {
        Poly a = random_poly(static_cast<std::size_t>(s.degree()), p, rng);
        if (a.degree() <= 0) continue;
        Poly g = gcd(a, s);
        if (g.degree() > 0 && g.degree() < s.degree()) return g;
        // a^((p^k - 1)/2) = (a * a^p * ... * a^(p^(k-1)))^((p-1)/2)
        Poly b = a, t = a;
        for (int i = 1; i < k; ++i) {
            b = powmod(b, p, s);
            t = mod(t * b, s);
        }
        Poly u = powmod(t, (p - 1) / 2, s) - Poly::constant(1, p);
        g = gcd(u, s);
        if (g.degree() > 0 && g.degree() < s.degree()) return g;
    }
    throw FieldError("equal-degree factorization did not converge");
}

}  // namespace

std::optional<Poly> proper_factor(const Poly& s, std::mt19937_64& rng) {
    if (s.degree() <= 1) return std::nullopt;
    const std::uint32_t p = s.p();
    Poly x = Poly::monomial(1, 1, p);
    Poly xp = x;
    Poly rest = s.monic();
    for (int k = 1; 2 * k <= rest.degree(); ++k) {
        xp = powmod(xp, p, rest);
        Poly g = gcd(xp - x, rest);
        if (g.degree() > 0) {
            if (g.degree() < s.degree()) return g;
            return equal_degree_split(g, k, rng).monic();
        }
    }
    return std::nullopt;
}

}  // namespace tilt::ff
