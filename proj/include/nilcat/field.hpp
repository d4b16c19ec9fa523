// field.hpp -- exact arithmetic over GF(p^k) and over Q, plus the field-level
// equivalence relations (~*, ~*+), the map psi(x) = x^2 + x, its coset
// representative omega, and the class-count parameters s and t.
//
// Finite field elements are indices 0..q-1 in the canonical enumeration
// order: 0,1,...,p-1 for prime fields, lexicographic on coefficient vectors
// (constant term first) for extensions.  All arithmetic is table lookups.
// Rational elements are GMP mpq_class values, always in lowest terms.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nilcat {

struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};
struct UnsupportedFieldError : Error {
    using Error::Error;
};
struct BudgetError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};

namespace detail {

inline bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// polynomials over GF(p), coefficient vectors with constant term first
using Poly = std::vector<std::uint8_t>;

inline Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    a = poly_trim(std::move(a));
    const int dm = int(m.size()) - 1;
    // m is monic
    while (int(a.size()) - 1 >= dm) {
        const int shift = int(a.size()) - 1 - dm;
        const unsigned lead = a.back();
        for (int i = 0; i <= dm; ++i) {
            unsigned v = a[std::size_t(shift + i)] + p * p;
            v -= (lead * m[std::size_t(i)]) % p;
            a[std::size_t(shift + i)] = std::uint8_t(v % p);
        }
        a = poly_trim(std::move(a));
    }
    return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = std::uint8_t((r[i + j] + unsigned(a[i]) * b[j]) % p);
    return poly_trim(std::move(r));
}

inline bool poly_irreducible(const Poly& m, unsigned p) {
    const int k = int(m.size()) - 1;
    if (k < 1 || m.back() != 1) return false;
    // trial division by every monic polynomial of degree 1..k/2
    for (int d = 1; 2 * d <= k; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly f(std::size_t(d) + 1, 0);
            std::uint64_t c = code;
            for (int i = 0; i < d; ++i) {
                f[std::size_t(i)] = std::uint8_t(c % p);
                c /= p;
            }
            f[std::size_t(d)] = 1;
            if (poly_mod(m, f, p).empty()) return false;
        }
    }
    return true;
}

} // namespace detail

// Exact finite field GF(p^k).  Cheap to copy; the operation tables are shared
// and immutable, so values are safe to share across threads.
class GF {
public:
    using Elem = std::uint8_t;

    GF() = default;

    static GF make(unsigned p, unsigned k = 1) {
        if (!detail::is_prime(p))
            throw UnsupportedFieldError("GF: p = " + std::to_string(p) + " is not prime");
        if (k < 1) throw UnsupportedFieldError("GF: k must be >= 1");
        detail::Poly mod;
        if (k > 1) {
            // built-in moduli; constant term first
            if (p == 2 && k == 2) mod = {1, 1, 1};          // x^2+x+1
            else if (p == 2 && k == 3) mod = {1, 1, 0, 1};  // x^3+x+1
            else if (p == 2 && k == 4) mod = {1, 1, 0, 0, 1}; // x^4+x+1
            else if (p == 3 && k == 2) mod = {1, 0, 1};     // x^2+1
            else
                throw UnsupportedFieldError("GF: no built-in modulus for GF(" +
                                            std::to_string(p) + "^" + std::to_string(k) + ")");
            if (!detail::poly_irreducible(mod, p))
                throw UnsupportedFieldError("GF: built-in modulus is reducible");
        }
        std::uint64_t q = 1;
        for (unsigned i = 0; i < k; ++i) {
            q *= p;
            if (q > 256) throw UnsupportedFieldError("GF: q > 256 unsupported");
        }
        GF f;
        f.t_ = std::make_shared<Tables>(p, k, unsigned(q), std::move(mod));
        return f;
    }

    unsigned p() const { return t_->p; }
    unsigned k() const { return t_->k; }
    unsigned q() const { return t_->q; }
    unsigned characteristic() const { return t_->p; }
    static constexpr bool finite() { return true; }
    const std::vector<std::uint8_t>& modulus() const { return t_->mod; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const { return t_->add[std::size_t(a) * t_->q + b]; }
    Elem mul(Elem a, Elem b) const { return t_->mul[std::size_t(a) * t_->q + b]; }
    Elem neg(Elem a) const { return t_->neg[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem inv(Elem a) const {
        if (a == 0) throw DomainError("GF: inverse of zero");
        return t_->inv[a];
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    bool less(Elem a, Elem b) const { return a < b; } // enumeration order

    Elem from_int(long long v) const {
        long long m = v % (long long)t_->p;
        if (m < 0) m += t_->p;
        return Elem(m); // prime subfield embedding: index of constant polynomial
    }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one(), base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    // coefficient vector over GF(p), constant term first, length k
    std::vector<std::uint8_t> coeffs(Elem a) const {
        std::vector<std::uint8_t> c(t_->k);
        unsigned v = a;
        for (unsigned i = 0; i < t_->k; ++i) {
            c[i] = std::uint8_t(v % t_->p);
            v /= t_->p;
        }
        return c;
    }

    std::string to_string(Elem a) const {
        if (t_->k == 1) return std::to_string(unsigned(a));
        std::string s = "[";
        auto c = coeffs(a);
        for (unsigned i = 0; i < t_->k; ++i) {
            if (i) s += ",";
            s += std::to_string(unsigned(c[i]));
        }
        return s + "]";
    }

    Elem parse(const std::string& s) const {
        if (t_->k == 1) {
            long long v = std::stoll(s);
            if (v < 0 || v >= (long long)t_->q) throw DomainError("GF: element out of range: " + s);
            return Elem(v);
        }
        if (s.size() < 2 || s.front() != '[' || s.back() != ']')
            throw DomainError("GF: expected coefficient vector [c0,...]: " + s);
        unsigned idx = 0, mult = 1, nc = 0;
        std::string body = s.substr(1, s.size() - 2);
        std::size_t pos = 0;
        while (pos <= body.size() && nc < t_->k) {
            std::size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            long long v = std::stoll(tok);
            if (v < 0 || v >= (long long)t_->p) throw DomainError("GF: coefficient out of range: " + s);
            idx += unsigned(v) * mult;
            mult *= t_->p;
            ++nc;
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (nc != t_->k) throw DomainError("GF: expected " + std::to_string(t_->k) + " coefficients: " + s);
        return Elem(idx);
    }

    std::string describe() const { return "GF(" + std::to_string(t_->q) + ")"; }

    // raw table pointers for hot loops
    struct RawTables {
        const Elem *add, *mul, *neg, *inv;
        unsigned q;
    };
    RawTables raw() const {
        return {t_->add.data(), t_->mul.data(), t_->neg.data(), t_->inv.data(), t_->q};
    }

    bool same_field(const GF& o) const { return t_->p == o.t_->p && t_->k == o.t_->k; }

private:
    struct Tables {
        unsigned p, k, q;
        detail::Poly mod;
        std::vector<Elem> add, mul, neg, inv;

        Tables(unsigned p_, unsigned k_, unsigned q_, detail::Poly mod_)
            : p(p_), k(k_), q(q_), mod(std::move(mod_)) {
            add.assign(std::size_t(q) * q, 0);
            mul.assign(std::size_t(q) * q, 0);
            neg.assign(q, 0);
            inv.assign(q, 0);
            auto to_poly = [&](unsigned a) {
                detail::Poly c(k);
                for (unsigned i = 0; i < k; ++i) { c[i] = std::uint8_t(a % p); a /= p; }
                return c;
            };
            auto from_poly = [&](const detail::Poly& c) {
                unsigned v = 0, m = 1;
                for (std::size_t i = 0; i < c.size(); ++i) { v += c[i] * m; m *= p; }
                return Elem(v);
            };
            for (unsigned a = 0; a < q; ++a) {
                auto pa = to_poly(a);
                for (unsigned b = 0; b < q; ++b) {
                    auto pb = to_poly(b);
                    detail::Poly s(k);
                    for (unsigned i = 0; i < k; ++i) s[i] = std::uint8_t((pa[i] + pb[i]) % p);
                    add[std::size_t(a) * q + b] = from_poly(s);
                    detail::Poly prod = detail::poly_mul(detail::poly_trim(pa), detail::poly_trim(pb), p);
                    if (k > 1) prod = detail::poly_mod(std::move(prod), mod, p);
                    else if (!prod.empty()) prod = {std::uint8_t(prod[0])};
                    prod.resize(k, 0);
                    mul[std::size_t(a) * q + b] = from_poly(prod);
                }
            }
            for (unsigned a = 0; a < q; ++a) {
                detail::Poly pa = to_poly(a);
                detail::Poly n(k);
                for (unsigned i = 0; i < k; ++i) n[i] = std::uint8_t((p - pa[i]) % p);
                neg[a] = from_poly(n);
            }
            for (unsigned a = 1; a < q; ++a)
                for (unsigned b = 1; b < q; ++b)
                    if (mul[std::size_t(a) * q + b] == 1) { inv[a] = Elem(b); break; }
        }
    };
    std::shared_ptr<const Tables> t_;
};

inline GF gf(unsigned p, unsigned k = 1) { return GF::make(p, k); }

// The rational field.  Stateless; elements are canonical mpq_class values.
class QQ {
public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw DomainError("Q: inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem from_int(long long v) const { return Elem(long(v)); }

    unsigned characteristic() const { return 0; }
    static constexpr bool finite() { return false; }

    std::string to_string(const Elem& a) const {
        mpq_class c(a);
        c.canonicalize();
        if (c.get_den() == 1) return c.get_num().get_str();
        return c.get_num().get_str() + "/" + c.get_den().get_str();
    }
    Elem parse(const std::string& s) const {
        mpq_class v(s);
        v.canonicalize();
        return v;
    }
    bool same_field(const QQ&) const { return true; }
};

inline QQ rationals() { return QQ{}; }

// ---------------------------------------------------------------------------
// equivalence relations of Section 3:
//   a ~*  b  iff a = g^2 b, g in F*
//   a ~*+ b  iff a = g^2 b + d^2, g in F*, d in F    (characteristic 2 only)
// ---------------------------------------------------------------------------

enum class Rel { star, star_plus };

template <class F> struct ClassWitness {
    typename F::Elem gamma;
    std::optional<typename F::Elem> delta; // engaged for star_plus
};

inline std::optional<ClassWitness<GF>> same_class(const GF& f, Rel rel, GF::Elem a, GF::Elem b) {
    if (rel == Rel::star_plus && f.characteristic() != 2)
        throw DomainError("~*+ requires characteristic 2");
    for (unsigned g = 1; g < f.q(); ++g) {
        GF::Elem g2b = f.mul(f.mul(GF::Elem(g), GF::Elem(g)), b);
        if (rel == Rel::star) {
            if (g2b == a) return ClassWitness<GF>{GF::Elem(g), std::nullopt};
        } else {
            GF::Elem rest = f.sub(a, g2b);
            for (unsigned d = 0; d < f.q(); ++d)
                if (f.mul(GF::Elem(d), GF::Elem(d)) == rest)
                    return ClassWitness<GF>{GF::Elem(g), GF::Elem(std::uint8_t(d))};
        }
    }
    return std::nullopt;
}

inline std::optional<ClassWitness<QQ>> same_class(const QQ&, Rel rel, const mpq_class& a,
                                                  const mpq_class& b) {
    if (rel == Rel::star_plus) throw DomainError("~*+ undefined over Q (characteristic 0)");
    if (b == 0) {
        if (a == 0) return ClassWitness<QQ>{mpq_class(1), std::nullopt};
        return std::nullopt;
    }
    if (a == 0) return std::nullopt; // gamma must be nonzero
    mpq_class t = a / b;
    t.canonicalize();
    if (t < 0) return std::nullopt;
    mpz_class num = t.get_num(), den = t.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_class sn, sd;
        mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
        return ClassWitness<QQ>{mpq_class(sn) / mpq_class(sd), std::nullopt};
    }
    return std::nullopt;
}

// transversal of F/(~*): {0} followed by the enumeration-least representative
// of each square class of F*
inline std::vector<GF::Elem> square_class_transversal(const GF& f) {
    std::vector<bool> seen(f.q(), false);
    std::vector<GF::Elem> reps{0};
    seen[0] = true;
    for (unsigned a = 1; a < f.q(); ++a) {
        if (seen[a]) continue;
        reps.push_back(GF::Elem(a));
        for (unsigned g = 1; g < f.q(); ++g)
            seen[f.mul(f.mul(GF::Elem(g), GF::Elem(g)), GF::Elem(a))] = true;
    }
    return reps;
}

inline std::vector<GF::Elem> square_class_transversal(const QQ&) {
    throw BudgetError("F/(~*) is infinite over Q");
}

// transversal of F/(~*+), characteristic 2 only
inline std::vector<GF::Elem> star_plus_transversal(const GF& f) {
    if (f.characteristic() != 2) throw DomainError("~*+ requires characteristic 2");
    std::vector<bool> seen(f.q(), false);
    std::vector<GF::Elem> reps;
    for (unsigned a = 0; a < f.q(); ++a) {
        if (seen[a]) continue;
        reps.push_back(GF::Elem(a));
        for (unsigned b = 0; b < f.q(); ++b)
            if (!seen[b] && same_class(f, Rel::star_plus, GF::Elem(b), GF::Elem(a))) seen[b] = true;
    }
    return reps;
}

// psi(F) = { x^2 + x : x in F }, an index-2 additive subgroup when char F = 2
inline std::vector<GF::Elem> psi_image(const GF& f) {
    if (f.characteristic() != 2) throw DomainError("psi requires characteristic 2");
    std::vector<bool> in(f.q(), false);
    for (unsigned x = 0; x < f.q(); ++x)
        in[f.add(f.mul(GF::Elem(x), GF::Elem(x)), GF::Elem(x))] = true;
    std::vector<GF::Elem> img;
    for (unsigned a = 0; a < f.q(); ++a)
        if (in[a]) img.push_back(GF::Elem(a));
    return img;
}

// the fixed element of F \ psi(F): enumeration-least one
inline GF::Elem omega(const GF& f) {
    auto img = psi_image(f);
    std::vector<bool> in(f.q(), false);
    for (auto a : img) in[a] = true;
    for (unsigned a = 0; a < f.q(); ++a)
        if (!in[a]) return GF::Elem(a);
    throw Error("omega: psi is surjective (impossible in characteristic 2)");
}

struct Cardinal {
    bool finite = true;
    std::uint64_t value = 0;
    static Cardinal inf() { return {false, 0}; }
    bool operator==(const Cardinal&) const = default;
};

// s = index of (F*)^2 in F*; counted by brute force
inline Cardinal s_param(const GF& f) {
    return {true, std::uint64_t(square_class_transversal(f).size() - 1)};
}
inline Cardinal s_param(const QQ&) { return Cardinal::inf(); }

// t = number of ~*+ classes in F (characteristic 2)
inline Cardinal t_param(const GF& f) {
    return {true, std::uint64_t(star_plus_transversal(f).size())};
}
inline Cardinal t_param(const QQ&) { throw DomainError("t undefined for characteristic != 2"); }

} // namespace nilcat
