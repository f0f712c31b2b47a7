#ifndef WEYLSUM_FIELD_HPP
#define WEYLSUM_FIELD_HPP

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "weylsum/bigint.hpp"
#include "weylsum/errors.hpp"

namespace weylsum {

// Element of Q or Q(sqrt d), written a + b*omega on the integral basis (1, omega).
// For g = 1 the b coordinate is identically zero.
struct FieldElem {
    BigRat a, b;

    FieldElem() : a(0), b(0) {}
    FieldElem(BigRat a_, BigRat b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit FieldElem(long v) : a(v), b(0) {}

    bool operator==(const FieldElem& o) const { return a == o.a && b == o.b; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    bool is_zero() const { return a == 0 && b == 0; }
};

struct PrincipalIdeal {
    FieldElem gen;
    BigInt norm_abs;
};

// Grossencharacter exponent matrix e[q][j], q = 0..g-2, j = 0..g-1.
struct GrossenExponents {
    int g = 1;
    std::vector<std::vector<double>> e; // (g-1) x g
};

class TotallyRealField {
  public:
    // g = 1 -> Q ; g = 2 -> Q(sqrt d), d squarefree > 1, class number 1 verified.
    static TotallyRealField make(int g, long d = 0);

    int degree() const { return g_; }
    long d() const { return d_; }
    bool one_mod_four() const { return one_mod4_; }
    // field discriminant (d or 4d); 1 for Q
    BigInt disc() const { return disc_; }

    // --- exact element arithmetic -------------------------------------
    FieldElem add(const FieldElem& x, const FieldElem& y) const { return {x.a + y.a, x.b + y.b}; }
    FieldElem sub(const FieldElem& x, const FieldElem& y) const { return {x.a - y.a, x.b - y.b}; }
    FieldElem neg(const FieldElem& x) const { return {-x.a, -x.b}; }
    FieldElem mul(const FieldElem& x, const FieldElem& y) const {
        // omega^2 = c0 + c1*omega
        return {x.a * y.a + x.b * y.b * c0_, x.a * y.b + x.b * y.a + x.b * y.b * c1_};
    }
    FieldElem mul_int(const FieldElem& x, long k) const { return {x.a * k, x.b * k}; }
    FieldElem conj(const FieldElem& x) const { return {x.a + x.b * c1_, -x.b}; }
    BigRat norm(const FieldElem& x) const {
        FieldElem p = mul(x, conj(x));
        return p.a; // p.b == 0 always
    }
    BigRat trace(const FieldElem& x) const { return 2 * x.a + x.b * c1_; }
    FieldElem inverse(const FieldElem& x) const;
    FieldElem div(const FieldElem& x, const FieldElem& y) const { return mul(x, inverse(y)); }
    bool is_integral(const FieldElem& x) const {
        return denominator(x.a) == 1 && denominator(x.b) == 1;
    }

    // --- embeddings ----------------------------------------------------
    // sigma_1(sqrt d) > 0 by convention.
    double omega_emb(int j) const { return omega_[j]; }
    double embed(const FieldElem& x, int j) const {
        return to_double(x.a) + to_double(x.b) * omega_[j];
    }
    std::array<double, 2> embed_all(const FieldElem& x) const {
        if (g_ == 1) return {embed(x, 0), 0.0};
        return {embed(x, 0), embed(x, 1)};
    }
    // -1: totally negative, +1: totally positive, 0: mixed or zero (exact)
    int signature(const FieldElem& x) const;

    // --- units ----------------------------------------------------------
    const FieldElem& fundamental_unit() const { return eps_; }          // sigma_1 > 1
    const FieldElem& totally_positive_unit() const { return eps0_; }
    int unit_norm() const { return unit_norm_; }                        // N(eps)
    double log_eps0() const { return log_eps0_; }                       // log sigma_1(eps0)
    double regulator_norm_one() const { return 2 * log_eps0_; }

    // --- ideals ----------------------------------------------------------
    // One canonical generator per unit orbit, |norm| <= bound, sorted by (|norm|, coords).
    std::vector<PrincipalIdeal> enumerate_principal_ideals(double bound,
                                                           std::size_t max_count = 50'000'000) const;
    // canonical unit-orbit representative of x != 0
    FieldElem canonical_associate(const FieldElem& x) const;
    // gcd ideal generator (norm-euclidean descent); class number 1 makes this total
    FieldElem gcd(FieldElem x, FieldElem y) const;
    // quotient with remainder of smaller norm
    std::pair<FieldElem, FieldElem> divmod(const FieldElem& x, const FieldElem& y) const;
    bool coprime(const FieldElem& x, const FieldElem& y) const {
        BigRat n = norm(gcd(x, y));
        return n == 1 || n == -1;
    }

    // --- grossencharacter ------------------------------------------------
    GrossenExponents grossen_exponents() const;
    std::complex<double> lambda_m(const GrossenExponents& e, const std::vector<double>& m,
                                  const FieldElem& x) const;

    FieldElem omega() const { return {BigRat(0), BigRat(1)}; }
    FieldElem one() const { return FieldElem(1); }
    FieldElem from_int(long v) const { return FieldElem(v); }

    std::string str(const FieldElem& x) const;

  private:
    TotallyRealField() = default;
    void find_fundamental_unit();
    void verify_class_number_one() const;
    bool principal_of_norm(const BigInt& p, FieldElem* out) const;

    int g_ = 1;
    long d_ = 0;
    bool one_mod4_ = false;
    BigInt disc_ = 1;
    BigRat c0_ = 0, c1_ = 0; // omega^2 = c0 + c1*omega
    double omega_[2] = {0, 0};
    FieldElem eps_{1}, eps0_{1};
    int unit_norm_ = 1;
    double log_eps0_ = 0;
};

} // namespace weylsum

#endif
