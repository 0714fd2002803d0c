#ifndef RINGLAT_FIELD_HPP
#define RINGLAT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ringlat/errors.hpp"

namespace ringlat {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Scalar;

/// Coefficient field: GF(p^f) given by an irreducible modulus over F_p, or an
/// iterated univariate rational-function field F(t), F(t1)(t2). Towers deeper
/// than two RF layers are rejected.
class Field : public std::enable_shared_from_this<Field> {
public:
    enum class Kind { GF, RF };

    /// GF(p^f) with the lexicographically smallest irreducible modulus.
    static FieldPtr gf(unsigned p, unsigned f = 1);
    /// GF(p^f) with a caller-supplied monic irreducible modulus
    /// (constant-first coefficients, length f+1; irreducibility is checked).
    static FieldPtr gf(unsigned p, unsigned f, std::vector<unsigned> modulus);
    static FieldPtr rf(FieldPtr base, std::string var);

    Kind kind() const { return kind_; }
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return f_; }                    // GF only
    const std::vector<unsigned>& modulus() const { return modulus_; }
    const FieldPtr& base() const { return base_; }            // RF only
    const std::string& var() const { return var_; }
    int rfDepth() const { return depth_; }
    bool isFinite() const { return kind_ == Kind::GF; }
    std::uint64_t order() const;                              // p^f, GF only

    bool same(const Field& other) const;
    bool same(const FieldPtr& other) const { return same(*other); }

    Scalar zero() const;
    Scalar one() const;
    Scalar fromInt(long long n) const;
    /// GF: class of X mod the modulus; RF: the variable.
    Scalar generator() const;
    Scalar fromCoords(std::vector<unsigned> coords) const;    // GF only

    std::string name() const;

private:
    Field() = default;
    Kind kind_ = Kind::GF;
    unsigned p_ = 2;
    unsigned f_ = 1;
    std::vector<unsigned> modulus_;   // GF: monic irreducible, constant first
    FieldPtr base_;                   // RF
    std::string var_;                 // RF
    int depth_ = 0;                   // number of RF layers
};

/// An exact field element. Immutable; all arithmetic is exact. RF fractions
/// are kept reduced with a monic denominator so that equality is
/// representational.
class Scalar {
public:
    Scalar() = default;

    const FieldPtr& field() const { return field_; }
    bool isZero() const;
    bool isOne() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Total order on the canonical representation; used for deterministic
    /// witness selection and sorting, not mathematically meaningful.
    bool operator<(const Scalar& o) const { return key() < o.key(); }

    const std::vector<unsigned>& gfCoords() const { return gf_; }
    const std::vector<Scalar>& rfNum() const { return num_; }
    const std::vector<Scalar>& rfDen() const { return den_; }

    std::string key() const;        // canonical string form
    std::string str() const;        // human-readable

    static Scalar makeGF(FieldPtr field, std::vector<unsigned> coords);
    /// Builds the reduced monic-denominator fraction num/den.
    static Scalar makeRF(FieldPtr field, std::vector<Scalar> num, std::vector<Scalar> den);

private:
    FieldPtr field_;
    std::vector<unsigned> gf_;      // GF: coordinates over F_p, length f
    std::vector<Scalar> num_, den_; // RF: reduced fraction over the base field
};

/// a^(p^e), by repeated Frobenius.
Scalar pth_power(const Scalar& a, unsigned e);
Scalar scalar_pow(const Scalar& a, std::uint64_t n);

/// The p-basis monomials of the field: {1} for GF, {1,t,...,t^(p-1)} for one
/// RF layer, all t1^i t2^j (0 <= i,j < p) for two. Index 0 is always 1.
std::vector<Scalar> p_basis_monomials(const FieldPtr& field);

/// Unique components (g_m) with a = sum_m g_m^p * m over the p-basis.
std::vector<Scalar> p_basis_expand(const Scalar& a);

/// Witness root if a is a p-th power in its field (always, for GF).
std::optional<Scalar> is_pth_power(const Scalar& a);

/// Witness square root if a is a square (char 2: the p-th root; odd char:
/// formal square roots of numerator and denominator).
std::optional<Scalar> scalar_sqrt(const Scalar& a);

/// All p^f elements, deterministic order. Throws InfiniteField for RF.
std::vector<Scalar> enumerate_scalars(const FieldPtr& field);

/// GF: uniform. RF: fraction of polynomials of degree <= budget with nonzero
/// denominator. Deterministic for a fixed generator state.
Scalar random_scalar(const FieldPtr& field, unsigned budget, std::mt19937_64& rng);

// Dense univariate polynomials over an exact field, constant term first,
// no trailing zeros (zero = empty vector). Shared by the RF backend and the
// minimal-polynomial machinery.
namespace poly {
using Poly = std::vector<Scalar>;

void trim(Poly& a);
bool is_zero(const Poly& a);
int deg(const Poly& a);  // -1 for zero
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Scalar& c);
/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic
/// g = gcd(a,b) monic, with u*a + v*b = g.
struct ExtGcd { Poly g, u, v; };
ExtGcd ext_gcd(const Poly& a, const Poly& b);
Poly monic(const Poly& a);
Scalar eval(const Poly& a, const Scalar& x);
Poly derivative(const Poly& a);
/// Formal square root of a polynomial in odd characteristic, if any.
std::optional<Poly> sqrt(const Poly& a, const FieldPtr& field);
} // namespace poly

} // namespace ringlat

#endif
