#include "ringlat/field.hpp"

#include <algorithm>
#include <sstream>

namespace ringlat {

// ---------------------------------------------------------------------------
// F_p[X] helpers on raw coefficient vectors (constant first, trimmed).

namespace {

using FpPoly = std::vector<unsigned>;

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

unsigned fp_pow(unsigned a, unsigned e, unsigned p) {
    unsigned long long r = 1, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<unsigned>(r);
}

unsigned fp_inv(unsigned a, unsigned p) { return fp_pow(a % p, p - 2, p); }

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    fp_trim(r);
    return r;
}

// remainder of a mod b, b nonzero
FpPoly fp_mod(FpPoly a, const FpPoly& b, unsigned p) {
    unsigned linv = fp_inv(b.back(), p);
    while (fp_deg(a) >= fp_deg(b)) {
        unsigned c = static_cast<unsigned>(
            static_cast<unsigned long long>(a.back()) * linv % p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = (a[shift + i] + p - c * b[i] % p) % p;
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

// trial division: no monic factor of degree 1..deg/2
bool fp_irreducible(const FpPoly& m, unsigned p) {
    int f = fp_deg(m);
    if (f <= 0) return false;
    if (f == 1) return true;
    for (int d = 1; 2 * d <= f; ++d) {
        unsigned long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (unsigned long long k = 0; k < count; ++k) {
            FpPoly cand(d + 1, 0);
            cand[d] = 1;
            unsigned long long t = k;
            for (int i = 0; i < d; ++i) {
                cand[i] = static_cast<unsigned>(t % p);
                t /= p;
            }
            if (fp_mod(m, cand, p).empty()) return false;
        }
    }
    return true;
}

FpPoly fp_default_modulus(unsigned p, unsigned f) {
    unsigned long long count = 1;
    for (unsigned i = 0; i < f; ++i) count *= p;
    for (unsigned long long k = 0; k < count; ++k) {
        FpPoly cand(f + 1, 0);
        cand[f] = 1;
        unsigned long long t = k;
        for (unsigned i = 0; i < f; ++i) {
            cand[i] = static_cast<unsigned>(t % p);
            t /= p;
        }
        if (fp_irreducible(cand, p)) return cand;
    }
    throw BadDescriptor("no irreducible modulus found");  // unreachable
}

// extended Euclid in F_p[X]: returns u with u*a = gcd(a,b) mod b (gcd must be
// a nonzero constant for the inverse use below)
FpPoly fp_inv_mod(const FpPoly& a, const FpPoly& mod, unsigned p) {
    FpPoly r0 = mod, r1 = fp_mod(a, mod, p);
    FpPoly u0 = {}, u1 = {1};
    while (!r1.empty()) {
        // r0 = q*r1 + r
        FpPoly q;
        FpPoly r = r0;
        unsigned linv = fp_inv(r1.back(), p);
        q.assign(std::max<size_t>(r.size() >= r1.size() ? r.size() - r1.size() + 1 : 0, 0), 0);
        while (fp_deg(r) >= fp_deg(r1)) {
            unsigned c = static_cast<unsigned>(
                static_cast<unsigned long long>(r.back()) * linv % p);
            size_t shift = r.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i)
                r[shift + i] = (r[shift + i] + p - c * r1[i] % p) % p;
            fp_trim(r);
            if (r.empty()) break;
        }
        FpPoly qu1 = fp_mul(q, u1, p);
        FpPoly u2 = u0;
        u2.resize(std::max(u2.size(), qu1.size()), 0);
        for (size_t i = 0; i < qu1.size(); ++i) u2[i] = (u2[i] + p - qu1[i]) % p;
        fp_trim(u2);
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
    }
    if (fp_deg(r0) != 0) throw DivisionByZero();
    unsigned c = fp_inv(r0[0], p);
    FpPoly u = u0;
    for (auto& x : u) x = x * c % p;
    fp_trim(u);
    return fp_mod(u, mod, p);
}

} // namespace

// ---------------------------------------------------------------------------
// Field

FieldPtr Field::gf(unsigned p, unsigned f) {
    return gf(p, f, fp_default_modulus(p, f));
}

FieldPtr Field::gf(unsigned p, unsigned f, std::vector<unsigned> modulus) {
    if (!is_prime(p)) throw BadDescriptor("p = " + std::to_string(p) + " is not prime");
    if (f < 1) throw BadDescriptor("extension degree must be >= 1");
    for (auto& c : modulus) c %= p;
    fp_trim(modulus);
    if (fp_deg(modulus) != static_cast<int>(f) || modulus.back() != 1)
        throw BadDescriptor("modulus must be monic of degree f");
    if (!fp_irreducible(modulus, p))
        throw BadDescriptor("modulus is reducible");
    auto fld = std::shared_ptr<Field>(new Field());
    fld->kind_ = Kind::GF;
    fld->p_ = p;
    fld->f_ = f;
    fld->modulus_ = std::move(modulus);
    fld->depth_ = 0;
    return fld;
}

FieldPtr Field::rf(FieldPtr base, std::string var) {
    if (!base) throw BadDescriptor("null base field");
    if (base->depth_ >= 2)
        throw UnsupportedTower("rational-function towers deeper than 2 are not supported");
    if (var.empty()) throw BadDescriptor("empty variable name");
    auto fld = std::shared_ptr<Field>(new Field());
    fld->kind_ = Kind::RF;
    fld->p_ = base->p_;
    fld->f_ = base->f_;
    fld->base_ = std::move(base);
    fld->var_ = std::move(var);
    fld->depth_ = fld->base_->depth_ + 1;
    return fld;
}

std::uint64_t Field::order() const {
    if (kind_ != Kind::GF) throw InfiniteField(name());
    std::uint64_t q = 1;
    for (unsigned i = 0; i < f_; ++i) q *= p_;
    return q;
}

bool Field::same(const Field& o) const {
    if (kind_ != o.kind_ || p_ != o.p_) return false;
    if (kind_ == Kind::GF) return f_ == o.f_ && modulus_ == o.modulus_;
    return var_ == o.var_ && base_->same(*o.base_);
}

Scalar Field::zero() const {
    if (kind_ == Kind::GF)
        return Scalar::makeGF(shared_from_this(), std::vector<unsigned>(f_, 0));
    return Scalar::makeRF(shared_from_this(), {}, {base_->one()});
}

Scalar Field::one() const { return fromInt(1); }

Scalar Field::fromInt(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    if (kind_ == Kind::GF) {
        std::vector<unsigned> c(f_, 0);
        c[0] = static_cast<unsigned>(r);
        return Scalar::makeGF(shared_from_this(), std::move(c));
    }
    if (r == 0) return zero();
    return Scalar::makeRF(shared_from_this(), {base_->fromInt(r)}, {base_->one()});
}

Scalar Field::generator() const {
    if (kind_ == Kind::GF) {
        if (f_ == 1) return one();
        std::vector<unsigned> c(f_, 0);
        c[1] = 1;
        return Scalar::makeGF(shared_from_this(), std::move(c));
    }
    return Scalar::makeRF(shared_from_this(), {base_->zero(), base_->one()},
                          {base_->one()});
}

Scalar Field::fromCoords(std::vector<unsigned> coords) const {
    if (kind_ != Kind::GF) throw BadDescriptor("fromCoords requires a GF field");
    coords.resize(f_, 0);
    for (auto& c : coords) c %= p_;
    return Scalar::makeGF(shared_from_this(), std::move(coords));
}

std::string Field::name() const {
    if (kind_ == Kind::GF) return "GF(" + std::to_string(order()) + ")";
    return base_->name() + "(" + var_ + ")";
}

// ---------------------------------------------------------------------------
// poly over Scalar

namespace poly {

void trim(Poly& a) {
    while (!a.empty() && a.back().isZero()) a.pop_back();
}

bool is_zero(const Poly& a) { return a.empty(); }

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
    Poly r = a.size() >= b.size() ? a : b;
    const Poly& s = a.size() >= b.size() ? b : a;
    for (size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly nb = b;
    for (auto& c : nb) c = -c;
    return add(a, nb);
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, a[0].field()->zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    trim(r);
    return r;
}

Poly scale(const Poly& a, const Scalar& c) {
    if (c.isZero()) return {};
    Poly r = a;
    for (auto& x : r) x = x * c;
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.empty()) throw DivisionByZero();
    Poly q, r = a;
    if (a.size() >= b.size())
        q.assign(a.size() - b.size() + 1, b[0].field()->zero());
    Scalar linv = b.back().inverse();
    while (deg(r) >= deg(b)) {
        Scalar c = r.back() * linv;
        size_t shift = r.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            r[shift + i] = r[shift + i] - c * b[i];
        trim(r);
        if (r.empty()) break;
    }
    trim(q);
    return {q, r};
}

Poly monic(const Poly& a) {
    if (a.empty()) return a;
    return scale(a, a.back().inverse());
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.empty()) {
        Poly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return monic(x);
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    const FieldPtr fld = !a.empty() ? a[0].field() : (!b.empty() ? b[0].field() : nullptr);
    if (!fld) return {{}, {}, {}};
    Poly r0 = a, r1 = b;
    Poly u0 = {fld->one()}, u1 = {};
    Poly v0 = {},           v1 = {fld->one()};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        Poly u2 = sub(u0, mul(q, u1));
        Poly v2 = sub(v0, mul(q, v1));
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0.empty()) return {{}, {}, {}};
    Scalar c = r0.back().inverse();
    return {scale(r0, c), scale(u0, c), scale(v0, c)};
}

Scalar eval(const Poly& a, const Scalar& x) {
    Scalar r = x.field()->zero();
    for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

Poly derivative(const Poly& a) {
    if (a.size() <= 1) return {};
    Poly r;
    r.reserve(a.size() - 1);
    const FieldPtr fld = a[0].field();
    for (size_t i = 1; i < a.size(); ++i)
        r.push_back(a[i] * fld->fromInt(static_cast<long long>(i)));
    trim(r);
    return r;
}

std::optional<Poly> sqrt(const Poly& a, const FieldPtr& field) {
    if (a.empty()) return Poly{};
    int d2 = deg(a);
    if (d2 % 2 != 0) return std::nullopt;
    int d = d2 / 2;
    auto lead = scalar_sqrt(a.back());
    if (!lead) return std::nullopt;
    Poly s(d + 1, field->zero());
    s[d] = *lead;
    Scalar two_sd_inv = (field->fromInt(2) * s[d]).inverse();
    for (int k = d - 1; k >= 0; --k) {
        // match coefficient of X^(d+k): a[d+k] = 2 s_d s_k + sum_{i+j=d+k, k<i,j<d}
        Scalar acc = a[d + k];
        for (int i = k + 1; i < d; ++i) {
            int j = d + k - i;
            if (j > k && j < static_cast<int>(s.size()))
                acc = acc - s[i] * s[j];
        }
        s[k] = acc * two_sd_inv;
    }
    if (mul(s, s) != a) return std::nullopt;
    return s;
}

} // namespace poly

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::makeGF(FieldPtr field, std::vector<unsigned> coords) {
    Scalar s;
    s.field_ = std::move(field);
    s.gf_ = std::move(coords);
    return s;
}

Scalar Scalar::makeRF(FieldPtr field, std::vector<Scalar> num, std::vector<Scalar> den) {
    poly::trim(num);
    poly::trim(den);
    if (den.empty()) throw DivisionByZero();
    if (!num.empty()) {
        // a constant on either side already makes the fraction reduced
        if (num.size() > 1 && den.size() > 1) {
            poly::Poly g = poly::gcd(num, den);
            if (poly::deg(g) > 0) {
                num = poly::divmod(num, g).first;
                den = poly::divmod(den, g).first;
            }
        }
    } else {
        den = {field->base()->one()};
    }
    if (!den.back().isOne()) {
        Scalar linv = den.back().inverse();
        num = poly::scale(num, linv);
        den = poly::scale(den, linv);
    }
    Scalar s;
    s.field_ = std::move(field);
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    return s;
}

bool Scalar::isZero() const {
    if (!field_) throw Error("uninitialized scalar");
    if (field_->kind() == Field::Kind::GF)
        return std::all_of(gf_.begin(), gf_.end(), [](unsigned c) { return c == 0; });
    return num_.empty();
}

bool Scalar::isOne() const {
    if (!field_) throw Error("uninitialized scalar");
    if (field_->kind() == Field::Kind::GF) {
        if (gf_.empty() || gf_[0] != 1) return false;
        return std::all_of(gf_.begin() + 1, gf_.end(), [](unsigned c) { return c == 0; });
    }
    // canonical form: reduced fraction with monic denominator, so 1 = c/c
    return num_.size() == 1 && den_.size() == 1 && num_[0] == den_[0];
}

static void check_same_field(const Scalar& a, const Scalar& b) {
    if (a.field() && a.field() == b.field()) return;  // common fast path
    if (!a.field() || !b.field() || !a.field()->same(*b.field()))
        throw DescriptorMismatch("binary operation on scalars from different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(*this, o);
    if (field_->kind() == Field::Kind::RF) {
        if (isZero()) return o;
        if (o.isZero()) return *this;
    }
    if (field_->kind() == Field::Kind::GF) {
        unsigned p = field_->characteristic();
        std::vector<unsigned> c(gf_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = (gf_[i] + o.gf_[i]) % p;
        return makeGF(field_, std::move(c));
    }
    return makeRF(field_,
                  poly::add(poly::mul(num_, o.den_), poly::mul(o.num_, den_)),
                  poly::mul(den_, o.den_));
}

Scalar Scalar::operator-() const {
    if (field_->kind() == Field::Kind::GF) {
        unsigned p = field_->characteristic();
        std::vector<unsigned> c(gf_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = (p - gf_[i]) % p;
        return makeGF(field_, std::move(c));
    }
    poly::Poly n = num_;
    for (auto& x : n) x = -x;
    Scalar s;
    s.field_ = field_;
    s.num_ = std::move(n);
    s.den_ = den_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(*this, o);
    if (field_->kind() == Field::Kind::RF) {
        if (isZero() || o.isOne()) return *this;
        if (o.isZero() || isOne()) return o;
    }
    if (field_->kind() == Field::Kind::GF) {
        unsigned p = field_->characteristic();
        FpPoly a(gf_.begin(), gf_.end()), b(o.gf_.begin(), o.gf_.end());
        fp_trim(a);
        fp_trim(b);
        FpPoly r = fp_mod(fp_mul(a, b, p), field_->modulus(), p);
        r.resize(field_->degree(), 0);
        return makeGF(field_, std::move(r));
    }
    return makeRF(field_, poly::mul(num_, o.num_), poly::mul(den_, o.den_));
}

Scalar Scalar::inverse() const {
    if (isZero()) throw DivisionByZero();
    if (field_->kind() == Field::Kind::GF) {
        unsigned p = field_->characteristic();
        FpPoly a(gf_.begin(), gf_.end());
        fp_trim(a);
        FpPoly r = fp_inv_mod(a, field_->modulus(), p);
        r.resize(field_->degree(), 0);
        return makeGF(field_, std::move(r));
    }
    // the stored fraction is reduced, so only the new denominator needs to be
    // made monic again
    poly::Poly n = den_, d = num_;
    if (!d.back().isOne()) {
        Scalar linv = d.back().inverse();
        n = poly::scale(n, linv);
        d = poly::scale(d, linv);
    }
    Scalar s;
    s.field_ = field_;
    s.num_ = std::move(n);
    s.den_ = std::move(d);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(*this, o);
    if (o.isZero()) throw DivisionByZero();
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    if (!field_ || !o.field_ || !field_->same(*o.field_)) return false;
    if (field_->kind() == Field::Kind::GF) return gf_ == o.gf_;
    return num_ == o.num_ && den_ == o.den_;
}

std::string Scalar::key() const {
    std::ostringstream os;
    if (field_->kind() == Field::Kind::GF) {
        os << 'g';
        for (size_t i = 0; i < gf_.size(); ++i) os << (i ? ',' : '[') << gf_[i];
        os << ']';
    } else {
        os << "r[";
        for (size_t i = 0; i < num_.size(); ++i) {
            if (i) os << ',';
            os << num_[i].key();
        }
        os << ';';
        for (size_t i = 0; i < den_.size(); ++i) {
            if (i) os << ',';
            os << den_[i].key();
        }
        os << ']';
    }
    return os.str();
}

static std::string poly_str(const std::vector<Scalar>& a, const std::string& var) {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i].isZero()) continue;
        if (!first) os << "+";
        first = false;
        std::string c = a[i].str();
        bool cone = a[i].isOne();
        if (i == 0) {
            os << c;
        } else {
            if (!cone) os << "(" << c << ")*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string Scalar::str() const {
    if (field_->kind() == Field::Kind::GF) {
        // polynomial in the generator g
        std::vector<Scalar> coeffs;  // reuse poly_str via prime-field scalars
        std::ostringstream os;
        bool first = true;
        for (size_t i = gf_.size(); i-- > 0;) {
            if (gf_[i] == 0) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0) {
                os << gf_[i];
            } else {
                if (gf_[i] != 1) os << gf_[i] << "*";
                os << 'g';
                if (i > 1) os << "^" << i;
            }
        }
        if (first) os << '0';
        return os.str();
    }
    std::string n = poly_str(num_, field_->var());
    if (den_.size() == 1 && den_[0].isOne()) return n;
    return "(" + n + ")/(" + poly_str(den_, field_->var()) + ")";
}

// ---------------------------------------------------------------------------
// powers, p-basis, roots

Scalar scalar_pow(const Scalar& a, std::uint64_t n) {
    Scalar r = a.field()->one(), b = a;
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

Scalar pth_power(const Scalar& a, unsigned e) {
    Scalar r = a;
    unsigned p = a.field()->characteristic();
    for (unsigned i = 0; i < e; ++i) r = scalar_pow(r, p);
    return r;
}

std::vector<Scalar> p_basis_monomials(const FieldPtr& field) {
    unsigned p = field->characteristic();
    if (field->rfDepth() == 0) return {field->one()};
    if (field->rfDepth() > 2) throw UnsupportedTower("depth > 2");
    std::vector<Scalar> inner;
    if (field->rfDepth() == 2) {
        for (const Scalar& m : p_basis_monomials(field->base())) {
            // embed base monomial as a constant fraction
            inner.push_back(Scalar::makeRF(field, {m}, {field->base()->one()}));
        }
    } else {
        inner = {field->one()};
    }
    Scalar t = field->generator();
    std::vector<Scalar> out;
    Scalar tr = field->one();
    for (unsigned r = 0; r < p; ++r) {
        for (const Scalar& m : inner) out.push_back(tr * m);
        tr = tr * t;
    }
    // reorder so that index = r_outer * (inner count) + inner index, with 1 first
    return out;
}

std::vector<Scalar> p_basis_expand(const Scalar& a) {
    const FieldPtr& field = a.field();
    unsigned p = field->characteristic();
    if (field->rfDepth() == 0) {
        unsigned f = field->degree();
        return {f == 1 ? a : pth_power(a, f - 1)};
    }
    if (field->rfDepth() > 2) throw UnsupportedTower("depth > 2");
    const FieldPtr& base = field->base();
    // a = u/v  ->  (u * v^(p-1)) / v^p ; the numerator is grouped by residue
    // of the exponent mod p, coefficients expanded over the base field.
    poly::Poly w = a.rfNum();
    for (unsigned i = 0; i + 1 < p; ++i) w = poly::mul(w, a.rfDen());
    size_t inner_count = base->rfDepth() == 0 ? 1 : p;
    std::vector<Scalar> out(p * inner_count, field->zero());
    for (unsigned r = 0; r < p; ++r) {
        // gather coefficients c_{jp+r}
        std::vector<std::vector<Scalar>> comps(inner_count);  // per inner index: poly over base
        size_t maxj = 0;
        for (size_t idx = r; idx < w.size(); idx += p) {
            size_t j = (idx - r) / p;
            std::vector<Scalar> d = p_basis_expand(w[idx]);  // over base
            for (size_t s = 0; s < inner_count; ++s) {
                comps[s].resize(std::max(comps[s].size(), j + 1), base->zero());
                comps[s][j] = d[s];
            }
            maxj = std::max(maxj, j + 1);
        }
        for (size_t s = 0; s < inner_count; ++s) {
            poly::Poly q = comps[s];
            poly::trim(q);
            out[r * inner_count + s] =
                q.empty() ? field->zero() : Scalar::makeRF(field, q, a.rfDen());
        }
    }
    return out;
}

std::optional<Scalar> is_pth_power(const Scalar& a) {
    std::vector<Scalar> comps = p_basis_expand(a);
    for (size_t i = 1; i < comps.size(); ++i)
        if (!comps[i].isZero()) return std::nullopt;
    return comps[0];
}

std::optional<Scalar> scalar_sqrt(const Scalar& a) {
    const FieldPtr& field = a.field();
    unsigned p = field->characteristic();
    if (a.isZero()) return field->zero();
    if (p == 2) return is_pth_power(a);
    if (field->kind() == Field::Kind::GF) {
        for (const Scalar& x : enumerate_scalars(field))
            if (x * x == a) return x;
        return std::nullopt;
    }
    // reduced fraction with monic denominator: a square iff numerator and
    // denominator are both polynomial squares
    auto n = poly::sqrt(a.rfNum(), field->base());
    if (!n) return std::nullopt;
    auto d = poly::sqrt(a.rfDen(), field->base());
    if (!d) return std::nullopt;
    return Scalar::makeRF(field, *n, *d);
}

std::vector<Scalar> enumerate_scalars(const FieldPtr& field) {
    if (!field->isFinite()) throw InfiniteField(field->name());
    unsigned p = field->characteristic(), f = field->degree();
    std::uint64_t q = field->order();
    std::vector<Scalar> out;
    out.reserve(q);
    for (std::uint64_t k = 0; k < q; ++k) {
        std::vector<unsigned> c(f);
        std::uint64_t t = k;
        for (unsigned i = 0; i < f; ++i) {
            c[i] = static_cast<unsigned>(t % p);
            t /= p;
        }
        out.push_back(Scalar::makeGF(field, std::move(c)));
    }
    return out;
}

Scalar random_scalar(const FieldPtr& field, unsigned budget, std::mt19937_64& rng) {
    unsigned p = field->characteristic();
    if (field->kind() == Field::Kind::GF) {
        std::vector<unsigned> c(field->degree());
        for (auto& x : c) x = static_cast<unsigned>(rng() % p);
        return Scalar::makeGF(field, std::move(c));
    }
    const FieldPtr& base = field->base();
    auto rand_poly = [&](bool nonzero) {
        for (;;) {
            unsigned d = static_cast<unsigned>(rng() % (budget + 1));
            poly::Poly q;
            for (unsigned i = 0; i <= d; ++i)
                q.push_back(random_scalar(base, budget, rng));
            poly::trim(q);
            if (!q.empty() || !nonzero) return q;
        }
    };
    poly::Poly num = rand_poly(false);
    poly::Poly den = rand_poly(true);
    return Scalar::makeRF(field, std::move(num), std::move(den));
}

} // namespace ringlat
