#include "sumrank/ffalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sumrank {

namespace {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

} // namespace

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q)
{
    if (q < 2) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return std::make_pair(q, 1u);
    unsigned e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(p, e);
}

std::shared_ptr<const FiniteField> FiniteField::prime(std::uint64_t p)
{
    if (!is_prime(p)) throw Error(ErrorCode::NotAPrimePower, std::to_string(p) + " is not prime");
    if (p >= (1ULL << 32)) throw Error(ErrorCode::InvalidParams, "prime too large");
    std::shared_ptr<FiniteField> f(new FiniteField());
    f->p_ = p;
    f->order_ = p;
    f->degree_ = 1;
    f->p_digits_ = 1;
    f->modulus_ = {0, 1};
    return f;
}

std::shared_ptr<const FiniteField> FiniteField::extension(std::shared_ptr<const FiniteField> sub,
                                                          ElemVector modulus)
{
    modulus = poly::trim(std::move(modulus));
    if (modulus.size() < 2 || modulus.back() != 1)
        throw Error(ErrorCode::InvalidParams, "extension modulus must be monic of degree >= 1");
    const unsigned deg = static_cast<unsigned>(modulus.size() - 1);
    const double bits = deg * std::log2(static_cast<double>(sub->order()));
    if (bits > 62.5) throw Error(ErrorCode::InvalidParams, "field too large for 63-bit elements");

    std::shared_ptr<FiniteField> f(new FiniteField());
    f->p_ = sub->p_;
    f->degree_ = deg;
    f->p_digits_ = sub->p_digits_ * deg;
    std::uint64_t order = 1;
    for (unsigned i = 0; i < deg; ++i) order *= sub->order();
    f->order_ = order;
    f->sub_ = std::move(sub);
    f->modulus_ = std::move(modulus);
    if (f->p_ == 2 && f->sub_->is_prime_field()) {
        Elem r = 0;
        for (unsigned i = 0; i < deg; ++i)
            if (f->modulus_[i]) r |= Elem{1} << i;
        f->binary_reduction_ = r;
    }
    if (order <= (1u << 16)) f->build_tables();
    return f;
}

void FiniteField::build_tables()
{
    const std::uint64_t n = order_ - 1;
    if (n == 0) return;
    std::vector<Elem> powers;
    powers.reserve(n);
    for (Elem g = 1; g < order_; ++g) {
        powers.clear();
        Elem x = 1;
        do {
            powers.push_back(x);
            x = poly_mul(x, g);
        } while (x != 1 && powers.size() <= n);
        if (powers.size() == n) break;
    }
    exp_.resize(2 * n);
    log_.assign(order_, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
        exp_[i] = exp_[i + n] = powers[i];
        log_[powers[i]] = static_cast<std::uint32_t>(i);
    }
}

Elem FiniteField::add(Elem a, Elem b) const noexcept
{
    if (p_ == 2) return a ^ b;
    if (!sub_) return (a + b) % p_;
    Elem r = 0, place = 1;
    for (unsigned i = 0; i < p_digits_; ++i) {
        r += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return r;
}

Elem FiniteField::neg(Elem a) const noexcept
{
    if (p_ == 2) return a;
    if (!sub_) return a == 0 ? 0 : p_ - a;
    Elem r = 0, place = 1;
    for (unsigned i = 0; i < p_digits_; ++i) {
        r += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return r;
}

Elem FiniteField::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem FiniteField::scale_int(Elem a, std::uint64_t k) const noexcept
{
    k %= p_;
    if (!sub_) return mulmod(a, k, p_);
    Elem r = 0, place = 1;
    for (unsigned i = 0; i < p_digits_; ++i) {
        r += ((a % p_) * k % p_) * place;
        a /= p_;
        place *= p_;
    }
    return r;
}

Elem FiniteField::poly_mul(Elem a, Elem b) const noexcept
{
    if (binary_reduction_ != 0 || (p_ == 2 && sub_ && sub_->is_prime_field())) {
        unsigned __int128 prod = 0;
        for (unsigned i = 0; i < degree_; ++i)
            if ((b >> i) & 1) prod ^= static_cast<unsigned __int128>(a) << i;
        for (int i = 2 * static_cast<int>(degree_) - 2; i >= static_cast<int>(degree_); --i)
            if ((prod >> i) & 1) {
                prod ^= static_cast<unsigned __int128>(1) << i;
                prod ^= static_cast<unsigned __int128>(binary_reduction_) << (i - degree_);
            }
        return static_cast<Elem>(prod);
    }
    const FiniteField& s = *sub_;
    ElemVector ca = coords(a), cb = coords(b);
    ElemVector prod(2 * degree_ - 1, 0);
    for (unsigned i = 0; i < degree_; ++i) {
        if (ca[i] == 0) continue;
        for (unsigned j = 0; j < degree_; ++j)
            if (cb[j] != 0) prod[i + j] = s.add(prod[i + j], s.mul(ca[i], cb[j]));
    }
    for (int i = 2 * static_cast<int>(degree_) - 2; i >= static_cast<int>(degree_); --i) {
        Elem c = prod[i];
        if (c == 0) continue;
        for (unsigned j = 0; j <= degree_; ++j) {
            std::size_t idx = i - degree_ + j;
            prod[idx] = s.sub(prod[idx], s.mul(c, modulus_[j]));
        }
    }
    return from_coords(std::span<const Elem>(prod.data(), degree_));
}

Elem FiniteField::mul(Elem a, Elem b) const noexcept
{
    if (a == 0 || b == 0) return 0;
    if (!sub_) return mulmod(a, b, p_);
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return poly_mul(a, b);
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const noexcept
{
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem FiniteField::inv(Elem a) const
{
    if (a == 0) throw Error(ErrorCode::InvalidParams, "inverse of zero");
    if (!sub_) return pow(a, p_ - 2);
    if (!log_.empty()) return exp_[(order_ - 1) - log_[a]];
    return pow(a, order_ - 2);
}

ElemVector FiniteField::coords(Elem a) const
{
    if (!sub_) return {a};
    const std::uint64_t b = sub_->order();
    ElemVector c(degree_);
    for (unsigned i = 0; i < degree_; ++i) {
        c[i] = a % b;
        a /= b;
    }
    return c;
}

Elem FiniteField::from_coords(std::span<const Elem> c) const
{
    if (!sub_) return c.empty() ? 0 : c[0];
    const std::uint64_t b = sub_->order();
    Elem r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * b + c[i];
    return r;
}

std::string FiniteField::describe() const
{
    std::ostringstream os;
    os << "GF(" << order_ << ")";
    if (sub_) {
        os << " = GF(" << sub_->order() << ")[x]/(";
        bool first = true;
        for (std::size_t i = modulus_.size(); i-- > 0;) {
            if (modulus_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (modulus_[i] != 1 || i == 0) os << modulus_[i];
            if (i > 0) os << (modulus_[i] != 1 ? "*" : "") << "x";
            if (i > 1) os << "^" << i;
        }
        os << ")";
    }
    return os.str();
}

namespace poly {

ElemVector trim(ElemVector a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

ElemVector mul(const FiniteField& f, const ElemVector& a, const ElemVector& b)
{
    if (a.empty() || b.empty()) return {};
    ElemVector r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    return trim(std::move(r));
}

ElemVector mod(const FiniteField& f, ElemVector a, const ElemVector& m)
{
    a = trim(std::move(a));
    const ElemVector mm = trim(m);
    if (mm.empty()) throw Error(ErrorCode::InvalidParams, "polynomial division by zero");
    const std::size_t dm = mm.size() - 1;
    const Elem lead_inv = f.inv(mm.back());
    while (a.size() > dm) {
        const Elem c = f.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, mm[j]));
        a = trim(std::move(a));
    }
    return a;
}

ElemVector gcd(const FiniteField& f, ElemVector a, ElemVector b)
{
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        ElemVector r = mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Elem li = f.inv(a.back());
        for (auto& c : a) c = f.mul(c, li);
    }
    return a;
}

namespace {

ElemVector powmod(const FiniteField& f, ElemVector base, std::uint64_t e, const ElemVector& m)
{
    ElemVector r{1};
    base = mod(f, std::move(base), m);
    while (e) {
        if (e & 1) r = mod(f, mul(f, r, base), m);
        base = mod(f, mul(f, base, base), m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_irreducible(const FiniteField& f, const ElemVector& monic)
{
    const ElemVector g = trim(monic);
    if (g.size() < 2) return false;
    const std::size_t deg = g.size() - 1;
    ElemVector h{0, 1};
    for (std::size_t i = 1; i <= deg / 2; ++i) {
        h = powmod(f, h, f.order(), g);
        ElemVector d = h;
        d.resize(std::max<std::size_t>(d.size(), 2), 0);
        d[1] = f.sub(d[1], 1);
        if (gcd(f, g, d).size() != 1) return false;
    }
    return true;
}

ElemVector smallest_irreducible(const FiniteField& f, unsigned degree)
{
    if (degree == 0) throw Error(ErrorCode::InvalidParams, "degree must be positive");
    const std::uint64_t q = f.order();
    // Digits (c0, c1, ..., c_{d-1}) counted with c0 most significant.
    // Above degree 1 the constant term must be nonzero.
    ElemVector c(degree, 0);
    if (degree > 1) c[0] = 1;
    for (;;) {
        ElemVector cand = c;
        cand.push_back(1);
        if (is_irreducible(f, cand)) return cand;
        std::size_t i = degree;
        while (i-- > 0) {
            if (++c[i] < q) break;
            c[i] = 0;
            if (i == 0) throw Error(ErrorCode::InvalidParams, "no irreducible polynomial found");
        }
    }
}

} // namespace poly

FieldContext::FieldContext(std::shared_ptr<const FiniteField> base,
                           std::shared_ptr<const FiniteField> ext, std::uint64_t q, unsigned m)
    : base_(std::move(base)), ext_(std::move(ext)), q_(q), m_(m)
{
}

Elem FieldContext::basis_element(unsigned i) const
{
    if (i >= m_) throw Error(ErrorCode::IndexOutOfRange, "basis index out of range");
    Elem r = 1;
    for (unsigned j = 0; j < i; ++j) r *= q_;
    return r;
}

FieldContext make_field(std::uint64_t q, unsigned m)
{
    auto pp = prime_power(q);
    if (!pp) throw Error(ErrorCode::NotAPrimePower, std::to_string(q) + " is not a prime power");
    if (m == 0) throw Error(ErrorCode::InvalidParams, "extension degree must be positive");
    if (m * std::log2(static_cast<double>(q)) > 62.5)
        throw Error(ErrorCode::InvalidParams, "q^m does not fit in 63 bits");
    auto prime = FiniteField::prime(pp->first);
    std::shared_ptr<const FiniteField> base = prime;
    if (pp->second > 1) base = FiniteField::extension(prime, poly::smallest_irreducible(*prime, pp->second));
    auto ext = FiniteField::extension(base, poly::smallest_irreducible(*base, m));
    return FieldContext(base, ext, q, m);
}

FqMatrix expand(const FieldContext& ctx, std::span<const Elem> x)
{
    FqMatrix out(ctx.m(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        ElemVector c = ctx.coordinates(x[i]);
        for (unsigned r = 0; r < ctx.m(); ++r) out(r, i) = c[r];
    }
    return out;
}

template <class Tag>
std::vector<std::size_t> rref_in_place(const FiniteField& f, Matrix<Tag>& a)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        const Elem iv = f.inv(a(r, c));
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), iv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Elem factor = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (a(r, j) != 0) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class Tag>
Matrix<Tag> row_space_basis(const FiniteField& f, Matrix<Tag> a)
{
    const std::size_t rk = rref_in_place(f, a).size();
    return a.block(0, rk, 0, a.cols());
}

template <class Tag>
Matrix<Tag> right_kernel(const FiniteField& f, const Matrix<Tag>& a)
{
    Matrix<Tag> r = a;
    auto piv = rref_in_place(f, r);
    std::vector<bool> is_piv(a.cols(), false);
    for (auto c : piv) is_piv[c] = true;
    Matrix<Tag> k(0, a.cols());
    for (std::size_t fc = 0; fc < a.cols(); ++fc) {
        if (is_piv[fc]) continue;
        ElemVector v(a.cols(), 0);
        v[fc] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(r(i, fc));
        k.append_row(v);
    }
    return k;
}

template <class Tag>
Matrix<Tag> multiply(const FiniteField& f, const Matrix<Tag>& a, const Matrix<Tag>& b)
{
    if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Matrix<Tag> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
        }
    return c;
}

template <class Tag>
ElemVector multiply(const FiniteField& f, const Matrix<Tag>& a, std::span<const Elem> x)
{
    if (a.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    ElemVector y(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0 && x[j] != 0) y[i] = f.add(y[i], f.mul(a(i, j), x[j]));
    return y;
}

template <class Tag>
SolveResult solve_linear(const FiniteField& f, const Matrix<Tag>& a, std::span<const Elem> b)
{
    if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
    const std::size_t n = a.cols();
    Matrix<Tag> aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    auto piv = rref_in_place(f, aug);
    SolveResult res;
    if (!piv.empty() && piv.back() == n) {
        res.status = SolveResult::Status::NoSolution;
        return res;
    }
    res.x.assign(n, 0);
    for (std::size_t i = 0; i < piv.size(); ++i) res.x[piv[i]] = aug(i, n);
    res.status = piv.size() == n ? SolveResult::Status::Unique : SolveResult::Status::NonUnique;
    return res;
}

#define SUMRANK_INSTANTIATE(Tag)                                                                    \
    template std::vector<std::size_t> rref_in_place<Tag>(const FiniteField&, Matrix<Tag>&);         \
    template Matrix<Tag> row_space_basis<Tag>(const FiniteField&, Matrix<Tag>);                     \
    template Matrix<Tag> right_kernel<Tag>(const FiniteField&, const Matrix<Tag>&);                 \
    template Matrix<Tag> multiply<Tag>(const FiniteField&, const Matrix<Tag>&, const Matrix<Tag>&); \
    template ElemVector multiply<Tag>(const FiniteField&, const Matrix<Tag>&, std::span<const Elem>); \
    template SolveResult solve_linear<Tag>(const FiniteField&, const Matrix<Tag>&, std::span<const Elem>);

SUMRANK_INSTANTIATE(BaseTag)
SUMRANK_INSTANTIATE(ExtTag)

#undef SUMRANK_INSTANTIATE

} // namespace sumrank
