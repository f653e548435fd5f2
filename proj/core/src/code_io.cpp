#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "sumrank/codes.hpp"

namespace sumrank {

namespace {

Elem next_value(std::istream& is, const char* what)
{
    long long v = 0;
    if (!(is >> v)) throw Error(ErrorCode::ParseError, std::string("expected ") + what);
    if (v < 0) throw Error(ErrorCode::ParseError, std::string("negative ") + what);
    return static_cast<Elem>(v);
}

} // namespace

void write_code(std::ostream& os, const LinearCode& code)
{
    os << code.ctx.q() << ' ' << code.ctx.m() << ' ' << code.n() << ' ' << code.k << ' ' << code.params.ell << "\n\n";
    for (std::size_t r = 0; r < code.H.rows(); ++r) write_vector(os, code.H.row(r));
}

LinearCode read_code(std::istream& is)
{
    const Elem q = next_value(is, "q");
    const Elem m = next_value(is, "m");
    const Elem n = next_value(is, "n");
    const Elem k = next_value(is, "k");
    const Elem ell = next_value(is, "ell");
    if (n == 0 || k >= n || m == 0 || ell == 0) throw Error(ErrorCode::ParseError, "invalid code header");
    FieldContext ctx = make_field(q, static_cast<unsigned>(m));
    SumRankParams params = make_params(static_cast<int>(n), static_cast<int>(ell), static_cast<int>(m));
    FqmMatrix H(n - k, n);
    for (std::size_t r = 0; r < H.rows(); ++r)
        for (std::size_t c = 0; c < H.cols(); ++c) {
            H(r, c) = next_value(is, "matrix entry");
            if (!ctx.ext().contains(H(r, c))) throw Error(ErrorCode::ParseError, "entry outside GF(q^m)");
        }
    LinearCode code = code_from_parity_check(std::move(H), params, ctx);
    if (code.k != static_cast<int>(k)) throw Error(ErrorCode::ParseError, "parity-check rank disagrees with k");
    return code;
}

void write_vector(std::ostream& os, std::span<const Elem> v)
{
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << '\n';
}

ElemVector read_vector(std::istream& is, std::size_t n)
{
    ElemVector v(n);
    for (auto& x : v) x = next_value(is, "vector entry");
    return v;
}

} // namespace sumrank
