#include "rankin/codes.hpp"

#include "rankin/errors.hpp"

#include <algorithm>

namespace rankin {

namespace {

std::int64_t mod(std::int64_t a, long q)
{
    std::int64_t r = a % q;
    return r < 0 ? r + q : r;
}

void check_params(long n, long q)
{
    if (q < 2)
        throw InvalidArgument("alphabet size q must be at least 2, got " + std::to_string(q));
    if (n < 1)
        throw InvalidArgument("code length n must be positive, got " + std::to_string(n));
}

/* HNF of the stack [generators; q I_n]. */
HermiteForm lifted_hnf(long q, long n, IntMatrix const& generators)
{
    BigMatrix stack = to_big(generators);
    for (long i = 0; i < n; ++i) {
        BigVector row(static_cast<std::size_t>(n), 0);
        row[static_cast<std::size_t>(i)] = q;
        stack.push_back(std::move(row));
    }
    return hermite_normal_form(std::move(stack), static_cast<std::size_t>(n));
}

}  // namespace

LinearCode::LinearCode(long q, long n, IntMatrix generators, std::optional<CodeFamily> family)
    : q_(q), n_(n), generators_(std::move(generators)), family_(std::move(family))
{
    check_params(n, q);
    for (auto& row : generators_) {
        if (static_cast<long>(row.size()) != n)
            throw InvalidArgument("generator row of length " + std::to_string(row.size()) +
                                  ", expected " + std::to_string(n));
        for (auto& e : row)
            e = mod(e, q);
    }
    HermiteForm h = lifted_hnf(q, n, generators_);
    lattice_basis_ = to_int(h.rows);
    BigInt index = 1;
    for (long i = 0; i < n; ++i)
        index *= lattice_basis_[i][i];
    cardinality_ = pow_int(q, static_cast<unsigned long>(n)) / index;
}

IntMatrix LinearCode::canonical_generators() const
{
    IntMatrix out;
    for (auto const& row : lattice_basis_) {
        IntVector r(row.size());
        bool nonzero = false;
        for (std::size_t j = 0; j < row.size(); ++j) {
            r[j] = mod(row[j], q_);
            nonzero = nonzero || r[j] != 0;
        }
        if (nonzero)
            out.push_back(std::move(r));
    }
    return out;
}

bool LinearCode::same_code(LinearCode const& other) const
{
    return q_ == other.q_ && n_ == other.n_ && lattice_basis_ == other.lattice_basis_;
}

bool LinearCode::is_self_dual() const
{
    return same_code(dual_code(*this));
}

std::vector<IntVector> LinearCode::codewords(std::uint64_t cap) const
{
    if (cardinality_ > BigInt(static_cast<unsigned long>(cap)))
        throw CapExceeded("codeword enumeration too large",
                          cardinality_.fits_ulong_p() ? cardinality_.get_ui() : UINT64_MAX, cap);

    /* Lambda_C / qZ^n is parametrized by c_i in [0, q / d_i) over the HNF rows. */
    std::size_t n = static_cast<std::size_t>(n_);
    std::vector<std::int64_t> range(n);
    for (std::size_t i = 0; i < n; ++i)
        range[i] = q_ / lattice_basis_[i][i];

    std::vector<IntVector> words;
    words.reserve(cardinality_.get_ui());
    std::vector<std::int64_t> coeff(n, 0);
    for (;;) {
        IntVector w(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            if (coeff[i])
                for (std::size_t j = i; j < n; ++j)
                    w[j] += coeff[i] * lattice_basis_[i][j];
        for (auto& x : w)
            x = mod(x, q_);
        words.push_back(std::move(w));

        std::size_t i = 0;
        while (i < n && ++coeff[i] == range[i])
            coeff[i++] = 0;
        if (i == n)
            break;
    }
    return words;
}

std::int64_t euclidean_weight(std::int64_t a, long q)
{
    std::int64_t b = q - a;
    return std::min(a * a, b * b);
}

std::int64_t minimal_lift(std::int64_t a, long q)
{
    return (q - a) * (q - a) < a * a ? a - q : a;
}

IntVector minimal_lift(IntVector const& word, long q)
{
    IntVector out(word.size());
    for (std::size_t i = 0; i < word.size(); ++i)
        out[i] = minimal_lift(word[i], q);
    return out;
}

LinearCode parity_check_code(long n, long q)
{
    if (n < 2)
        throw InvalidArgument("parity check code needs n >= 2");
    check_params(n, q);
    IntMatrix g(static_cast<std::size_t>(n - 1), IntVector(static_cast<std::size_t>(n), 0));
    for (long i = 0; i + 1 < n; ++i) {
        g[i][i] = 1;
        g[i][n - 1] = 1;
    }
    return LinearCode(q, n, std::move(g), CodeFamily{"parity_check", {}});
}

LinearCode full_code(long n, long q)
{
    check_params(n, q);
    IntMatrix g(static_cast<std::size_t>(n), IntVector(static_cast<std::size_t>(n), 0));
    for (long i = 0; i < n; ++i)
        g[i][i] = 1;
    return LinearCode(q, n, std::move(g), CodeFamily{"full", {}});
}

LinearCode zero_code(long n, long q)
{
    return LinearCode(q, n, {}, CodeFamily{"zero", {}});
}

LinearCode extended_hamming_code()
{
    IntMatrix g = {
        {1, 0, 0, 0, 1, 1, 0, 1},
        {0, 1, 0, 0, 1, 0, 1, 1},
        {0, 0, 1, 0, 0, 1, 1, 1},
        {0, 0, 0, 1, 1, 1, 1, 0},
    };
    return LinearCode(2, 8, std::move(g), CodeFamily{"extended_hamming", {}});
}

IntMatrix reed_muller_generators(long r, long m)
{
    if (r < 0 || m < 0 || r > m)
        throw InvalidArgument("Reed-Muller order must satisfy 0 <= r <= m, got r=" +
                              std::to_string(r) + " m=" + std::to_string(m));
    if (m > 20)
        throw InvalidArgument("Reed-Muller length 2^m too large");
    std::size_t len = std::size_t{1} << m;
    if (r == 0)
        return IntMatrix{IntVector(len, 1)};
    if (r == m) {
        IntMatrix id(len, IntVector(len, 0));
        for (std::size_t i = 0; i < len; ++i)
            id[i][i] = 1;
        return id;
    }
    IntMatrix top = reed_muller_generators(r, m - 1);
    IntMatrix bottom = reed_muller_generators(r - 1, m - 1);
    std::size_t half = len / 2;
    IntMatrix out;
    out.reserve(top.size() + bottom.size());
    for (auto const& row : top) {
        IntVector x(row);
        x.insert(x.end(), row.begin(), row.end());
        out.push_back(std::move(x));
    }
    for (auto const& row : bottom) {
        IntVector x(half, 0);
        x.insert(x.end(), row.begin(), row.end());
        out.push_back(std::move(x));
    }
    return out;
}

LinearCode reed_muller_code(long r, long m)
{
    IntMatrix g = reed_muller_generators(r, m);
    long n = 1L << m;
    return LinearCode(2, n, std::move(g), CodeFamily{"reed_muller", {{"m", m}, {"r", r}}});
}

CodewordWeightReport weight_report(LinearCode const& code, std::uint64_t cap)
{
    long q = code.q();
    std::vector<IntVector> words = code.codewords(cap);
    CodewordWeightReport rep;
    rep.codewords = words.size();
    bool seen = false;
    for (auto const& w : words) {
        long hamming = 0;
        std::int64_t euclid = 0, bmax = 0;
        for (auto a : w) {
            if (a == 0)
                continue;
            ++hamming;
            std::int64_t e = euclidean_weight(a, q);
            euclid += e;
            bmax = std::max(bmax, e);
        }
        if (hamming == 0)
            continue;
        if (!seen) {
            rep.min_hamming = hamming;
            rep.min_euclidean = euclid;
            rep.witness_codeword = w;
            rep.max_coeff_sq = bmax;
            seen = true;
            continue;
        }
        rep.min_hamming = std::min(rep.min_hamming, hamming);
        if (euclid < rep.min_euclidean) {
            rep.min_euclidean = euclid;
            rep.witness_codeword = w;
            rep.max_coeff_sq = bmax;
        } else if (euclid == rep.min_euclidean) {
            rep.max_coeff_sq = std::max(rep.max_coeff_sq, bmax);
            if (w < rep.witness_codeword)
                rep.witness_codeword = w;
        }
    }
    if (!seen)
        throw NoNonzeroCodeword();
    rep.witness_lift = minimal_lift(rep.witness_codeword, q);
    return rep;
}

LinearCode dual_code(LinearCode const& code)
{
    long q = code.q();
    std::size_t n = static_cast<std::size_t>(code.n());
    auto inv = inverse(to_big(code.lattice_basis()));
    /* rows of q * B^{-T} span q * Lambda_C^* = Lambda_{C^perp} */
    BigMatrix scaled(n, BigVector(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            BigRational v = inv[j][i] * q;
            v.canonicalize();
            if (v.get_den() != 1)
                throw Error("internal: scaled dual basis is not integral");
            scaled[i][j] = v.get_num();
        }
    }
    HermiteForm h = hermite_normal_form(std::move(scaled), n);
    IntMatrix gens;
    for (auto const& row : to_int(h.rows)) {
        IntVector r(n);
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) {
            r[j] = mod(row[j], q);
            nonzero = nonzero || r[j] != 0;
        }
        if (nonzero)
            gens.push_back(std::move(r));
    }
    return LinearCode(q, code.n(), std::move(gens));
}

}  // namespace rankin
