#include "rankin/denssub.hpp"

#include "rankin/enumeration.hpp"
#include "rankin/errors.hpp"

#include <algorithm>
#include <array>
#include <thread>

namespace rankin {

namespace {

using i128 = __int128;

constexpr std::int64_t kMaxCandidateNorm = std::int64_t{1} << 28;

BigInt to_big(i128 v)
{
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt hi = static_cast<unsigned long>(u >> 64);
    BigInt lo = static_cast<unsigned long>(u & ~std::uint64_t{0});
    BigInt out = (hi << 64) + lo;
    return neg ? BigInt(-out) : out;
}

i128 to_i128(BigInt const& v)
{
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 120)
        throw Overflow("search bound too large: " + v.get_str());
    BigInt hi = v >> 64;
    BigInt lo = v - (hi << 64);
    return (static_cast<i128>(hi.get_si()) << 64) + static_cast<i128>(lo.get_ui());
}

using SmallGram = std::array<std::array<std::int64_t, kMaxSearchRank>, kMaxSearchRank>;

/* Laplace expansion; entries below 2^28 keep every term inside 128 bits. */
i128 small_det(SmallGram const& g, std::size_t k)
{
    if (k == 0 || k > kMaxSearchRank)
        return 1;
    switch (k) {
    case 1:
        return g[0][0];
    case 2:
        return static_cast<i128>(g[0][0]) * g[1][1] - static_cast<i128>(g[0][1]) * g[1][0];
    default:
        break;
    }
    i128 acc = 0;
    for (std::size_t c = 0; c < k; ++c) {
        if (g[0][c] == 0)
            continue;
        SmallGram minor{};
        for (std::size_t i = 1; i < k; ++i)
            for (std::size_t j = 0, jj = 0; j < k; ++j)
                if (j != c)
                    minor[i - 1][jj++] = g[i][j];
        i128 term = g[0][c] * small_det(minor, k - 1);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

std::int64_t small_dot(IntVector const& a, IntVector const& b)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

struct Best {
    i128 det = -1;
    IntMatrix rows;  // sorted

    bool offer(i128 d, IntMatrix candidate)
    {
        std::sort(candidate.begin(), candidate.end());
        if (det < 0 || d < det || (d == det && candidate < rows)) {
            det = d;
            rows = std::move(candidate);
            return true;
        }
        return false;
    }
};

struct SearchRun {
    std::vector<ShortVector> const* candidates;
    std::size_t count;      // candidates[0, count) are used
    std::size_t l;
    i128 three_e;           // 3^(l(l-1)/2)
    i128 four_e;
    i128 prune_rhs;         // factor * 4^e * U
    bool reduced_only;      // apply the pairwise and product filters
};

class Worker {
public:
    explicit Worker(SearchRun const& run) : run_(run) {}

    void first_level(std::size_t offset, std::size_t stride)
    {
        for (std::size_t i = offset; i < run_.count; i += stride)
            if (!extend(0, i))
                break;
    }

    Best best;
    std::uint64_t leaves = 0;

private:
    ShortVector const& cand(std::size_t i) const { return (*run_.candidates)[i]; }

    i128 power_bound(std::size_t depth, std::int64_t norm) const
    {
        i128 p = prod_[depth];
        for (std::size_t k = depth; k < run_.l; ++k)
            p *= norm;
        return p * run_.three_e;
    }

    /* false when no later candidate can pass the product bound */
    bool extend(std::size_t depth, std::size_t i)
    {
        std::int64_t norm = cand(i).norm;
        if (power_bound(depth, norm) > run_.prune_rhs)
            return false;
        for (std::size_t k = 0; k < depth; ++k) {
            std::int64_t g = small_dot(cand(i).vector, cand(chosen_[k]).vector);
            if (run_.reduced_only && 2 * std::abs(g) > cand(chosen_[k]).norm)
                return true;
            gram_[depth][k] = gram_[k][depth] = g;
        }
        gram_[depth][depth] = norm;
        chosen_[depth] = i;
        prod_[depth + 1] = prod_[depth] * norm;
        std::size_t size = depth + 1;
        if (size == run_.l)
            ++leaves;
        i128 det = size >= 2 ? small_det(gram_, size) : norm;
        if (det == 0)
            return true;
        if (size == run_.l) {
            if (run_.reduced_only && prod_[size] * run_.three_e > run_.four_e * det)
                return true;
            if (best.det < 0 || det <= best.det) {
                IntMatrix rows;
                for (std::size_t k = 0; k < size; ++k)
                    rows.push_back(cand(chosen_[k]).vector);
                best.offer(det, std::move(rows));
            }
            return true;
        }
        for (std::size_t j = i + 1; j < run_.count; ++j)
            if (!extend(size, j))
                break;
        return true;
    }

    SearchRun const& run_;
    std::array<std::size_t, kMaxSearchRank> chosen_{};
    SmallGram gram_{};
    std::array<i128, kMaxSearchRank + 1> prod_{1, 1, 1, 1, 1};
};

struct RunResult {
    Best best;
    std::uint64_t leaves = 0;
};

RunResult run_search(SearchRun const& run, unsigned threads)
{
    threads = std::max(1u, threads);
    std::vector<Worker> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        workers.emplace_back(run);
    if (threads == 1) {
        workers[0].first_level(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&workers, t, threads] { workers[t].first_level(t, threads); });
        for (auto& th : pool)
            th.join();
    }
    RunResult out;
    for (auto& w : workers) {
        out.leaves += w.leaves;
        if (w.best.det >= 0)
            out.best.offer(w.best.det, w.best.rows);
    }
    return out;
}

/* Determinant of a greedily grown sublattice: a cheap valid upper bound. */
BigInt greedy_upper_bound(IntegralLattice const& lattice, std::size_t l, std::int64_t minimum,
                          std::uint64_t cap)
{
    std::int64_t radius = minimum;
    ShortVectorList list;
    for (;;) {
        list = short_vectors(lattice, radius, cap);
        IntMatrix rows;
        for (auto const& sv : list.vectors)
            rows.push_back(sv.vector);
        if (rank(rows) >= l)
            break;
        if (radius > kMaxCandidateNorm)
            throw Overflow("no rank-" + std::to_string(l) + " set of short vectors below 2^28");
        radius *= 2;
    }
    IntMatrix chosen{list.vectors.front().vector};
    while (chosen.size() < l) {
        BigInt best_det = 0;
        std::size_t best_idx = 0;
        for (std::size_t i = 0; i < list.vectors.size(); ++i) {
            IntMatrix trial = chosen;
            trial.push_back(list.vectors[i].vector);
            BigInt d = determinant(gram_matrix(trial));
            if (sgn(d) > 0 && (sgn(best_det) == 0 || d < best_det)) {
                best_det = d;
                best_idx = i;
            }
        }
        chosen.push_back(list.vectors[best_idx].vector);
    }
    return determinant(gram_matrix(chosen));
}

}  // namespace

SearchCertificate d_l_search(IntegralLattice const& lattice, std::size_t l, SearchOptions const& options)
{
    std::size_t n = lattice.n();
    if (l < 1 || l > std::min(kMaxSearchRank, n))
        throw InvalidArgument("rank l = " + std::to_string(l) + " outside [1, min(4, n)] with n = " +
                              std::to_string(n));

    LatticeMinimum lambda = lattice_minimum(lattice);
    BigInt heuristic = greedy_upper_bound(lattice, l, lambda.norm, options.max_candidates);
    BigInt upper = heuristic;
    if (options.upper_hint && sgn(*options.upper_hint) > 0 && *options.upper_hint < upper)
        upper = *options.upper_hint;

    unsigned long e = l * (l - 1) / 2;
    BigInt four_e = pow_int(4, e), three_e = pow_int(3, e);
    BigInt lambda_pow = pow_int(lambda.norm, static_cast<unsigned long>(l - 1));

    auto radius_for = [&](BigInt const& u) {
        BigInt bv = four_e * u / (three_e * lambda_pow);
        if (bv >= kMaxCandidateNorm / 2)
            throw Overflow("per-vector bound " + bv.get_str() + " exceeds the supported range");
        return std::max<std::int64_t>(bv.get_si(), lambda.norm);
    };

    SearchCertificate cert;
    cert.l = l;
    cert.minimum_norm = lambda.norm;

    auto certify = [&](BigInt const& u, RunResult& result) {
        std::int64_t bv = radius_for(u);
        ShortVectorList list = short_vectors(lattice, bv, options.max_candidates);
        SearchRun run{&list.vectors, list.vectors.size(), l, to_i128(three_e), to_i128(four_e),
                      to_i128(four_e * u), true};
        result = run_search(run, options.threads);
        cert.per_vector_bound = bv;
        cert.upper_bound = u;
        cert.candidates_examined += result.leaves;
    };

    RunResult main;
    certify(upper, main);
    if (main.best.det < 0 || to_big(main.best.det) > upper) {
        /* the hint was below d_l; fall back to the heuristic bound */
        certify(heuristic, main);
    }
    if (main.best.det < 0)
        throw Error("internal: no reduced rank-" + std::to_string(l) + " sublattice found");

    cert.value = to_big(main.best.det);
    cert.witness = sublattice_from_rows(std::make_shared<IntegralLattice const>(lattice), main.best.rows);
    if (cert.witness.det_l != cert.value)
        throw Error("internal: witness determinant mismatch");

    if (options.escalate) {
        std::int64_t bv2 = 2 * cert.per_vector_bound;
        ShortVectorList list = short_vectors(lattice, bv2, options.max_candidates);
        SearchRun run{&list.vectors, list.vectors.size(), l, to_i128(three_e), to_i128(four_e),
                      to_i128(2 * four_e * cert.upper_bound), false};
        RunResult wide = run_search(run, options.threads);
        cert.escalation_bound = bv2;
        cert.candidates_examined += wide.leaves;
        cert.confirmed_by_escalation = wide.best.det >= 0 && to_big(wide.best.det) == cert.value;
        if (wide.best.det >= 0 && to_big(wide.best.det) < cert.value) {
            cert.value = to_big(wide.best.det);
            cert.witness = sublattice_from_rows(cert.witness.ambient, wide.best.rows);
        }
    }
    return cert;
}

SearchCertificate d_l_search(LinearCode const& code, std::size_t l, SearchOptions options)
{
    BigInt bound = pow_int(code.q(), 2 * l);
    if (!options.upper_hint || bound < *options.upper_hint)
        options.upper_hint = bound;
    return d_l_search(construction_a(code), l, options);
}

Rank2Bound d2_upper_bound_code(LinearCode const& code, std::uint64_t cap)
{
    if (code.n() < 2)
        throw InvalidArgument("rank-2 bound needs n >= 2");
    CodewordWeightReport rep = weight_report(code, cap);
    BigInt q2 = BigInt(code.q()) * code.q();
    std::int64_t gap = rep.min_euclidean - rep.max_coeff_sq;
    Rank2Bound out;
    out.clamped = gap < 1;
    // A weight-one minimal word b e_i pairs with q e_j, j != i: det q^2 d_E.
    BigInt second = q2 * (out.clamped ? rep.min_euclidean : gap);
    BigInt q4 = q2 * q2;
    out.value = second < q4 ? second : q4;
    return out;
}

}  // namespace rankin
