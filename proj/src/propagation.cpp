#include "rankin/propagation.hpp"

#include "rankin/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

namespace rankin {

namespace {

constexpr auto R = InvariantKind::rankin;
constexpr auto B = InvariantKind::berge_martinet;

constexpr std::uint64_t kMaxRoot = 60;
constexpr std::size_t kMaxRadicandBits = 512;
constexpr int kRoundingDigits = 40;

struct Endpoint {
    ExactRadical value;
    std::optional<std::size_t> step;
};

struct Cell {
    InvariantKind kind;
    long n;
    long l;
    Endpoint lower;
    std::optional<Endpoint> upper;
};

/* A bound looked up for use as a premise. */
struct Premise {
    ExactRadical value;
    std::optional<std::size_t> step;
    double log;
};

/* True when a candidate with log estimate `est` is clearly not beyond `current`
 * in the direction being tightened; undecided cases go to exact comparison. */
bool clearly_no_gain(double est, ExactRadical const& current, bool raising)
{
    double cur = radical_log(current);
    double tol = 1e-9 * std::max({1.0, std::fabs(cur), std::fabs(est)});
    return raising ? est < cur - tol : est > cur + tol;
}

std::string frac(long a, long b)
{
    return b == 1 ? std::to_string(a) : std::to_string(a) + "/" + std::to_string(b);
}

bool oversized(ExactRadical const& v)
{
    return v.root() > kMaxRoot ||
           mpz_sizeinbase(v.radicand().get_num_mpz_t(), 2) + mpz_sizeinbase(v.radicand().get_den_mpz_t(), 2) >
               kMaxRadicandBits;
}

class Engine {
public:
    Engine(long n_max, std::set<int> rules) : n_max_(n_max), rules_(std::move(rules))
    {
        structural_ = rules_.count(3) > 0;
        for (auto kind : {R, B})
            for (long n = 2; n <= n_max_; ++n)
                for (long l = 1; l < n; ++l)
                    if (key(kind, n, l) == std::make_tuple(kind, n, l))
                        index_[{kind, n, l}] = add_cell(kind, n, l);
    }

    void seed(BoundSeed const& s)
    {
        if (s.n < 2 || s.n > n_max_ || s.l < 1 || s.l >= s.n)
            return;
        std::string label = cell_label(s.kind, s.n, s.l);
        bool exact = s.upper && *s.upper == s.lower;
        std::string text = exact ? label + " = " + s.lower.to_string() + " (" + s.source + ")"
                                 : label + " >= " + s.lower.to_string() + " (" + s.source + ")";
        std::string rule = s.source.rfind("known", 0) == 0 ? "known value" : "lattice";
        if (!s.lower.is_zero())
            raise_lower(s.kind, s.n, s.l, radical_log(s.lower), [&] { return s.lower; }, rule, text, {});
        if (s.upper && !s.upper->is_zero())
            lower_upper(s.kind, s.n, s.l, radical_log(*s.upper), [&] { return *s.upper; }, rule,
                        label + " <= " + s.upper->to_string() + " (" + s.source + ")", {});
    }

    void run(std::size_t pass_cap)
    {
        for (passes_ = 0; passes_ < pass_cap;) {
            ++passes_;
            changed_ = false;
            if (rules_.count(2))
                rule2();
            if (rules_.count(4))
                rule4();
            if (rules_.count(5))
                rule5();
            if (rules_.count(6))
                rule6();
            if (rules_.count(7))
                rule7();
            if (rules_.count(8))
                rule8();
            if (!changed_)
                return;
        }
        cap_hit_ = true;
    }

    BoundTable table() const
    {
        BoundTable t;
        t.n_max = n_max_;
        t.rules = rules_;
        t.steps = steps_;
        t.passes = passes_;
        t.pass_cap_hit = cap_hit_;
        for (auto kind : {R, B}) {
            for (long n = 2; n <= n_max_; ++n) {
                for (long l = 1; l < n; ++l) {
                    Cell const& c = cells_[index_.at(key(kind, n, l))];
                    BoundInterval iv{kind, n, l, c.lower.value, std::nullopt, c.lower.step, std::nullopt};
                    if (c.upper) {
                        iv.upper = c.upper->value;
                        iv.upper_step = c.upper->step;
                    }
                    if (c.l != l) {
                        /* the dual cell: record the duality step on top */
                        std::string eq = cell_label(kind, n, l) + " = " + cell_label(kind, n, c.l);
                        if (c.lower.step)
                            iv.lower_step = t.steps.size(), t.steps.push_back({"rule 3", eq, {*c.lower.step}});
                        if (c.upper && c.upper->step)
                            iv.upper_step = t.steps.size(), t.steps.push_back({"rule 3", eq, {*c.upper->step}});
                    }
                    t.intervals.push_back(std::move(iv));
                }
            }
        }
        return t;
    }

private:
    using Key = std::tuple<InvariantKind, long, long>;

    Key key(InvariantKind kind, long n, long l) const
    {
        if (structural_ && n - l < l)
            l = n - l;
        return {kind, n, l};
    }

    std::size_t add_cell(InvariantKind kind, long n, long l)
    {
        cells_.push_back({kind, n, l, {ExactRadical(), std::nullopt}, std::nullopt});
        return cells_.size() - 1;
    }

    bool in_grid(long n, long l) const { return n >= 2 && n <= n_max_ && l >= 1 && l < n; }

    /* gamma_{n,0} = gamma_{n,n} = 1 by definition */
    bool trivial(long n, long l) const { return l == 0 || l == n; }

    std::size_t trivial_step(InvariantKind kind, long n, long l)
    {
        Key k{kind, n, l};
        auto it = trivial_steps_.find(k);
        if (it != trivial_steps_.end())
            return it->second;
        steps_.push_back({"definition", cell_label(kind, n, l) + " = 1", {}});
        trivial_steps_[k] = steps_.size() - 1;
        return steps_.size() - 1;
    }

    std::optional<Premise> upper(InvariantKind kind, long n, long l)
    {
        if (trivial(n, l))
            return Premise{ExactRadical(1), trivial_step(kind, n, l), 0.0};
        if (!in_grid(n, l))
            return std::nullopt;
        Cell const& c = cells_[index_.at(key(kind, n, l))];
        if (!c.upper)
            return std::nullopt;
        return Premise{c.upper->value, c.upper->step, radical_log(c.upper->value)};
    }

    std::optional<Premise> lower(InvariantKind kind, long n, long l)
    {
        if (trivial(n, l))
            return Premise{ExactRadical(1), trivial_step(kind, n, l), 0.0};
        if (!in_grid(n, l))
            return std::nullopt;
        Cell const& c = cells_[index_.at(key(kind, n, l))];
        if (c.lower.value.is_zero())
            return std::nullopt;
        return Premise{c.lower.value, c.lower.step, radical_log(c.lower.value)};
    }

    std::size_t record(std::string rule, std::string text, std::vector<std::optional<std::size_t>> const& premises)
    {
        BoundStep s{std::move(rule), std::move(text), {}};
        for (auto const& p : premises)
            if (p)
                s.premises.push_back(*p);
        steps_.push_back(std::move(s));
        return steps_.size() - 1;
    }

    /* make() builds the candidate; est is its log, used to skip hopeless ones */
    template <class Make>
    void raise_lower(InvariantKind kind, long n, long l, double est, Make&& make, std::string const& rule,
                     std::string text, std::vector<std::optional<std::size_t>> const& premises)
    {
        if (!in_grid(n, l))
            return;
        Cell& c = cells_[index_.at(key(kind, n, l))];
        if (!c.lower.value.is_zero() && clearly_no_gain(est, c.lower.value, true))
            return;
        ExactRadical v = make();
        if (oversized(v)) {
            v = ExactRadical(radical_round_down(v, kRoundingDigits));
            text += " (outward-rounded)";
        }
        if (!(v > c.lower.value))
            return;
        c.lower = {v, record(rule, std::move(text), premises)};
        changed_ = true;
        check(c);
    }

    template <class Make>
    void lower_upper(InvariantKind kind, long n, long l, double est, Make&& make, std::string const& rule,
                     std::string text, std::vector<std::optional<std::size_t>> const& premises)
    {
        if (!in_grid(n, l))
            return;
        Cell& c = cells_[index_.at(key(kind, n, l))];
        if (c.upper && clearly_no_gain(est, c.upper->value, false))
            return;
        ExactRadical v = make();
        if (oversized(v)) {
            v = ExactRadical(radical_round_up(v, kRoundingDigits));
            text += " (outward-rounded)";
        }
        if (c.upper && !(v < c.upper->value))
            return;
        c.upper = Endpoint{v, record(rule, std::move(text), premises)};
        changed_ = true;
        check(c);
    }

    void check(Cell const& c)
    {
        if (!c.upper || !(c.lower.value > c.upper->value))
            return;
        BoundTable t = table();
        std::ostringstream os;
        os << "inconsistent bounds for " << cell_label(c.kind, c.n, c.l) << ": lower "
           << c.lower.value.to_string() << " exceeds upper " << c.upper->value.to_string() << "\nlower chain:";
        for (auto const* s : t.provenance(c.lower.step))
            os << "\n  [" << s->rule << "] " << s->statement;
        os << "\nupper chain:";
        for (auto const* s : t.provenance(c.upper->step))
            os << "\n  [" << s->rule << "] " << s->statement;
        throw InconsistentBounds(os.str());
    }

    /* gamma'_{n,l} <= gamma_{n,l} <= gamma_{n,1}^l */
    void rule2()
    {
        for (long n = 2; n <= n_max_; ++n) {
            for (long l = 1; l < n; ++l) {
                std::string gp = cell_label(B, n, l), g = cell_label(R, n, l), g1 = cell_label(R, n, 1);
                if (auto u = upper(R, n, l))
                    lower_upper(B, n, l, u->log, [&] { return u->value; }, "rule 2", gp + " <= " + g, {u->step});
                if (auto lo = lower(B, n, l))
                    raise_lower(R, n, l, lo->log, [&] { return lo->value; }, "rule 2", g + " >= " + gp, {lo->step});
                if (l == 1)
                    continue;
                if (auto u = upper(R, n, 1))
                    lower_upper(R, n, l, l * u->log, [&] { return radical_pow(u->value, l); }, "rule 2",
                                g + " <= " + g1 + "^" + std::to_string(l), {u->step});
                if (auto lo = lower(R, n, l))
                    raise_lower(R, n, 1, lo->log / l, [&] { return radical_pow(lo->value, 1, l); }, "rule 2",
                                g1 + " >= " + g + "^(1/" + std::to_string(l) + ")", {lo->step});
            }
        }
    }

    /* gamma_{n,l} <= gamma_{h,l} gamma_{n,h}^(l/h) for l < h < n */
    void rule4()
    {
        for (long n = 3; n <= n_max_; ++n) {
            for (long l = 1; l < n; ++l) {
                for (long h = l + 1; h < n; ++h) {
                    std::string gnl = cell_label(R, n, l), ghl = cell_label(R, h, l), gnh = cell_label(R, n, h);
                    std::string e = frac(l, h);
                    double lh = static_cast<double>(l) / static_cast<double>(h);
                    bool self = key(R, n, h) == key(R, n, l);
                    auto u_hl = upper(R, h, l);
                    auto u_nh = upper(R, n, h);
                    if (self) {
                        if (u_hl)
                            lower_upper(R, n, l, u_hl->log * static_cast<double>(h) / static_cast<double>(h - l),
                                        [&] { return radical_pow(u_hl->value, h, h - l); }, "rule 4",
                                        gnl + " <= " + ghl + " " + gnh + "^(" + e + "), " + gnh + " = " + gnl +
                                            " gives " + gnl + " <= " + ghl + "^(" + frac(h, h - l) + ")",
                                        {u_hl->step});
                    } else if (u_hl && u_nh) {
                        lower_upper(R, n, l, u_hl->log + lh * u_nh->log,
                                    [&] { return u_hl->value * radical_pow(u_nh->value, l, h); }, "rule 4",
                                    gnl + " <= " + ghl + " " + gnh + "^(" + e + ")", {u_hl->step, u_nh->step});
                    }
                    auto lo_nl = lower(R, n, l);
                    if (!lo_nl)
                        continue;
                    if (u_nh)
                        raise_lower(R, h, l, lo_nl->log - lh * u_nh->log,
                                    [&] { return lo_nl->value / radical_pow(u_nh->value, l, h); }, "rule 4",
                                    ghl + " >= " + gnl + " / " + gnh + "^(" + e + ")", {lo_nl->step, u_nh->step});
                    if (u_hl && !self)
                        raise_lower(R, n, h, (lo_nl->log - u_hl->log) / lh,
                                    [&] { return radical_pow(lo_nl->value / u_hl->value, h, l); }, "rule 4",
                                    gnh + " >= (" + gnl + " / " + ghl + ")^(" + frac(h, l) + ")",
                                    {lo_nl->step, u_hl->step});
                }
            }
        }
    }

    /* gamma_{n,l}^n <= gamma_{n-l,l}^(n-l) gamma'_{n,l}^(2l) and
     * gamma'_{n,2l} <= gamma'_{n-l,l}^2, for l <= n/2 */
    void rule5()
    {
        for (long n = 2; n <= n_max_; ++n) {
            for (long l = 1; 2 * l <= n; ++l) {
                long m = n - l;
                auto dn = static_cast<double>(n), dm = static_cast<double>(m), dl2 = static_cast<double>(2 * l);
                std::string g = cell_label(R, n, l), gm = cell_label(R, m, l), gp = cell_label(B, n, l);
                std::string form = g + "^" + std::to_string(n) + " <= " + gm + "^" + std::to_string(m) + " " + gp +
                                   "^" + std::to_string(2 * l);
                auto u_m = upper(R, m, l);
                auto u_p = upper(B, n, l);
                if (u_m && u_p)
                    lower_upper(R, n, l, (dm * u_m->log + dl2 * u_p->log) / dn,
                                [&] {
                                    return radical_pow(radical_pow(u_m->value, m) * radical_pow(u_p->value, 2 * l), 1,
                                                       n);
                                },
                                "rule 5", form, {u_m->step, u_p->step});
                if (auto lo = lower(R, n, l)) {
                    if (u_m)
                        raise_lower(B, n, l, (dn * lo->log - dm * u_m->log) / dl2,
                                    [&] {
                                        return radical_pow(radical_pow(lo->value, n) / radical_pow(u_m->value, m), 1,
                                                           2 * l);
                                    },
                                    "rule 5", form + ", solved for " + gp, {lo->step, u_m->step});
                    if (u_p && m > l)
                        raise_lower(R, m, l, (dn * lo->log - dl2 * u_p->log) / dm,
                                    [&] {
                                        return radical_pow(radical_pow(lo->value, n) / radical_pow(u_p->value, 2 * l),
                                                           1, m);
                                    },
                                    "rule 5", form + ", solved for " + gm, {lo->step, u_p->step});
                }
                if (2 * l == n)
                    continue;
                std::string gp2 = cell_label(B, n, 2 * l), gpm = cell_label(B, m, l);
                if (auto u = upper(B, m, l))
                    lower_upper(B, n, 2 * l, 2 * u->log, [&] { return radical_pow(u->value, 2); }, "rule 5",
                                gp2 + " <= " + gpm + "^2", {u->step});
                if (auto lo = lower(B, n, 2 * l))
                    raise_lower(B, m, l, lo->log / 2, [&] { return radical_pow(lo->value, 1, 2); }, "rule 5",
                                gpm + " >= " + gp2 + "^(1/2)", {lo->step});
            }
        }
    }

    /* gamma'_{n,n/2} = gamma_{n,n/2} */
    void rule6()
    {
        for (long n = 2; n <= n_max_; n += 2) {
            long h = n / 2;
            std::string eq = cell_label(B, n, h) + " = " + cell_label(R, n, h);
            for (auto [from, to] : {std::pair{R, B}, std::pair{B, R}}) {
                if (auto u = upper(from, n, h))
                    lower_upper(to, n, h, u->log, [&] { return u->value; }, "rule 6", eq, {u->step});
                if (auto lo = lower(from, n, h))
                    raise_lower(to, n, h, lo->log, [&] { return lo->value; }, "rule 6", eq, {lo->step});
            }
        }
    }

    /* gamma_{n,l}^(n-2l) <= gamma_{n-l,l}^(n-l) for n - 2l > 0 */
    void rule7()
    {
        for (long n = 3; n <= n_max_; ++n) {
            for (long l = 1; n - 2 * l > 0; ++l) {
                long m = n - l, d = n - 2 * l;
                double ratio = static_cast<double>(m) / static_cast<double>(d);
                std::string g = cell_label(R, n, l), gm = cell_label(R, m, l);
                std::string form = g + "^" + std::to_string(d) + " <= " + gm + "^" + std::to_string(m);
                if (auto u = upper(R, m, l))
                    lower_upper(R, n, l, ratio * u->log, [&] { return radical_pow(u->value, m, d); }, "rule 7", form,
                                {u->step});
                if (auto lo = lower(R, n, l))
                    raise_lower(R, m, l, lo->log / ratio, [&] { return radical_pow(lo->value, d, m); }, "rule 7",
                                form + ", solved for " + gm, {lo->step});
            }
        }
    }

    /* gamma'_{2l+1,1} <= gamma'_{l+1,1}^2 */
    void rule8()
    {
        for (long l = 1; 2 * l + 1 <= n_max_; ++l) {
            std::string big = cell_label(B, 2 * l + 1, 1), small = cell_label(B, l + 1, 1);
            if (auto u = upper(B, l + 1, 1))
                lower_upper(B, 2 * l + 1, 1, 2 * u->log, [&] { return radical_pow(u->value, 2); }, "rule 8",
                            big + " <= " + small + "^2", {u->step});
            if (auto lo = lower(B, 2 * l + 1, 1))
                raise_lower(B, l + 1, 1, lo->log / 2, [&] { return radical_pow(lo->value, 1, 2); }, "rule 8",
                            small + " >= " + big + "^(1/2)", {lo->step});
        }
    }

    long n_max_;
    std::set<int> rules_;
    bool structural_ = true;
    std::vector<Cell> cells_;
    std::map<Key, std::size_t> index_;
    std::map<Key, std::size_t> trivial_steps_;
    std::vector<BoundStep> steps_;
    std::size_t passes_ = 0;
    bool changed_ = false;
    bool cap_hit_ = false;
};

}  // namespace

BoundInterval const* BoundTable::find(InvariantKind kind, long n, long l) const
{
    for (auto const& iv : intervals)
        if (iv.kind == kind && iv.n == n && iv.l == l)
            return &iv;
    return nullptr;
}

std::vector<BoundStep const*> BoundTable::provenance(std::optional<std::size_t> step) const
{
    std::vector<BoundStep const*> out;
    if (!step)
        return out;
    std::vector<bool> seen(steps.size(), false);
    auto visit = [&](auto&& self, std::size_t s) -> void {
        if (seen[s])
            return;
        seen[s] = true;
        for (auto p : steps[s].premises)
            self(self, p);
        out.push_back(&steps[s]);
    };
    visit(visit, *step);
    return out;
}

std::vector<BoundSeed> known_fact_seeds(long n_max)
{
    std::vector<BoundSeed> out;
    for (auto const& f : known_facts())
        if (f.n <= n_max)
            out.push_back({f.kind, f.n, f.l, f.value, f.value, "known value" + (f.lattice.empty() ? "" : ", " + f.lattice)});
    return out;
}

std::vector<BoundSeed> lattice_seed_bounds(long n_max)
{
    std::vector<BoundSeed> out;
    for (long n = 2; n <= n_max; ++n)
        for (long l = 1; l < n; ++l)
            for (auto kind : {R, B})
                out.push_back({kind, n, l, ExactRadical(1), std::nullopt, "Z^" + std::to_string(n)});

    SearchOptions opts;
    opts.escalate = false;
    for (long n = 3; n <= std::min<long>(8, n_max); ++n) {
        LinearCode code = parity_check_code(n, 2);
        IntegralLattice lattice = construction_a(code);
        std::string name = "D" + std::to_string(n);
        for (std::size_t l = 1; l <= 2; ++l) {
            SearchCertificate cert = d_l_search(code, l, opts);
            out.push_back({R, n, static_cast<long>(l), gamma_nl(lattice, cert), std::nullopt, name});
            out.push_back({B, n, static_cast<long>(l), gamma_prime_nl(code, l, opts).value, std::nullopt, name});
        }
    }
    if (n_max >= 8) {
        LinearCode code = reed_muller_code(1, 3);
        IntegralLattice lattice = construction_a(code);
        for (std::size_t l = 1; l <= 2; ++l) {
            SearchCertificate cert = d_l_search(code, l, opts);
            out.push_back({R, 8, static_cast<long>(l), gamma_nl(lattice, cert), std::nullopt, "Lambda_R(1,3)"});
            out.push_back({B, 8, static_cast<long>(l), gamma_prime_nl(code, l, opts).value, std::nullopt,
                           "Lambda_R(1,3)"});
        }
    }
    return out;
}

std::vector<BoundSeed> default_seeds(long n_max)
{
    std::vector<BoundSeed> out = known_fact_seeds(n_max);
    auto lattices = lattice_seed_bounds(n_max);
    out.insert(out.end(), lattices.begin(), lattices.end());
    return out;
}

BoundTable propagate_bounds(long n_max, std::vector<BoundSeed> const& seeds, std::set<int> const& rules,
                            std::size_t pass_cap)
{
    if (n_max < 2)
        throw InvalidArgument("n_max must be at least 2");
    for (int r : rules)
        if (r < 2 || r > 8)
            throw InvalidArgument("unknown rule " + std::to_string(r) + " (rules are 2..8)");
    Engine engine(n_max, rules);
    for (auto const& s : seeds)
        engine.seed(s);
    engine.run(pass_cap);
    return engine.table();
}

}  // namespace rankin
