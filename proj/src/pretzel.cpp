#include "homocyl/pretzel.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace homocyl {

namespace {

const std::vector<std::string> kTVar{"t"};

bool odd(long long x) { return x % 2 != 0; }

void require_odd(std::initializer_list<long long> xs) {
    for (long long x : xs)
        if (!odd(x)) throw std::domain_error("pretzel parameters must all be odd");
}

void require_census_bound(std::initializer_list<long long> xs) {
    for (long long x : xs)
        if (x < -10000 || x > 10000)
            throw std::domain_error("census bounds limited to |x| <= 10000");
}

template <typename T>
std::vector<long long> magnitude_key(const T& k);

template <>
std::vector<long long> magnitude_key<Pretzel3>(const Pretzel3& k) {
    std::vector<long long> neg, pos;
    for (long long x : {k.p, k.q, k.r}) (x < 0 ? neg : pos).push_back(x < 0 ? -x : x);
    std::sort(neg.begin(), neg.end());
    std::sort(pos.begin(), pos.end());
    neg.insert(neg.end(), pos.begin(), pos.end());
    return neg;
}

template <>
std::vector<long long> magnitude_key<Pretzel5>(const Pretzel5& k) {
    std::vector<long long> neg, pos;
    for (long long x : {k.p, k.q, k.r, k.s, k.u}) (x < 0 ? neg : pos).push_back(x < 0 ? -x : x);
    std::sort(neg.begin(), neg.end());
    std::sort(pos.begin(), pos.end());
    neg.insert(neg.end(), pos.begin(), pos.end());
    return neg;
}

long long unit_sign3(const Pretzel3& k) {
    return (k.p * k.q + k.q * k.r + k.r * k.p + 1) / 4;
}

long long e2e4_plus1(const Pretzel5& k) {
    long long v[5] = {k.p, k.q, k.r, k.s, k.u};
    long long e2 = 0, e4 = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) e2 += v[i] * v[j];
    for (int i = 0; i < 5; ++i) {
        long long prod = 1;
        for (int j = 0; j < 5; ++j)
            if (j != i) prod *= v[j];
        e4 += prod;
    }
    return e2 + e4 + 1;
}

template <typename T>
std::vector<long long> tuple_of(const T& k);
template <>
std::vector<long long> tuple_of<Pretzel3>(const Pretzel3& k) { return {k.p, k.q, k.r}; }
template <>
std::vector<long long> tuple_of<Pretzel5>(const Pretzel5& k) { return {k.p, k.q, k.r, k.s, k.u}; }

// published census ordering: leading = +1 block first, then -1, each sorted
// by the magnitudes of the negative entries then the positive entries
template <typename T, typename UnitOf>
void sort_census(std::vector<T>& hits, const CensusOptions& opts, UnitOf unit_of) {
    if (opts.published_order) {
        std::stable_sort(hits.begin(), hits.end(), [&](const T& a, const T& b) {
            long long ua = unit_of(a), ub = unit_of(b);
            if (ua != ub) return ua > ub;  // +1 before -1
            return magnitude_key(a) < magnitude_key(b);
        });
    } else {
        std::stable_sort(hits.begin(), hits.end(), [](const T& a, const T& b) {
            return tuple_of(a) < tuple_of(b);
        });
    }
}

long long first_odd_at_least(long long x) { return odd(x) ? x : x + 1; }

// partition [lo, hi] (odd steps) across worker threads; each worker appends
// to its own bucket, the final sort makes the merge deterministic
template <typename Fn>
void for_odd_parallel(long long lo, long long hi, int threads, Fn body) {
    lo = first_odd_at_least(lo);
    if (lo > hi) return;
    if (threads <= 1) {
        for (long long x = lo; x <= hi; x += 2) body(x, 0);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([=] {
            for (long long x = lo + 2 * w; x <= hi; x += 2 * threads) body(x, w);
        });
    for (auto& t : pool) t.join();
}

}  // namespace

std::string Pretzel3::str() const {
    std::ostringstream os;
    os << '{' << p << ',' << q << ',' << r << '}';
    return os.str();
}

std::string Pretzel5::str() const {
    std::ostringstream os;
    os << '{' << p << ',' << q << ',' << r << ',' << s << ',' << u << '}';
    return os.str();
}

NormalizedAlexander alexander3(const Pretzel3& k) {
    require_odd({k.p, k.q, k.r});
    Rational e2 = Rational(k.p) * k.q + Rational(k.q) * k.r + Rational(k.r) * k.p;
    Laurent delta(kTVar);
    delta.add_term({2}, (e2 + 1) / 4);
    delta.add_term({1}, (-2 * e2 + 2) / 4);
    delta.add_term({0}, (e2 + 1) / 4);
    if (!delta.is_integral())
        throw std::logic_error("internal bug: pretzel Alexander polynomial not integral");
    auto norm = normalize_alexander(delta);
    if (!norm) throw std::domain_error("degenerate pretzel Alexander polynomial");
    return *norm;
}

Rational leading5(const Pretzel5& k) {
    require_odd({k.p, k.q, k.r, k.s, k.u});
    Rational v[5] = {Rational(k.p), Rational(k.q), Rational(k.r), Rational(k.s), Rational(k.u)};
    Rational e2 = 0, e4 = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) e2 += v[i] * v[j];
    for (int i = 0; i < 5; ++i) {
        Rational prod = 1;
        for (int j = 0; j < 5; ++j)
            if (j != i) prod *= v[j];
        e4 += prod;
    }
    Rational lead = (e2 + e4 + 1) / 16;
    if (!is_integer(lead))
        throw std::logic_error("internal bug: pretzel leading coefficient not integral");
    return lead;
}

SeifertMatrix pretzel_seifert(const Pretzel3& k) {
    require_odd({k.p, k.q, k.r});
    RatMatrix s(2, 2);
    s.at(0, 0) = Rational(k.p + k.q) / 2;
    s.at(0, 1) = Rational(k.q + 1) / 2;
    s.at(1, 0) = Rational(k.q - 1) / 2;
    s.at(1, 1) = Rational(k.q + k.r) / 2;
    return SeifertMatrix(1, 1, std::move(s));
}

SeifertMatrix pretzel_seifert(const Pretzel5& k) {
    require_odd({k.p, k.q, k.r, k.s, k.u});
    long long strand[5] = {k.p, k.q, k.r, k.s, k.u};
    RatMatrix s(4, 4);
    for (int i = 0; i < 4; ++i) s.at(i, i) = Rational(strand[i] + strand[i + 1]) / 2;
    for (int i = 0; i < 3; ++i) {
        s.at(i, i + 1) = Rational(strand[i + 1] + 1) / 2;
        s.at(i + 1, i) = Rational(strand[i + 1] - 1) / 2;
    }
    return SeifertMatrix(2, 1, std::move(s));
}

std::vector<Pretzel3> census3(long long p_min, long long p_max, long long q_min,
                              long long qr_max, const CensusOptions& opts) {
    require_census_bound({p_min, p_max, q_min, qr_max});
    std::vector<Pretzel3> hits;
    for (long long p = first_odd_at_least(p_min); p <= p_max; p += 2)
        for (long long q = first_odd_at_least(q_min); q <= qr_max; q += 2)
            for (long long r = q; r <= qr_max; r += 2) {
                long long e2 = p * q + q * r + r * p;
                if (e2 == 3 || e2 == -5) hits.push_back(Pretzel3{p, q, r});
            }
    sort_census(hits, opts, unit_sign3);
    return hits;
}

namespace {

// For fixed (x1,x2,x3,s) the fiberedness condition is linear in the last
// strand u: (e2+e4+1)(x,u) = (E+1) + u*F with
//   E = a2 + (a1+a3)s,  F = (a1+a3) + (1+a2)s
// in the elementary symmetric functions a_i of (x1,x2,x3).  Solve for u.
template <typename Emit>
void solve_last_strand(long long a1, long long a2, long long a3, long long s, long long u_lo,
                       long long u_hi, Emit emit) {
    long long E = a2 + (a1 + a3) * s;
    long long F = (a1 + a3) + (1 + a2) * s;
    if (F == 0) {
        if (E == 15 || E == -17)
            for (long long u = first_odd_at_least(u_lo); u <= u_hi; u += 2) emit(u);
        return;
    }
    long long abs_f = F < 0 ? -F : F;
    for (long long target : {15LL, -17LL}) {
        long long rhs = target - E;
        // u = rhs/F must be odd and in [u_lo, u_hi] > 0; cheap window test
        // keeps the division off the hot path
        if ((rhs > 0) != (F > 0) || rhs == 0) continue;
        long long abs_r = rhs < 0 ? -rhs : rhs;
        if (abs_r < u_lo * abs_f || abs_r > u_hi * abs_f) continue;
        if (abs_r % abs_f != 0) continue;
        long long u = rhs / F;
        if (odd(u)) emit(u);
    }
}

}  // namespace

std::vector<Pretzel5> census5_one_negative(long long p_min, long long p_max, long long q_min,
                                           long long q_max, const CensusOptions& opts) {
    require_census_bound({p_min, p_max, q_min, q_max});
    int threads = std::max(1, opts.threads);
    std::vector<std::vector<Pretzel5>> buckets(static_cast<std::size_t>(threads));
    for_odd_parallel(p_min, p_max, threads, [&](long long p, int w) {
        auto& out = buckets[static_cast<std::size_t>(w)];
        for (long long q = first_odd_at_least(q_min); q <= q_max; q += 2)
            for (long long r = q; r <= q_max; r += 2) {
                long long a1 = p + q + r, a2 = p * q + p * r + q * r, a3 = p * q * r;
                for (long long s = r; s <= q_max; s += 2)
                    solve_last_strand(a1, a2, a3, s, s, q_max, [&](long long u) {
                        out.push_back(Pretzel5{p, q, r, s, u});
                    });
            }
    });
    std::vector<Pretzel5> hits;
    for (auto& b : buckets) hits.insert(hits.end(), b.begin(), b.end());
    sort_census(hits, opts, e2e4_plus1);
    return hits;
}

std::vector<Pretzel5> census5_two_negative(long long pq_min, long long pq_max, long long r_min,
                                           long long r_max, const CensusOptions& opts) {
    require_census_bound({pq_min, pq_max, r_min, r_max});
    int threads = std::max(1, opts.threads);
    std::vector<std::vector<Pretzel5>> buckets(static_cast<std::size_t>(threads));
    for_odd_parallel(pq_min, pq_max, threads, [&](long long p, int w) {
        auto& out = buckets[static_cast<std::size_t>(w)];
        for (long long q = p; q <= pq_max; q += 2)
            for (long long r = first_odd_at_least(r_min); r <= r_max; r += 2) {
                long long a1 = p + q + r, a2 = p * q + p * r + q * r, a3 = p * q * r;
                for (long long s = r; s <= r_max; s += 2)
                    solve_last_strand(a1, a2, a3, s, s, r_max, [&](long long u) {
                        out.push_back(Pretzel5{p, q, r, s, u});
                    });
            }
    });
    std::vector<Pretzel5> hits;
    for (auto& b : buckets) hits.insert(hits.end(), b.begin(), b.end());
    sort_census(hits, opts, e2e4_plus1);
    return hits;
}

}  // namespace homocyl
