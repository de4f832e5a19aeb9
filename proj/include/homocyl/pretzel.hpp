#pragma once

#include <vector>

#include "homocyl/laurent.hpp"
#include "homocyl/seifert.hpp"

namespace homocyl {

struct Pretzel3 {
    long long p, q, r;
    bool operator==(const Pretzel3& o) const { return p == o.p && q == o.q && r == o.r; }
    std::string str() const;
};

struct Pretzel5 {
    long long p, q, r, s, u;
    bool operator==(const Pretzel5& o) const {
        return p == o.p && q == o.q && r == o.r && s == o.s && u == o.u;
    }
    std::string str() const;
};

// (1/4)((pq+qr+rp)(t^2-2t+1) + t^2+2t+1), verified integral, normalized
NormalizedAlexander alexander3(const Pretzel3& k);

// Leading coefficient of the Alexander polynomial of an odd 5-strand pretzel:
// (e2 + e4 + 1)/16 in the elementary symmetric functions of (p,q,r,s,u).
// Equals det of the genus-2 Seifert matrix below, always an integer.
Rational leading5(const Pretzel5& k);

// standard genus-1 / genus-2 pretzel Seifert matrices (tridiagonal band form)
SeifertMatrix pretzel_seifert(const Pretzel3& k);
SeifertMatrix pretzel_seifert(const Pretzel5& k);

struct CensusOptions {
    bool published_order = true;  // unit +1 block first, then -1; magnitude keys
    int threads = 1;
};

// odd p in [p_min, p_max], odd q <= r in [q_min, qr_max]; homologically
// fibered condition pq+qr+rp in {3, -5}
std::vector<Pretzel3> census3(long long p_min, long long p_max, long long q_min,
                              long long qr_max, const CensusOptions& opts = {});

// odd p in [p_min, p_max] negative, odd q <= r <= s <= u in [q_min, q_max]
std::vector<Pretzel5> census5_one_negative(long long p_min, long long p_max, long long q_min,
                                           long long q_max, const CensusOptions& opts = {});

// odd p <= q in [pq_min, pq_max] negative, odd r <= s <= u in [r_min, r_max]
std::vector<Pretzel5> census5_two_negative(long long pq_min, long long pq_max, long long r_min,
                                           long long r_max, const CensusOptions& opts = {});

}  // namespace homocyl
