#pragma once

// Permutation and sequence analytics: longest increasing subsequences, circular
// monotone subsequences, the two-part circular measure l2, alternation patterns,
// Davenport-Schinzel maxima, and Ackermann numbers with their inverse.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "rational.hpp"
#include "rng.hpp"

namespace untangle::sequences {

using Perm = std::vector<int>; // values 1..N, each exactly once

inline void require_permutation(const Perm& s) {
    std::vector<bool> seen(s.size() + 1, false);
    for (int v : s) {
        if (v < 1 || v > static_cast<int>(s.size()) || seen[v])
            throw std::invalid_argument("not a permutation of 1..N");
        seen[v] = true;
    }
}

// longest strictly increasing subsequence, patience piles
inline int lis(const std::vector<int>& s) {
    std::vector<int> tails;
    for (int x : s) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end()) tails.push_back(x);
        else *it = x;
    }
    return static_cast<int>(tails.size());
}

inline std::vector<int> negated(const std::vector<int>& s) {
    std::vector<int> t(s.size());
    std::transform(s.begin(), s.end(), t.begin(), [](int v) { return -v; });
    return t;
}

inline int lds(const std::vector<int>& s) { return lis(negated(s)); }

// out[i] = lis of the first i entries
inline std::vector<int> prefix_lis(const std::vector<int>& s) {
    std::vector<int> tails, out;
    out.reserve(s.size() + 1);
    out.push_back(0);
    for (int x : s) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end()) tails.push_back(x);
        else *it = x;
        out.push_back(static_cast<int>(tails.size()));
    }
    return out;
}

// max over all 2N linearizations (shift, then optionally reverse) of lis
inline int longest_circular_monotone(const std::vector<int>& s) {
    int n = static_cast<int>(s.size());
    if (n == 0) return 0;
    int best = 0;
    std::vector<int> rot(n);
    for (int r = 0; r < n; ++r) {
        for (int i = 0; i < n; ++i) rot[i] = s[(r + i) % n];
        best = std::max({best, lis(rot), lds(rot)});
    }
    return best;
}

struct SplitScore {
    int i = 1, j = 1;  // cut positions, 1-based, i < j; parts are read from the cuts
    int value = 0;
};

// Maximum over circular splits of the two-part monotone score: cut the circular
// sequence at positions i and j, read both arcs linearly from their cut, and add
// the larger of (lis, lds) for each arc.
inline SplitScore l2_with_split(const Perm& s) {
    int n = static_cast<int>(s.size());
    if (n < 2) throw std::invalid_argument("l2 wants N >= 2");
    SplitScore best;
    std::vector<int> rot(n), rev(n);
    for (int r = 0; r < n; ++r) {
        for (int i = 0; i < n; ++i) rot[i] = s[(r + i) % n];
        std::reverse_copy(rot.begin(), rot.end(), rev.begin());
        auto inc_pre = prefix_lis(rot);
        auto dec_pre = prefix_lis(negated(rot));
        auto inc_suf = prefix_lis(negated(rev)); // [n-i] = lis of rot[i..n)
        auto dec_suf = prefix_lis(rev);          // [n-i] = lds of rot[i..n)
        for (int i = 1; i < n; ++i) {            // both arcs nonempty
            int v = std::max(inc_pre[i], dec_pre[i]) + std::max(inc_suf[n - i], dec_suf[n - i]);
            if (v > best.value) {
                int c1 = r + 1, c2 = (r + i) % n + 1;
                best = {std::min(c1, c2), std::max(c1, c2), v};
            }
        }
    }
    return best;
}

inline int l2(const Perm& s) { return l2_with_split(s).value; }

struct CircularSequence {
    std::vector<int> seq; // entries in {1..k}
    bool circular = true;
};

// s blocks of 1 2 ... k
inline CircularSequence block_sequence(int k, int s) {
    if (k < 1 || s < 1) throw std::invalid_argument("block_sequence wants k,s >= 1");
    CircularSequence out;
    out.seq.reserve(static_cast<std::size_t>(k) * s);
    for (int b = 0; b < s; ++b)
        for (int v = 1; v <= k; ++v) out.seq.push_back(v);
    return out;
}

// Longest subsequence alternating between x and y. Equals the number of maximal
// runs of the sequence restricted to {x,y}; cyclically, a split run may be used
// at both ends, adding one more term.
inline int pair_alternation(const std::vector<int>& seq, int x, int y, bool circular) {
    std::vector<int> r;
    for (int c : seq)
        if (c == x || c == y) r.push_back(c);
    if (r.empty()) return 0;
    int runs = 1;
    bool long_run = false;
    int cur = 1;
    for (std::size_t i = 1; i < r.size(); ++i) {
        if (r[i] == r[i - 1]) ++cur;
        else {
            if (cur >= 2) long_run = true;
            ++runs;
            cur = 1;
        }
    }
    if (cur >= 2) long_run = true;
    if (!circular) return runs;
    if (runs >= 2 && r.front() == r.back()) {
        --runs;          // wrap-around merges the first and last runs
        long_run = true; // the merged run has at least two elements
    }
    if (runs <= 1) return 1;
    return runs + (long_run ? 1 : 0);
}

// true iff some pair of distinct symbols alternates x y x y ... for p+2 terms
inline bool contains_alternation(const CircularSequence& S, int p) {
    if (p < 1) throw std::invalid_argument("contains_alternation wants p >= 1");
    std::set<int> symbols(S.seq.begin(), S.seq.end());
    for (auto it = symbols.begin(); it != symbols.end(); ++it)
        for (auto jt = std::next(it); jt != symbols.end(); ++jt)
            if (pair_alternation(S.seq, *it, *jt, S.circular) >= p + 2) return true;
    return false;
}

struct SearchResult {
    int lower = 0;
    int upper = 0;
    std::uint64_t nodes = 0;
    bool exact() const { return lower == upper; }
};

namespace detail {

struct AltFreeSearch {
    const std::vector<int>& seq;
    bool circular;
    int cap; // pair alternation must stay <= cap
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    int best = 0;
    int loose_upper = 0; // best conceivable value among abandoned branches
    std::vector<int> chosen;

    bool feasible_with(int pos) {
        chosen.push_back(pos);
        std::vector<int> sub;
        sub.reserve(chosen.size());
        for (int p : chosen) sub.push_back(seq[p]);
        int c = seq[pos];
        std::set<int> others(sub.begin(), sub.end());
        bool ok = true;
        for (int y : others) {
            if (y == c) continue;
            if (pair_alternation(sub, c, y, circular) > cap) { ok = false; break; }
        }
        chosen.pop_back();
        return ok;
    }

    void dfs(int idx) {
        ++nodes;
        int n = static_cast<int>(seq.size());
        int have = static_cast<int>(chosen.size());
        if (nodes > budget) {
            exhausted = true;
            loose_upper = std::max(loose_upper, have + (n - idx));
            return;
        }
        if (idx == n) {
            best = std::max(best, have);
            return;
        }
        if (have + (n - idx) <= best) return; // cannot beat the incumbent
        if (feasible_with(idx)) {
            chosen.push_back(idx);
            dfs(idx + 1);
            chosen.pop_back();
        }
        dfs(idx + 1);
    }
};

} // namespace detail

// Exact maximum length of a subsequence avoiding every (p+2)-term alternation,
// by branch and bound; alternation-free-ness is monotone under deletion, so a
// failed extension prunes the whole branch.
inline SearchResult max_alternation_free_subsequence(const CircularSequence& S, int p,
                                                     std::uint64_t budget = 50'000'000) {
    if (p < 1) throw std::invalid_argument("max_alternation_free_subsequence wants p >= 1");
    detail::AltFreeSearch search{S.seq, S.circular, p + 1, budget};
    search.dfs(0);
    SearchResult res;
    res.lower = search.best;
    res.upper = search.exhausted ? std::max(search.best, search.loose_upper) : search.best;
    res.nodes = search.nodes;
    return res;
}

namespace detail {

struct AckResult {
    bool exceeds; // true: the true value is > cap (value field then meaningless)
    Int value;
};

// A_1(n) = 2n, A_k(1) = 2, A_k(n) = A_{k-1}(A_k(n-1)); computed bottom-up per
// level, stopping as soon as the value is certified to exceed cap (the hierarchy
// is monotone in n, so later entries only grow).
inline AckResult ackermann_capped(int k, const Int& n, const Int& cap) {
    if (k < 1 || n < 1) throw std::invalid_argument("ackermann wants k,n >= 1");
    if (k == 1) {
        Int v = 2 * n;
        return {v > cap, v};
    }
    Int val = 2; // A_k(1)
    for (Int m = 2; m <= n; ++m) {
        AckResult inner = ackermann_capped(k - 1, val, cap);
        if (inner.exceeds) return {true, 0};
        val = inner.value;
    }
    return {val > cap, val};
}

} // namespace detail

struct AckValue {
    bool exceeds_bound = false;      // result would not fit the configured magnitude
    std::uint64_t value = 0;         // valid only when !exceeds_bound
};

inline AckValue ackermann(int k, int n) {
    static const Int cap = (Int(1) << 64) - 1;
    detail::AckResult r = detail::ackermann_capped(k, Int(n), cap);
    if (r.exceeds) return {true, 0};
    return {false, r.value.convert_to<std::uint64_t>()};
}

// min t >= 1 with A(t) = A_t(t) >= n; evaluation is capped at n itself, so an
// "exceeds" outcome certifies the threshold has been reached
inline int alpha(const Int& n) {
    if (n < 1) throw std::invalid_argument("alpha wants n >= 1");
    for (int t = 1;; ++t) {
        detail::AckResult r = detail::ackermann_capped(t, Int(t), n);
        if (r.exceeds || r.value >= n) return t;
    }
}

inline Perm random_permutation(int N, std::uint64_t seed) {
    if (N < 1) throw std::invalid_argument("random_permutation wants N >= 1");
    Perm p(N);
    std::iota(p.begin(), p.end(), 1);
    Rng rng(seed);
    rng.shuffle(p);
    return p;
}

namespace detail {

// Per-pair state of a growing Davenport-Schinzel sequence: number of maximal
// runs in the restriction to the pair, and which symbol of the pair came last.
struct DsSearch {
    int k, cap; // runs per pair must stay <= cap
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::map<std::vector<std::uint8_t>, int> memo;

    int pair_index(int a, int b) const { // a < b
        return a * k - a * (a + 1) / 2 + (b - a - 1);
    }

    // state layout: [last+1, introduced, then per pair (runs, last_flag)]
    int extend(std::vector<std::uint8_t>& st) {
        ++nodes;
        if (nodes > budget) { exhausted = true; return 0; }
        auto it = memo.find(st);
        if (it != memo.end()) return it->second;
        int last = static_cast<int>(st[0]) - 1;
        int introduced = st[1];
        int best = 0;
        int limit = std::min(introduced, k - 1); // existing symbols plus one fresh
        for (int c = 0; c <= limit; ++c) {
            if (c == last) continue;
            std::vector<std::uint8_t> next = st;
            bool ok = true;
            if (c < introduced) {
                for (int y = 0; y < introduced && ok; ++y) {
                    if (y == c) continue;
                    int pi = 2 + 2 * pair_index(std::min(c, y), std::max(c, y));
                    int cflag = (c < y) ? 1 : 2;
                    if (next[pi + 1] != cflag) { // 0 none, 1 min symbol, 2 max symbol
                        int runs = next[pi] + 1;
                        if (runs > cap) { ok = false; break; }
                        next[pi] = static_cast<std::uint8_t>(runs);
                        next[pi + 1] = static_cast<std::uint8_t>(cflag);
                    }
                }
            } else {
                // fresh symbol: each pair with an already-seen partner has one run
                // of the partner so far, and the new symbol appends a second
                for (int y = 0; y < introduced && ok; ++y) {
                    int pi = 2 + 2 * pair_index(std::min(c, y), std::max(c, y));
                    if (2 > cap) { ok = false; break; }
                    next[pi] = 2;
                    next[pi + 1] = static_cast<std::uint8_t>((c < y) ? 1 : 2);
                }
                next[1] = static_cast<std::uint8_t>(introduced + 1);
            }
            if (!ok) continue;
            next[0] = static_cast<std::uint8_t>(c + 1);
            best = std::max(best, 1 + extend(next));
            if (exhausted) return best;
        }
        memo.emplace(st, best);
        return best;
    }
};

} // namespace detail

// Exact lambda_p(k): maximum length over alphabet k with no immediate repeats
// and no alternating subsequence of length p+2.
inline SearchResult ds_max_length(int k, int p, std::uint64_t budget = 100'000'000) {
    if (k < 1 || p < 1) throw std::invalid_argument("ds_max_length wants k,p >= 1");
    if (k == 1) return {1, 1, 1};
    detail::DsSearch search{k, p + 1, budget};
    int pairs = k * (k - 1) / 2;
    std::vector<std::uint8_t> st(2 + 2 * pairs, 0);
    st[0] = 0; // no last symbol yet
    st[1] = 0; // nothing introduced
    int got = search.extend(st);
    SearchResult res;
    res.nodes = search.nodes;
    res.lower = got;
    // every change of symbol adds a run to at least one pair, and each of the
    // C(k,2) pairs tolerates at most p+1 runs
    int crude = 1 + (p + 1) * pairs;
    res.upper = search.exhausted ? crude : got;
    return res;
}

} // namespace untangle::sequences
