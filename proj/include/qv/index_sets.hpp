#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace qv {

// value together with the (i, j) that produced it
struct IndexEntry {
    int value, i, j;
};

struct IndexSets {
    int k = 0;
    std::vector<IndexEntry> S1, S2, S3, S4, T1, T2, T3, T4;
    // diagonal members, keyed by value with the generating i
    std::map<int, int> S3d, S4d, T3d, T4d;

    static std::set<int> values(const std::vector<IndexEntry>& v) {
        std::set<int> s;
        for (auto& e : v) s.insert(e.value);
        return s;
    }
    std::set<int> S4prime() const {
        std::set<int> s;
        for (int i = 1; i <= k - 1; ++i) s.insert(k * (k - 1) + i);
        return s;
    }
    std::set<int> S4second() const {
        std::set<int> s;
        for (int x : values(S4))
            if (!S4prime().count(x)) s.insert(x);
        return s;
    }
};

inline IndexSets build_index_sets(int k) {
    IndexSets r;
    r.k = k;
    for (int j = 1; j <= k / 2; ++j)
        for (int i = j; i <= k - j; ++i) r.S1.push_back({i * (i + 1) - j + 1, i, j});
    for (int j = 0; j <= (k - 1) / 2; ++j)
        for (int i = j; i <= k - j - 1; ++i) r.S2.push_back({(i + 1) * (i + 1) - j, i, j});
    for (int i = k / 2 + 1; i <= k - 1; ++i)
        for (int j = k - i + 1; j <= i; ++j) r.S3.push_back({i * (i + 1) - j + 1, i, j});
    for (int i = (k + 1) / 2; i <= k - 1; ++i)
        for (int j = k - i; j <= i; ++j) r.S4.push_back({(i + 1) * (i + 1) - j, i, j});

    for (int j = 1; j <= (k - 1) / 2; ++j)
        for (int i = j; i <= k - j - 1; ++i) r.T1.push_back({i * (i + 1) - j + 1, i, j});
    for (int j = 0; j <= (k - 1) / 2; ++j)
        for (int i = j; i <= k - j - 2; ++i) r.T2.push_back({(i + 1) * (i + 1) - j, i, j});
    for (int i = (k + 1) / 2; i <= k - 1; ++i)
        for (int j = k - i; j <= i; ++j) r.T3.push_back({i * (i + 1) - j + 1, i, j});
    for (int i = k / 2; i <= k - 2; ++i)
        for (int j = k - i - 1; j <= i; ++j) r.T4.push_back({(i + 1) * (i + 1) - j, i, j});

    for (int i = k / 2 + 1; i <= k - 1; ++i) r.S3d[i * i + 1] = i;
    for (int i = (k + 1) / 2; i <= k - 1; ++i) r.S4d[(i + 1) * (i + 1) - i] = i;
    for (int i = (k + 1) / 2; i <= k - 1; ++i) r.T3d[i * i + 1] = i;
    for (int i = k / 2; i <= k - 2; ++i) r.T4d[(i + 1) * (i + 1) - i] = i;
    return r;
}

struct PartitionReport {
    bool distinct_values = true;  // (i): distinct pairs give distinct values inside each family
    bool disjoint = true;         // (ii)
    bool cardinality = true;      // (iii)
    bool covers = true;           // union is {1..N}
    bool ok() const { return distinct_values && disjoint && cardinality && covers; }
};

inline PartitionReport check_partition(const std::vector<const std::vector<IndexEntry>*>& fams, int N) {
    PartitionReport r;
    std::set<int> all;
    size_t total = 0;
    for (auto* f : fams) {
        auto vals = IndexSets::values(*f);
        if (vals.size() != f->size()) r.distinct_values = false;
        for (int x : vals)
            if (!all.insert(x).second) r.disjoint = false;
        total += f->size();
    }
    if (static_cast<int>(total) != N) r.cardinality = false;
    std::set<int> expect;
    for (int i = 1; i <= N; ++i) expect.insert(i);
    if (all != expect) r.covers = false;
    return r;
}

inline PartitionReport check_S_partition(const IndexSets& s) {
    return check_partition({&s.S1, &s.S2, &s.S3, &s.S4}, s.k * s.k);
}
inline PartitionReport check_T_partition(const IndexSets& s) {
    return check_partition({&s.T1, &s.T2, &s.T3, &s.T4}, s.k * (s.k - 1));
}

inline std::set<int> set_minus(const std::set<int>& a, const std::set<int>& b) {
    std::set<int> r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.end()));
    return r;
}
inline std::set<int> set_meet(const std::set<int>& a, const std::set<int>& b) {
    std::set<int> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.end()));
    return r;
}
inline std::set<int> set_join(const std::set<int>& a, const std::set<int>& b) {
    std::set<int> r = a;
    r.insert(b.begin(), b.end());
    return r;
}

// the intersection identities relating the S and T families, plus the decomposition of T3 and T4
struct IntersectionReport {
    bool t3s1 = true, t4s2 = true, t3_split = true, t4_split = true, union_identity = true;
    bool ok() const { return t3s1 && t4s2 && t3_split && t4_split && union_identity; }
};

inline IntersectionReport check_intersections(const IndexSets& s) {
    int k = s.k;
    IntersectionReport r;
    auto S1 = IndexSets::values(s.S1), S2 = IndexSets::values(s.S2), S3 = IndexSets::values(s.S3);
    auto T1 = IndexSets::values(s.T1), T2 = IndexSets::values(s.T2), T3 = IndexSets::values(s.T3),
         T4 = IndexSets::values(s.T4);
    std::set<int> rhs1, rhs2;
    for (int j = 1; j <= k / 2; ++j) rhs1.insert((k - j) * (k - j + 1) - j + 1);
    for (int j = 1; j <= (k - 1) / 2; ++j) rhs2.insert((k - j) * (k - j) - j);
    auto m1 = set_meet(T3, S1);
    r.t3s1 = m1 == set_minus(S1, T1) && m1 == rhs1;
    auto m2 = set_meet(T4, S2);
    r.t4s2 = m2 == set_minus(S2, set_join(T2, {k * k})) && m2 == rhs2;
    auto S4s = s.S4second();
    r.t3_split = set_meet(S3, m1).empty() && T3 == set_join(S3, m1);
    r.t4_split = set_meet(S4s, m2).empty() && T4 == set_join(S4s, m2);
    std::set<int> lhs = set_join(set_join(S1, set_minus(S2, {k * k})), set_join(S3, S4s));
    std::set<int> tall = set_join(set_join(T1, T2), set_join(T3, T4));
    size_t sz = S1.size() + set_minus(S2, {k * k}).size() + S3.size() + S4s.size();
    r.union_identity = lhs == tall && sz == lhs.size();
    return r;
}

}  // namespace qv
