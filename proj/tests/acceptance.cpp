#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "qv/suites.hpp"

using namespace qv;

namespace {

struct SuiteRun {
    std::vector<CaseRecord> records;
    double seconds = 0;
};

SuiteRun run_suite(const std::string& name, unsigned long seed) {
    RunConfig cfg;
    cfg.suites = {name};
    cfg.seed = seed;
    auto t0 = std::chrono::steady_clock::now();
    auto res = run(cfg);
    auto t1 = std::chrono::steady_clock::now();
    return {std::move(res.records), std::chrono::duration<double>(t1 - t0).count()};
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

struct Tally {
    int total = 0, pass = 0, other = 0;
    std::string first_bad;
};

Tally tally(const std::vector<CaseRecord>& rs, const std::function<bool(const CaseRecord&)>& pick) {
    Tally t;
    for (auto& r : rs) {
        if (!pick(r)) continue;
        ++t.total;
        if (r.status == Status::Pass)
            ++t.pass;
        else {
            ++t.other;
            if (t.first_bad.empty()) t.first_bad = r.id + " " + status_name(r.status);
        }
    }
    return t;
}

bool has(const std::vector<CaseRecord>& rs, const std::string& id) {
    for (auto& r : rs)
        if (r.id == id) return true;
    return false;
}

std::string records_text(const std::vector<CaseRecord>& rs) {
    std::string s;
    for (auto& r : rs) s += r.to_json(false).dump() + "\n";
    return s;
}

int failures = 0;

void line(int n, bool ok, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string counts(const Tally& t) {
    std::string s = std::to_string(t.pass) + "/" + std::to_string(t.total) + " pass";
    if (!t.first_bad.empty()) s += ", first non-pass: " + t.first_bad;
    return s;
}

std::string secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", s);
    return buf;
}

}  // namespace

int main() {
    const unsigned long seed = 42;
    std::map<std::string, SuiteRun> R;
    for (auto& name : suite_names()) R[name] = run_suite(name, seed);
    auto any = [](const CaseRecord&) { return true; };

    {
        auto& a = R["appendix"];
        auto t = tally(a.records, any);
        bool cover = has(a.records, "F/k=08/L=17") && has(a.records, "H/k=10/l=10") &&
                     has(a.records, "F-recursion/k=07/l=07");
        line(1, t.other == 0 && cover && a.seconds < 60, counts(t) + ", " + secs(a.seconds));
    }
    {
        auto& a = R["index-sets"];
        auto t = tally(a.records, any);
        bool cover = has(a.records, "k=001/S-partition") && has(a.records, "k=050/intersections");
        line(2, t.other == 0 && cover && a.seconds < 60, counts(t) + ", " + secs(a.seconds));
    }
    {
        auto& a = R["fixed-points"];
        auto t = tally(a.records, [](const CaseRecord& r) { return !starts_with(r.id, "search/"); });
        bool cover = has(a.records, "rect/n=25/k=05") && has(a.records, "rect/n=12/k=03") &&
                     has(a.records, "swapped/n=12/k=03");
        line(3, t.other == 0 && cover && a.seconds < 300, counts(t) + " over Q[z], " + secs(a.seconds));
    }
    {
        auto& a = R["kappa"];
        auto t = tally(a.records, [](const CaseRecord& r) { return !starts_with(r.id, "block-product/"); });
        bool cover = has(a.records, "diagonal/rect/n=16/k=04") && has(a.records, "diagonal/swapped/n=12/k=03") &&
                     has(a.records, "diagonal/search/ascending/n=04/k=01") &&
                     has(a.records, "diagonal/search/ascending-swapped/n=04/k=01");
        line(4, t.other == 0 && cover, counts(t));
    }
    {
        auto& a = R["kappa"];
        auto fixed = tally(a.records, [](const CaseRecord& r) { return starts_with(r.id, "block-product/fixed/"); });
        auto orbit = tally(a.records, [](const CaseRecord& r) { return starts_with(r.id, "block-product/orbit/"); });
        line(5, fixed.other == 0 && orbit.other == 0 && orbit.total > 0,
             "fixed points " + counts(fixed) + "; orbit points " + counts(orbit));
    }
    {
        auto tc = tally(R["crossed"].records, any), tg = tally(R["gwa"].records, any);
        auto pairs = tally(R["crossed"].records, [](const CaseRecord& r) {
            return starts_with(r.id, "phi-multiplicative/m=2/");
        });
        line(6, tc.other == 0 && tg.other == 0 && pairs.total >= 100,
             "crossed " + counts(tc) + "; gwa " + counts(tg));
    }
    {
        auto& e = R["endo"];
        auto t = tally(e.records, [](const CaseRecord& r) { return r.status != Status::Skipped; });
        bool cover = has(e.records, "certificate/n0=00/n1=00/eps=0") && has(e.records, "recognition/k=03/eps=1") &&
                     has(e.records, "closure/n0=04/n1=06/eps=0");
        int witnessed = 0, disc = 0;
        bool xc_ok = true;
        for (auto& r : R["endo-crosscheck"].records) {
            if (r.status == Status::Discrepancy) {
                ++disc;
                if (r.witness.contains("t") && r.witness.contains("definitional") && r.witness.contains("closed_form"))
                    ++witnessed;
            } else if (r.status != Status::Pass) {
                xc_ok = false;
            }
        }
        xc_ok = xc_ok && witnessed == disc;
        line(7, t.other == 0 && cover && xc_ok,
             "endo " + counts(t) + "; crosscheck " + std::to_string(disc) + " discrepancies, all witnessed");
    }
    {
        auto& f = R["flex"];
        auto t = tally(f.records, any);
        bool cover = has(f.records, "span/calogero-moser/dims=04/frame=0/orbit-4") &&
                     has(f.records, "span/rect/n=07/k=02/orbit-4");
        line(8, t.other == 0 && cover && f.seconds < 600, counts(t) + ", " + secs(f.seconds));
    }
    {
        RunConfig cfg;
        cfg.seed = seed;
        auto a = run(cfg), b = run(cfg);
        std::vector<CaseRecord> joined;
        for (auto& [name, r] : R)
            for (auto& c : r.records) joined.push_back(c);
        sort_records(joined);
        std::string ta = records_text(a.records), tb = records_text(b.records);
        bool same = ta == tb, split = ta == records_text(joined);
        line(9, same && split,
             std::to_string(a.records.size()) + " records; repeated run identical: " + (same ? "yes" : "no") +
                 "; per-suite runs identical: " + (split ? "yes" : "no"));
    }
    return failures ? 1 : 0;
}
