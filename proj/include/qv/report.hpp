#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "matrix.hpp"
#include "ratfunc.hpp"

namespace qv {

using json = nlohmann::ordered_json;

inline constexpr const char* tool_version = "1.0.0";

enum class Status { Pass, Fail, Skipped, Discrepancy };

inline std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
        case Status::Discrepancy: return "discrepancy";
    }
    return "?";
}

struct Outcome {
    Status status = Status::Pass;
    json witness = nullptr;
};

inline Outcome verdict(bool ok, json witness = nullptr) {
    if (ok) return {};
    return {Status::Fail, std::move(witness)};
}

inline Outcome skipped(const std::string& why) { return {Status::Skipped, json{{"reason", why}}}; }

struct CaseRecord {
    std::string suite, id;
    json params;
    Status status = Status::Pass;
    json witness = nullptr;
    double wall_ms = 0;

    json to_json(bool with_time = true) const {
        json j{{"suite", suite}, {"id", id}, {"params", params}, {"status", status_name(status)}, {"witness", witness}};
        if (with_time) j["wall_time_ms"] = wall_ms;
        return j;
    }
};

// exact values for reports: rationals as "p/q", polynomials as coefficient lists, lowest degree first
inline json jv(const Q& q) { return to_str(q); }
inline json jv(const Poly& p) { return p.is_zero() ? json::array() : json(p.coeff_strings()); }
inline json jv(const RatFunc& r) { return json{{"num", jv(r.num())}, {"den", jv(r.den())}}; }
template <class T>
json jv(const std::vector<T>& v) {
    json a = json::array();
    for (auto& x : v) a.push_back(jv(x));
    return a;
}

// position and value of the first nonzero entry
template <class T>
json first_nonzero(const Matrix<T>& M) {
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j)
            if (!Scalar<T>::is_zero(M(i, j))) return json{{"row", i}, {"col", j}, {"value", jv(M(i, j))}};
    return nullptr;
}

inline std::string pad(int x, int w = 2) {
    std::string s = std::to_string(std::abs(x));
    while (static_cast<int>(s.size()) < w) s = "0" + s;
    return (x < 0 ? "m" : "") + s;
}

class Recorder {
public:
    explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

    void add(const std::string& id, json params, const std::function<Outcome()>& f) {
        CaseRecord r{suite_, id, std::move(params)};
        auto t0 = std::chrono::steady_clock::now();
        try {
            Outcome o = f();
            r.status = o.status;
            r.witness = std::move(o.witness);
        } catch (const std::exception& e) {
            r.status = Status::Fail;
            r.witness = json{{"error", e.what()}};
        }
        auto t1 = std::chrono::steady_clock::now();
        r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        records_.push_back(std::move(r));
    }

    const std::string& suite() const { return suite_; }
    std::vector<CaseRecord>& records() { return records_; }

private:
    std::string suite_;
    std::vector<CaseRecord> records_;
};

struct Summary {
    int pass = 0, fail = 0, skipped = 0, discrepancy = 0;
    void count(Status s) {
        switch (s) {
            case Status::Pass: ++pass; break;
            case Status::Fail: ++fail; break;
            case Status::Skipped: ++skipped; break;
            case Status::Discrepancy: ++discrepancy; break;
        }
    }
    json to_json() const {
        return json{{"pass", pass}, {"fail", fail}, {"skipped", skipped}, {"discrepancy", discrepancy}};
    }
};

inline void sort_records(std::vector<CaseRecord>& rs) {
    std::stable_sort(rs.begin(), rs.end(), [](const CaseRecord& a, const CaseRecord& b) {
        return std::tie(a.suite, a.id) < std::tie(b.suite, b.id);
    });
}

inline Summary summarize(const std::vector<CaseRecord>& rs) {
    Summary s;
    for (auto& r : rs) s.count(r.status);
    return s;
}

inline json report_json(const json& config, const std::vector<CaseRecord>& rs, bool with_time = true) {
    json cases = json::array();
    for (auto& r : rs) cases.push_back(r.to_json(with_time));
    return json{{"tool", "verify"}, {"version", tool_version}, {"config", config}, {"summary", summarize(rs).to_json()}, {"cases", cases}};
}

inline std::string report_markdown(const json& config, const std::vector<CaseRecord>& rs) {
    std::ostringstream os;
    os << "# verify report\n\n";
    os << "config: `" << config.dump() << "`\n\n";
    os << "| suite | pass | fail | skipped | discrepancy |\n|---|---|---|---|---|\n";
    std::vector<std::string> order;
    for (auto& r : rs)
        if (order.empty() || order.back() != r.suite) order.push_back(r.suite);
    for (auto& s : order) {
        Summary sm;
        for (auto& r : rs)
            if (r.suite == s) sm.count(r.status);
        os << "| " << s << " | " << sm.pass << " | " << sm.fail << " | " << sm.skipped << " | " << sm.discrepancy
           << " |\n";
    }
    Summary all = summarize(rs);
    os << "| total | " << all.pass << " | " << all.fail << " | " << all.skipped << " | " << all.discrepancy << " |\n";
    bool header = false;
    for (auto& r : rs) {
        if (r.status == Status::Pass) continue;
        if (!header) {
            os << "\n## non-passing cases\n\n";
            header = true;
        }
        os << "- `" << r.suite << "` `" << r.id << "` " << status_name(r.status);
        if (!r.witness.is_null()) os << ": `" << r.witness.dump() << "`";
        os << "\n";
    }
    return os.str();
}

}  // namespace qv
