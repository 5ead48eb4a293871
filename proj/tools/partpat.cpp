// partpat: enumeration, avoider counting, identity checking, Wilf-class
// discovery and recurrence guessing for set-partition patterns.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "partpat/errors.hpp"
#include "partpat/formulas.hpp"
#include "partpat/generate.hpp"
#include "partpat/json_io.hpp"
#include "partpat/patterns.hpp"
#include "partpat/precursive.hpp"
#include "partpat/series.hpp"
#include "partpat/set_partition.hpp"

namespace {

using namespace partpat;
using nlohmann::json;

constexpr int kSafetyCap = 14;

// Flag misuse that CLI11 cannot see; mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int worker_count() {
    const char* env = std::getenv("PARTPAT_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 0 || v > 1024)
        throw UsageError("PARTPAT_THREADS must be an integer in [0, 1024]");
    return static_cast<int>(v);
}

void check_cap(int value, bool force, const std::string& name) {
    if (value > kSafetyCap && !force)
        throw UsageError(name + "=" + std::to_string(value) + " exceeds the safety cap (" +
                         std::to_string(kSafetyCap) + "); pass --force to run anyway");
}

SetPartition parse_pattern_arg(const std::string& text) {
    try {
        return parse_partition(text);
    } catch (const PartitionParseError& e) {
        throw UsageError("pattern '" + text + "': " + e.what());
    }
}

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join_counts(const std::vector<mpz_class>& counts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) out += sep;
        out += counts[i].get_str();
    }
    return out;
}

void emit(const json& envelope) { std::cout << envelope.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// enumerate

struct EnumerateOptions {
    int n = 0;
    std::vector<std::string> filters;
    int max_blocks = -1;
    std::string sizes;
    std::string format = "plain";
    bool force = false;
};

int run_enumerate(const EnumerateOptions& opt) {
    check_cap(opt.n, opt.force, "n");
    PartitionFilter filter;
    for (const auto& f : opt.filters) {
        if (f == "layered")
            filter.layered_only = true;
        else if (f == "matching")
            filter.matching_only = true;
        else
            throw UsageError("unknown filter '" + f + "' (expected layered or matching)");
    }
    if (opt.max_blocks >= 0) filter.max_blocks = opt.max_blocks;
    if (!opt.sizes.empty()) {
        std::vector<int> values;
        std::stringstream ss(opt.sizes);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                values.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw UsageError("bad --sizes entry '" + tok + "'");
            }
        }
        try {
            filter.block_sizes = SizeSet::of(std::move(values));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("bad --sizes: ") + e.what());
        }
    }

    PartitionStream stream(opt.n, filter);
    if (opt.format == "json") {
        json partitions = json::array();
        while (auto p = stream.next()) partitions.push_back(to_string(*p));
        json params{{"n", opt.n},
                    {"filters", opt.filters},
                    {"max_blocks", opt.max_blocks >= 0 ? json(opt.max_blocks) : json(nullptr)},
                    {"sizes", opt.sizes.empty() ? json(nullptr) : json(opt.sizes)}};
        emit(io::envelope("enumerate", std::move(params),
                          json{{"count", std::to_string(partitions.size())},
                               {"partitions", std::move(partitions)}}));
    } else if (opt.format == "csv") {
        std::cout << "index,partition\n";
        std::size_t i = 0;
        while (auto p = stream.next()) std::cout << i++ << "," << csv_quote(to_string(*p)) << "\n";
    } else {
        while (auto p = stream.next()) std::cout << to_string(*p) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// count

struct CountOptions {
    std::vector<std::string> patterns;
    std::string notion;
    int horizon = 8;
    bool closed_form = false;
    std::string format = "plain";
    bool force = false;
};

int run_count(const CountOptions& opt) {
    check_cap(opt.horizon, opt.force, "N");
    Notion notion;
    try {
        notion = notion_from_name(opt.notion);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(e.what()) + " (expected sub or rgf)");
    }
    std::vector<SetPartition> patterns;
    for (const auto& text : opt.patterns) patterns.push_back(parse_pattern_arg(text));

    std::optional<std::vector<mpz_class>> closed;
    if (opt.closed_form) {
        if (patterns.size() != 1 || !has_closed_form(patterns.front(), notion))
            throw UsageError("no closed form known for this pattern set under --notion " +
                             opt.notion);
        closed = closed_form_profile(patterns.front(), notion, opt.horizon);
    }

    AvoidanceProfile profile = avoidance_profile(patterns, notion, opt.horizon, worker_count());
    bool all_match = true;
    if (closed)
        for (std::size_t i = 0; i < profile.counts.size(); ++i)
            if (profile.counts[i] != (*closed)[i]) all_match = false;

    if (opt.format == "json") {
        json result = io::profile_to_json(profile);
        if (closed) {
            result["closed_form"] = io::sequence_to_json(*closed);
            result["all_match"] = all_match;
        }
        json pats = json::array();
        for (const auto& p : patterns) pats.push_back(to_string(p));
        emit(io::envelope("count",
                          json{{"patterns", std::move(pats)},
                               {"notion", opt.notion},
                               {"horizon", opt.horizon},
                               {"closed_form", opt.closed_form}},
                          std::move(result)));
    } else if (opt.format == "csv") {
        std::cout << (closed ? "n,count,closed_form,match\n" : "n,count\n");
        for (std::size_t i = 0; i < profile.counts.size(); ++i) {
            std::cout << i << "," << profile.counts[i].get_str();
            if (closed)
                std::cout << "," << (*closed)[i].get_str() << ","
                          << (profile.counts[i] == (*closed)[i] ? "ok" : "MISMATCH");
            std::cout << "\n";
        }
    } else {
        for (std::size_t i = 0; i < profile.counts.size(); ++i) {
            std::cout << i << " " << profile.counts[i].get_str();
            if (closed)
                std::cout << " " << (*closed)[i].get_str() << " "
                          << (profile.counts[i] == (*closed)[i] ? "ok" : "MISMATCH");
            std::cout << "\n";
        }
    }
    return all_match ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;
};

class SuiteRunner {
public:
    SuiteRunner(int max_n, int max_m, int workers)
        : max_n_(max_n), max_m_(max_m), workers_(workers) {}

    // max_n as requested on the command line, or the suite default.
    int horizon(int fallback) const { return max_n_ > 0 ? max_n_ : fallback; }
    int max_m() const { return max_m_; }

    void count_check(const std::string& name, const SetPartition& pattern, Notion notion,
                     int horizon, const std::vector<mpz_class>& expected) {
        Check c{name, true, ""};
        AvoidanceProfile profile = avoidance_profile({pattern}, notion, horizon, workers_);
        for (int n = 0; n <= horizon; ++n) {
            if (profile.counts[static_cast<std::size_t>(n)] != expected[static_cast<std::size_t>(n)]) {
                c.pass = false;
                c.detail = "first mismatch at n=" + std::to_string(n) + ": enumerated " +
                           profile.counts[static_cast<std::size_t>(n)].get_str() + ", formula " +
                           expected[static_cast<std::size_t>(n)].get_str();
                break;
            }
        }
        checks.push_back(std::move(c));
    }

    template <typename Pred>
    void predicate_check(const std::string& name, const SetPartition& pattern, Notion notion,
                         int horizon, Pred&& predicate) {
        Check c{name, true, ""};
        PatternMatcher matcher(pattern, notion);
        for (int n = 0; n <= horizon && c.pass; ++n) {
            PartitionStream stream(n);
            while (auto sigma = stream.next()) {
                bool avoid = !matcher.contained_in(sigma->word());
                bool claimed = predicate(*sigma);
                if (avoid != claimed) {
                    c.pass = false;
                    c.detail = "first counterexample " + to_string(*sigma) + " (n=" +
                               std::to_string(n) + "): predicate " +
                               (claimed ? "true" : "false") + ", avoidance " +
                               (avoid ? "true" : "false");
                    break;
                }
            }
        }
        checks.push_back(std::move(c));
    }

    void equal_sequences(const std::string& name, const std::vector<mpz_class>& got,
                         const std::vector<mpz_class>& expected, const std::string& got_label,
                         const std::string& expected_label) {
        Check c{name, true, ""};
        std::size_t len = std::min(got.size(), expected.size());
        for (std::size_t n = 0; n < len; ++n) {
            if (got[n] != expected[n]) {
                c.pass = false;
                c.detail = "first mismatch at n=" + std::to_string(n) + ": " + got_label + " " +
                           got[n].get_str() + ", " + expected_label + " " + expected[n].get_str();
                break;
            }
        }
        checks.push_back(std::move(c));
    }

    int workers() const { return workers_; }

    std::vector<Check> checks;

private:
    int max_n_;
    int max_m_;
    int workers_;
};

std::vector<SetPartition> patterns_of_3() {
    std::vector<SetPartition> out;
    PartitionStream stream(3);
    while (auto p = stream.next()) out.push_back(*p);
    return out;
}

void suite_pi3(SuiteRunner& r) {
    int horizon = r.horizon(10);
    int char_horizon = std::min(horizon, 9);
    for (const auto& pi : patterns_of_3()) {
        std::string label = to_string(pi);
        r.count_check("pi3 count " + label, pi, Notion::subpartition, horizon,
                      closed_form_profile(pi, Notion::subpartition, horizon));
        r.predicate_check("pi3 characterization " + label, pi, Notion::subpartition, char_horizon,
                          [&pi](const SetPartition& sigma) { return char_pi3(sigma, pi); });
    }
}

void suite_r3(SuiteRunner& r) {
    int horizon = r.horizon(9);
    int char_horizon = std::min(horizon, 8);
    for (const auto& pi : patterns_of_3()) {
        std::string label = to_string(pi);
        r.count_check("r3 count " + label, pi, Notion::rgf, horizon,
                      closed_form_profile(pi, Notion::rgf, horizon));
        r.predicate_check("r3 characterization " + label, pi, Notion::rgf, char_horizon,
                          [&pi](const SetPartition& sigma) { return char_r3(sigma, pi); });
    }
}

void suite_minmax(SuiteRunner& r) {
    int horizon = r.horizon(9);
    for (int m = 1; m <= r.max_m(); ++m) {
        SetPartition lo = min_pattern(m);
        SetPartition hi = max_pattern(m);
        std::vector<mpz_class> lo_counts, hi_counts;
        for (int n = 0; n <= horizon; ++n) {
            lo_counts.push_back(count_min_pattern(n, m));
            hi_counts.push_back(count_max_pattern(n, m));
        }
        std::string suffix = " m=" + std::to_string(m);
        r.count_check("minmax count " + to_string(lo) + suffix, lo, Notion::subpartition, horizon,
                      lo_counts);
        r.count_check("minmax count " + to_string(hi) + suffix, hi, Notion::subpartition, horizon,
                      hi_counts);
        r.count_check("minmax rgf count " + to_string(lo) + suffix, lo, Notion::rgf, horizon,
                      lo_counts);
        r.count_check("minmax rgf count " + to_string(hi) + suffix, hi, Notion::rgf, horizon,
                      hi_counts);
        int char_horizon = std::min(horizon, 9);
        r.predicate_check("minmax characterization " + to_string(lo) + suffix, lo,
                          Notion::subpartition, char_horizon,
                          [m](const SetPartition& s) { return char_min_pattern(s, m); });
        r.predicate_check("minmax characterization " + to_string(hi) + suffix, hi,
                          Notion::subpartition, char_horizon,
                          [m](const SetPartition& s) { return char_max_pattern(s, m); });
    }
}

void suite_12sum(SuiteRunner& r) {
    int horizon = r.horizon(10);
    for (int m = 3; m <= r.max_m(); ++m) {
        SetPartition pi = pattern_12_3(m);
        std::vector<mpz_class> expected;
        for (int n = 0; n <= horizon; ++n) expected.push_back(count_12_3_etc(n, m));
        std::string suffix = " m=" + std::to_string(m);
        r.count_check("12sum count " + to_string(pi) + suffix, pi, Notion::subpartition, horizon,
                      expected);
        r.predicate_check("12sum characterization " + to_string(pi) + suffix, pi,
                          Notion::subpartition, std::min(horizon, 9),
                          [m](const SetPartition& s) { return char_12_3(s, m); });
    }
    std::vector<mpz_class> sum_form, quadratic;
    int wide = std::max(horizon, 20);
    for (int n = 0; n <= wide; ++n) {
        sum_form.push_back(count_12_3_etc(n, 3));
        quadratic.push_back(1 + binomial(n, 2));
    }
    r.equal_sequences("12sum m=3 equals 1+C(n,2)", sum_form, quadratic, "sum", "quadratic");
}

void suite_coatom(SuiteRunner& r) {
    int horizon = std::min(r.horizon(8), 9);
    for (int m = 2; m <= r.max_m(); ++m) {
        SetPartition pi = coatom_pattern(m);
        r.predicate_check("coatom characterization " + to_string(pi) + " m=" + std::to_string(m),
                          pi, Notion::subpartition, horizon,
                          [m](const SetPartition& s) { return char_coatom(s, m); });
    }
}

void suite_egf(SuiteRunner& r) {
    int horizon = r.horizon(10);

    // a_{n,l}^I rows against the series route: n! [x^n] F_I(x)^l / l!.
    {
        Check c{"egf block-size counts", true, ""};
        for (int mask = 0; mask < 64 && c.pass; ++mask) {
            std::vector<int> sizes;
            for (int i = 0; i < 6; ++i)
                if (mask & (1 << i)) sizes.push_back(i + 1);
            SizeSet size_set = SizeSet::of(sizes);
            TruncatedSeries f = egf_for_sizes(size_set, horizon);
            for (int l = 0; l <= 4 && c.pass; ++l) {
                TruncatedSeries powered = f.pow(l).scaled(mpq_class(1) / mpq_class(factorial(l)));
                std::vector<mpz_class> series_counts = egf_counts(powered);
                for (int n = 0; n <= horizon; ++n) {
                    mpz_class direct = count_by_block_sizes(n, l, size_set);
                    if (series_counts[static_cast<std::size_t>(n)] != direct) {
                        c.pass = false;
                        c.detail = "I=" + size_set.to_string() + " l=" + std::to_string(l) +
                                   " n=" + std::to_string(n) + ": series " +
                                   series_counts[static_cast<std::size_t>(n)].get_str() +
                                   ", direct " + direct.get_str();
                        break;
                    }
                }
            }
        }
        r.checks.push_back(std::move(c));
    }

    TruncatedSeries exp_minus_one = egf_for_sizes(SizeSet::all_positive(), horizon);
    for (int m = 1; m <= r.max_m(); ++m) {
        std::vector<mpz_class> via_series =
            egf_counts(partial_exp(m - 1, horizon).compose(exp_minus_one));
        std::vector<mpz_class> brute;
        for (int n = 0; n <= horizon; ++n)
            brute.push_back(count_avoiders(n, {min_pattern(m)}, Notion::subpartition, r.workers()));
        r.equal_sequences("egf min family m=" + std::to_string(m), via_series, brute, "series",
                          "enumerated");

        TruncatedSeries inner =
            partial_exp(m - 1, horizon) - TruncatedSeries::constant(horizon, 1);
        std::vector<mpz_class> max_series = egf_counts(inner.exp());
        std::vector<mpz_class> max_brute;
        for (int n = 0; n <= horizon; ++n)
            max_brute.push_back(
                count_avoiders(n, {max_pattern(m)}, Notion::subpartition, r.workers()));
        r.equal_sequences("egf max family m=" + std::to_string(m), max_series, max_brute, "series",
                          "enumerated");
    }

    std::vector<mpz_class> bell_series = egf_counts(exp_minus_one.exp());
    std::vector<mpz_class> bell_direct;
    for (int n = 0; n <= horizon; ++n) bell_direct.push_back(bell(n));
    r.equal_sequences("egf bell numbers", bell_series, bell_direct, "series", "triangle");
}

struct VerifyOptions {
    std::string suite;
    int max_n = 0;
    int max_m = 5;
    std::string format = "plain";
};

int run_verify(const VerifyOptions& opt) {
    SuiteRunner runner(opt.max_n, opt.max_m, worker_count());
    bool known = false;
    auto want = [&](const char* name) {
        bool match = opt.suite == name || opt.suite == "all";
        known = known || opt.suite == name;
        return match;
    };
    if (want("pi3")) suite_pi3(runner);
    if (want("r3")) suite_r3(runner);
    if (want("minmax")) suite_minmax(runner);
    if (want("12sum")) suite_12sum(runner);
    if (want("coatom")) suite_coatom(runner);
    if (want("egf")) suite_egf(runner);
    if (!known && opt.suite != "all")
        throw UsageError("unknown suite '" + opt.suite +
                         "' (expected pi3, r3, minmax, 12sum, coatom, egf or all)");

    int failures = 0;
    for (const auto& c : runner.checks)
        if (!c.pass) ++failures;

    if (opt.format == "json") {
        json checks = json::array();
        for (const auto& c : runner.checks) {
            json item{{"name", c.name}, {"pass", c.pass}};
            if (!c.pass) item["detail"] = c.detail;
            checks.push_back(std::move(item));
        }
        emit(io::envelope("verify",
                          json{{"suite", opt.suite}, {"max_n", opt.max_n}, {"max_m", opt.max_m}},
                          json{{"checks", std::move(checks)},
                               {"total", runner.checks.size()},
                               {"failures", failures}}));
    } else {
        for (const auto& c : runner.checks) {
            if (c.pass)
                std::cout << "PASS " << c.name << "\n";
            else
                std::cout << "FAIL " << c.name << ": " << c.detail << "\n";
        }
        std::cout << runner.checks.size() << " checks, " << failures << " failures\n";
    }
    return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// wilf

struct WilfOptions {
    int m = 3;
    std::string notion;
    int horizon = 8;
    std::string format = "plain";
    bool force = false;
};

int run_wilf(const WilfOptions& opt) {
    check_cap(opt.horizon, opt.force, "N");
    Notion notion;
    try {
        notion = notion_from_name(opt.notion);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(e.what()) + " (expected sub or rgf)");
    }
    std::vector<WilfClass> classes = wilf_classes(opt.m, notion, opt.horizon, worker_count());

    if (opt.format == "json") {
        json out = json::array();
        for (const auto& cls : classes) {
            json pats = json::array();
            for (const auto& p : cls.patterns) pats.push_back(to_string(p));
            out.push_back(json{{"patterns", std::move(pats)},
                               {"counts", io::sequence_to_json(cls.profile)}});
        }
        emit(io::envelope("wilf",
                          json{{"m", opt.m}, {"notion", opt.notion}, {"horizon", opt.horizon}},
                          json{{"classes", std::move(out)}, {"empirical_horizon", opt.horizon}}));
    } else if (opt.format == "csv") {
        std::cout << "class,patterns,counts\n";
        for (std::size_t i = 0; i < classes.size(); ++i) {
            std::string pats;
            for (std::size_t j = 0; j < classes[i].patterns.size(); ++j) {
                if (j) pats += ' ';
                pats += to_string(classes[i].patterns[j]);
            }
            std::cout << i + 1 << "," << csv_quote(pats) << ","
                      << csv_quote(join_counts(classes[i].profile, " ")) << "\n";
        }
    } else {
        std::cout << "m=" << opt.m << " notion=" << opt.notion << " horizon=" << opt.horizon
                  << " (classes are empirical, equal up to the horizon)\n";
        for (std::size_t i = 0; i < classes.size(); ++i) {
            std::cout << "class " << i + 1 << ":";
            for (const auto& p : classes[i].patterns) std::cout << " " << to_string(p);
            std::cout << "\n  counts: " << join_counts(classes[i].profile, " ") << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// guess

struct GuessOptions {
    std::string seq;
    std::string file;
    std::string family;
    int horizon = 25;
    int max_order = 3;
    int max_degree = 2;
    std::string format = "plain";
    bool force = false;
};

std::vector<mpz_class> parse_terms(const std::string& text, const std::string& origin) {
    std::vector<mpz_class> terms;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        try {
            terms.emplace_back(token);
        } catch (const std::invalid_argument&) {
            throw UsageError(origin + ": '" + token + "' is not an integer");
        }
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
            flush();
        else
            token += c;
    }
    flush();
    if (terms.empty()) throw UsageError(origin + ": no terms given");
    return terms;
}

// "bell", "sub:13/2", "rgf:1/23", "min:m=4", "max:m=4", "12_3:m=4"
std::vector<mpz_class> family_terms(const std::string& family, int horizon, bool force,
                                    json& params_out) {
    params_out["family"] = family;
    params_out["horizon"] = horizon;
    if (family == "bell") {
        std::vector<mpz_class> terms;
        for (int n = 0; n <= horizon; ++n) terms.push_back(bell(n));
        return terms;
    }
    auto colon = family.find(':');
    if (colon == std::string::npos)
        throw UsageError("unknown family '" + family +
                         "' (expected bell, sub:PAT, rgf:PAT, min:m=K, max:m=K or 12_3:m=K)");
    std::string head = family.substr(0, colon);
    std::string tail = family.substr(colon + 1);
    if (head == "min" || head == "max" || head == "12_3") {
        if (tail.rfind("m=", 0) != 0)
            throw UsageError("family '" + family + "': expected " + head + ":m=K");
        int m = 0;
        try {
            m = std::stoi(tail.substr(2));
        } catch (const std::exception&) {
            throw UsageError("family '" + family + "': bad m value");
        }
        std::vector<mpz_class> terms;
        for (int n = 0; n <= horizon; ++n) {
            if (head == "min")
                terms.push_back(count_min_pattern(n, m));
            else if (head == "max")
                terms.push_back(count_max_pattern(n, m));
            else
                terms.push_back(count_12_3_etc(n, m));
        }
        return terms;
    }
    if (head == "sub" || head == "rgf") {
        Notion notion = head == "sub" ? Notion::subpartition : Notion::rgf;
        SetPartition pattern = parse_pattern_arg(tail);
        if (has_closed_form(pattern, notion)) return closed_form_profile(pattern, notion, horizon);
        check_cap(horizon, force, "N");
        return avoidance_profile({pattern}, notion, horizon, worker_count()).counts;
    }
    throw UsageError("unknown family '" + family +
                     "' (expected bell, sub:PAT, rgf:PAT, min:m=K, max:m=K or 12_3:m=K)");
}

int run_guess(const GuessOptions& opt) {
    json params;
    std::vector<mpz_class> terms;
    if (!opt.seq.empty()) {
        terms = parse_terms(opt.seq, "--seq");
        params["source"] = "inline";
    } else if (!opt.file.empty()) {
        std::ifstream in(opt.file);
        if (!in) throw UsageError("cannot open '" + opt.file + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        terms = parse_terms(buffer.str(), opt.file);
        params["source"] = opt.file;
    } else {
        terms = family_terms(opt.family, opt.horizon, opt.force, params);
        params["source"] = "family";
    }
    params["max_order"] = opt.max_order;
    params["max_degree"] = opt.max_degree;

    GuessReport report;
    try {
        report = guess(terms, opt.max_order, opt.max_degree);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    if (opt.format == "json") {
        json result{{"terms", io::sequence_to_json(terms)},
                    {"sequence_length", report.sequence_length},
                    {"max_order", report.max_order},
                    {"max_degree", report.max_degree},
                    {"found", report.found},
                    {"held_out_terms", report.held_out_terms}};
        if (report.found) {
            result["recurrence"] = io::recurrence_to_json(*report.recurrence);
            result["recurrence_text"] = report.recurrence->to_string();
            result["cell_order"] = report.cell_order;
            result["cell_degree"] = report.cell_degree;
            result["kernel_dimension"] = report.kernel_dimension;
        } else {
            result["recurrence"] = nullptr;
        }
        emit(io::envelope("guess", std::move(params), std::move(result)));
    } else {
        std::cout << "terms (" << terms.size() << "): " << join_counts(terms, " ") << "\n";
        if (report.found) {
            std::cout << "recurrence found (order " << report.cell_order << ", degree "
                      << report.cell_degree << ", kernel dimension " << report.kernel_dimension
                      << ", validated on " << report.held_out_terms << " held-out terms):\n  "
                      << report.recurrence->to_string() << "\n";
        } else {
            std::cout << "no recurrence with order <= " << opt.max_order << " and degree <= "
                      << opt.max_degree << " fits " << terms.size() << " terms ("
                      << report.held_out_terms << " held out)\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"set-partition pattern avoidance toolkit"};
    app.require_subcommand(1);

    EnumerateOptions enumerate_opt;
    auto* cmd_enumerate = app.add_subcommand("enumerate", "list the partitions of [n]");
    cmd_enumerate->add_option("-n", enumerate_opt.n, "ground set size")
        ->required()
        ->check(CLI::Range(0, 1000));
    cmd_enumerate->add_option("--filter", enumerate_opt.filters, "layered or matching");
    cmd_enumerate->add_option("--max-blocks", enumerate_opt.max_blocks, "keep at most this many blocks");
    cmd_enumerate->add_option("--sizes", enumerate_opt.sizes, "allowed block sizes, e.g. 1,2");
    cmd_enumerate->add_option("--format", enumerate_opt.format, "plain, json or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    cmd_enumerate->add_flag("--force", enumerate_opt.force, "override the safety cap");

    CountOptions count_opt;
    auto* cmd_count = app.add_subcommand("count", "count avoiders of a pattern set");
    cmd_count->add_option("-p,--pattern", count_opt.patterns, "pattern, e.g. 13/2")
        ->required()
        ->take_all();
    cmd_count->add_option("--notion", count_opt.notion, "containment notion: sub or rgf")
        ->required();
    cmd_count->add_option("-N", count_opt.horizon, "count for n = 0..N")->check(CLI::Range(0, 1000));
    cmd_count->add_flag("--closed-form", count_opt.closed_form,
                        "also print the closed form and a match flag");
    cmd_count->add_option("--format", count_opt.format, "plain, json or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    cmd_count->add_flag("--force", count_opt.force, "override the safety cap");

    VerifyOptions verify_opt;
    auto* cmd_verify = app.add_subcommand("verify", "check the identity suites against enumeration");
    cmd_verify->add_option("suite", verify_opt.suite, "pi3, r3, minmax, 12sum, coatom, egf or all")
        ->required();
    cmd_verify->add_option("--max-n", verify_opt.max_n, "largest n (0 = suite default)")
        ->check(CLI::Range(0, 14));
    cmd_verify->add_option("-m", verify_opt.max_m, "largest pattern family size")
        ->check(CLI::Range(1, 8));
    cmd_verify->add_option("--format", verify_opt.format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    WilfOptions wilf_opt;
    auto* cmd_wilf = app.add_subcommand("wilf", "group patterns of [m] by avoider counts");
    cmd_wilf->add_option("-m", wilf_opt.m, "pattern ground set size")
        ->required()
        ->check(CLI::Range(0, 5));
    cmd_wilf->add_option("--notion", wilf_opt.notion, "containment notion: sub or rgf")->required();
    cmd_wilf->add_option("-N", wilf_opt.horizon, "profile horizon")->check(CLI::Range(0, 1000));
    cmd_wilf->add_option("--format", wilf_opt.format, "plain, json or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    cmd_wilf->add_flag("--force", wilf_opt.force, "override the safety cap");

    GuessOptions guess_opt;
    auto* cmd_guess = app.add_subcommand("guess", "fit a polynomial-coefficient recurrence");
    auto* seq_opt = cmd_guess->add_option("--seq", guess_opt.seq, "inline terms, e.g. 1,1,2,6,24");
    auto* file_opt = cmd_guess->add_option("--file", guess_opt.file, "file of whitespace-separated terms");
    auto* family_opt = cmd_guess->add_option(
        "--family", guess_opt.family, "bell, sub:PAT, rgf:PAT, min:m=K, max:m=K or 12_3:m=K");
    seq_opt->excludes(file_opt)->excludes(family_opt);
    file_opt->excludes(family_opt);
    cmd_guess->add_option("-N", guess_opt.horizon, "family horizon: use terms for n = 0..N")
        ->check(CLI::Range(0, 1000));
    cmd_guess->add_option("-K", guess_opt.max_order, "largest recurrence order")
        ->check(CLI::Range(0, 8));
    cmd_guess->add_option("-D", guess_opt.max_degree, "largest coefficient degree")
        ->check(CLI::Range(0, 8));
    cmd_guess->add_option("--format", guess_opt.format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));
    cmd_guess->add_flag("--force", guess_opt.force, "override the safety cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_guess->parsed() && guess_opt.seq.empty() && guess_opt.file.empty() &&
            guess_opt.family.empty())
            throw UsageError("guess needs one of --seq, --file or --family");
        if (cmd_enumerate->parsed()) return run_enumerate(enumerate_opt);
        if (cmd_count->parsed()) return run_count(count_opt);
        if (cmd_verify->parsed()) return run_verify(verify_opt);
        if (cmd_wilf->parsed()) return run_wilf(wilf_opt);
        if (cmd_guess->parsed()) return run_guess(guess_opt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PartitionParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
