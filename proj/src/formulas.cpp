#include "partpat/formulas.hpp"

#include <algorithm>

#include "partpat/generate.hpp"
#include "partpat/size_set.hpp"

namespace partpat {

mpz_class factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class falling_factorial(int k, int i) {
    if (k < 0 || i < 0) throw std::invalid_argument("falling_factorial: arguments must be >= 0");
    mpz_class r = 1;
    for (int j = 0; j < i; ++j) r *= k - j;
    if (i > k) return 0;
    return r;
}

mpz_class odd_double_factorial(int i) {
    if (i < 0) throw std::invalid_argument("odd_double_factorial: i must be >= 0");
    mpz_class r = 1;
    for (int j = 1; j <= i; ++j) r *= 2 * j - 1;
    return r;
}

SetPartition min_pattern(int m) {
    if (m < 0) throw std::invalid_argument("min_pattern: m must be >= 0");
    std::vector<int> word(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) word[static_cast<std::size_t>(i)] = i + 1;
    return SetPartition::from_word_unchecked(std::move(word));
}

SetPartition max_pattern(int m) {
    if (m < 0) throw std::invalid_argument("max_pattern: m must be >= 0");
    return SetPartition::from_word_unchecked(std::vector<int>(static_cast<std::size_t>(m), 1));
}

SetPartition pattern_12_3(int m) {
    if (m < 3) throw std::invalid_argument("pattern_12_3: m must be >= 3");
    std::vector<int> word(static_cast<std::size_t>(m));
    word[0] = word[1] = 1;
    for (int i = 2; i < m; ++i) word[static_cast<std::size_t>(i)] = i;
    return SetPartition::from_word_unchecked(std::move(word));
}

SetPartition coatom_pattern(int m) {
    if (m < 2) throw std::invalid_argument("coatom_pattern: m must be >= 2");
    std::vector<int> word(static_cast<std::size_t>(m), 2);
    word[0] = 1;
    return SetPartition::from_word_unchecked(std::move(word));
}

mpz_class count_min_pattern(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("count_min_pattern: arguments must be >= 0");
    mpz_class total = 0;
    SizeSet any = SizeSet::all_positive();
    for (int l = 0; l < m; ++l) {
        if (l > n) break;
        total += count_by_block_sizes(n, l, any);
    }
    return total;
}

mpz_class count_max_pattern(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("count_max_pattern: arguments must be >= 0");
    // The empty pattern is a restriction of everything, so nothing avoids it;
    // the vacuous block-size reading would wrongly count the empty partition.
    if (m == 0) return 0;
    std::vector<int> allowed;
    for (int s = 1; s < m; ++s) allowed.push_back(s);
    SizeSet sizes = SizeSet::of(std::move(allowed));
    mpz_class total = 0;
    for (int l = 0; l <= n; ++l) total += count_by_block_sizes(n, l, sizes);
    return total;
}

mpz_class count_12_3_etc(int n, int m) {
    if (n < 0) throw std::invalid_argument("count_12_3_etc: n must be >= 0");
    if (m < 3) throw std::invalid_argument("count_12_3_etc: m must be >= 3");
    SizeSet any = SizeSet::all_positive();
    mpz_class total = 1;
    for (int k = 1; k <= n - 1; ++k) {
        for (int j = 1; j <= m - 2; ++j) {
            mpz_class a = count_by_block_sizes(n - k, j, any);
            if (a == 0) continue;
            mpz_class inner = 0;
            for (int i = 1; i <= j; ++i)
                inner += binomial(j - 1, i - 1) * falling_factorial(k, i);
            total += a * inner;
        }
    }
    return total;
}

bool is_matching(const SetPartition& sigma) {
    std::vector<int> counts(static_cast<std::size_t>(sigma.block_count()) + 1, 0);
    for (int a : sigma.word()) {
        if (++counts[static_cast<std::size_t>(a)] > 2) return false;
    }
    return true;
}

bool is_layered(const SetPartition& sigma) {
    const auto& w = sigma.word();
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] < w[i - 1]) return false;
    return true;
}

bool blocks_at_most(const SetPartition& sigma, int k) {
    return sigma.block_count() <= k;
}

bool char_min_pattern(const SetPartition& sigma, int m) {
    return sigma.block_count() < m;
}

bool char_max_pattern(const SetPartition& sigma, int m) {
    if (m == 0) return false;
    std::vector<int> counts(static_cast<std::size_t>(sigma.block_count()) + 1, 0);
    for (int a : sigma.word()) {
        if (++counts[static_cast<std::size_t>(a)] >= m) return false;
    }
    return true;
}

namespace {

// Longest k such that 1..k lie in k distinct blocks, i.e. the growth word
// starts 1,2,...,k.
int singleton_prefix(const std::vector<int>& w) {
    int k = 0;
    while (k < static_cast<int>(w.size()) && w[static_cast<std::size_t>(k)] == k + 1) ++k;
    return k;
}

int distinct_letters_past(const std::vector<int>& w, int k) {
    std::vector<char> seen(w.size() + 1, 0);
    int distinct = 0;
    for (std::size_t i = static_cast<std::size_t>(k); i < w.size(); ++i) {
        if (!seen[static_cast<std::size_t>(w[i])]) {
            seen[static_cast<std::size_t>(w[i])] = 1;
            ++distinct;
        }
    }
    return distinct;
}

} // namespace

bool char_12_3(const SetPartition& sigma, int m) {
    if (m < 3) throw std::invalid_argument("char_12_3: m must be >= 3");
    // Choosing the longest all-singleton prefix leaves the fewest blocks past
    // it, so only that prefix needs checking.
    const auto& w = sigma.word();
    int k = singleton_prefix(w);
    return distinct_letters_past(w, k) < m - 1;
}

bool char_coatom(const SetPartition& sigma, int m) {
    if (m < 2) throw std::invalid_argument("char_coatom: m must be >= 2");
    auto blocks = sigma.blocks();
    if (blocks.size() <= 1) return true;
    for (std::size_t i = 1; i < blocks.size(); ++i)
        if (static_cast<int>(blocks[i].size()) >= m - 1) return false;
    int cutoff = 0;
    if (static_cast<int>(blocks[0].size()) >= m - 1)
        cutoff = blocks[0][blocks[0].size() - static_cast<std::size_t>(m - 1)];
    return blocks[1][0] > cutoff;
}

bool char_pi3(const SetPartition& sigma, const SetPartition& pattern) {
    const auto& p = pattern.word();
    if (p == std::vector<int>{1, 2, 3}) return sigma.block_count() <= 2;
    if (p == std::vector<int>{1, 1, 1}) return is_matching(sigma);
    if (p == std::vector<int>{1, 1, 2}) {
        // all-singleton prefix, then a single block
        const auto& w = sigma.word();
        int k = singleton_prefix(w);
        return distinct_letters_past(w, k) <= 1;
    }
    if (p == std::vector<int>{1, 2, 2}) {
        // one initial block as a prefix interval, then singletons
        const auto& w = sigma.word();
        std::size_t k = 0;
        while (k < w.size() && w[k] == 1) ++k;
        std::vector<char> seen(w.size() + 1, 0);
        for (std::size_t i = k; i < w.size(); ++i) {
            if (seen[static_cast<std::size_t>(w[i])]) return false;
            seen[static_cast<std::size_t>(w[i])] = 1;
        }
        return true;
    }
    if (p == std::vector<int>{1, 2, 1}) return is_layered(sigma);
    throw std::invalid_argument("char_pi3: pattern must be a partition of [3]");
}

namespace {

// rgf avoidance of 12/3: some all-singleton prefix [k], the rest layered
// into at most k interval blocks whose host blocks appear in decreasing
// order.
bool char_r_12_3(const SetPartition& sigma) {
    const int n = sigma.size();
    if (n == 0) return true;
    const auto& w = sigma.word();
    const int kmax = singleton_prefix(w);
    for (int k = kmax; k >= 0; --k) {
        // blocks of the suffix, in order of first appearance
        std::vector<int> hosts;
        std::vector<int> last_element;
        bool layered = true;
        for (int i = k + 1; i <= n; ++i) {
            int host = w[static_cast<std::size_t>(i - 1)];
            if (!hosts.empty() && hosts.back() == host) {
                last_element.back() = i;
                continue;
            }
            // a host may not reappear after another block started
            for (int h : hosts)
                if (h == host) layered = false;
            hosts.push_back(host);
            last_element.push_back(i);
        }
        if (!layered) continue;
        if (static_cast<int>(hosts.size()) > k) continue;
        bool decreasing = true;
        for (std::size_t i = 1; i < hosts.size(); ++i)
            if (hosts[i] >= hosts[i - 1]) decreasing = false;
        if (decreasing) return true;
    }
    return false;
}

} // namespace

bool char_r3(const SetPartition& sigma, const SetPartition& pattern) {
    const auto& p = pattern.word();
    if (p == std::vector<int>{1, 2, 3}) return sigma.block_count() <= 2;
    if (p == std::vector<int>{1, 1, 1}) return is_matching(sigma);
    if (p == std::vector<int>{1, 1, 2}) return char_r_12_3(sigma);
    if (p == std::vector<int>{1, 2, 2}) {
        // every block after the first is a singleton
        std::vector<int> counts(static_cast<std::size_t>(sigma.block_count()) + 1, 0);
        for (int a : sigma.word()) ++counts[static_cast<std::size_t>(a)];
        for (std::size_t b = 2; b < counts.size(); ++b)
            if (counts[b] != 1) return false;
        return true;
    }
    if (p == std::vector<int>{1, 2, 1}) return is_layered(sigma);
    throw std::invalid_argument("char_r3: pattern must be a partition of [3]");
}

namespace {

mpz_class two_to(int e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

mpz_class matching_count(int n) {
    mpz_class total = 0;
    for (int i = 0; 2 * i <= n; ++i) total += binomial(n, 2 * i) * odd_double_factorial(i);
    return total;
}

enum class Family {
    none,
    min_family,       // 1/2/.../m
    max_family,       // 12...m
    family_12_3,      // 12/3/.../m
    layered_13_2,     // 13/2
    coatom_1_23,      // 1/23
};

Family classify(const SetPartition& pattern) {
    const int m = pattern.size();
    const auto& w = pattern.word();
    if (w == std::vector<int>{1, 2, 1}) return Family::layered_13_2;
    if (w == std::vector<int>{1, 2, 2}) return Family::coatom_1_23;
    if (pattern == min_pattern(m)) return Family::min_family;
    if (pattern == max_pattern(m)) return Family::max_family;
    if (m >= 3 && pattern == pattern_12_3(m)) return Family::family_12_3;
    return Family::none;
}

} // namespace

bool has_closed_form(const SetPartition& pattern, Notion notion) {
    Family family = classify(pattern);
    if (family == Family::none) return false;
    if (notion == Notion::subpartition) return true;
    // Under the rgf order only the families over [3] and the two extreme
    // families have known counts.
    switch (family) {
        case Family::min_family:
        case Family::max_family:
        case Family::layered_13_2:
        case Family::coatom_1_23:
            return true;
        case Family::family_12_3:
            return pattern.size() == 3;
        default:
            return false;
    }
}

std::vector<mpz_class> closed_form_profile(const SetPartition& pattern, Notion notion,
                                           int horizon) {
    if (horizon < 0) throw std::invalid_argument("horizon must be >= 0");
    if (!has_closed_form(pattern, notion))
        throw std::invalid_argument("no closed form known for pattern " + to_string(pattern) +
                                    " under notion " + notion_name(notion));
    const Family family = classify(pattern);
    const int m = pattern.size();
    std::vector<mpz_class> counts;
    counts.reserve(static_cast<std::size_t>(horizon) + 1);
    auto half_powers = [&]() {
        for (int n = 0; n <= horizon; ++n) counts.push_back(n == 0 ? 1 : two_to(n - 1));
    };
    switch (family) {
        case Family::min_family:
            // the rgf and subpartition counts agree for this family
            for (int n = 0; n <= horizon; ++n) counts.push_back(count_min_pattern(n, m));
            break;
        case Family::max_family:
            // likewise; for m = 3 the displayed matching sum is used
            if (m == 3) {
                for (int n = 0; n <= horizon; ++n) counts.push_back(matching_count(n));
            } else {
                for (int n = 0; n <= horizon; ++n) counts.push_back(count_max_pattern(n, m));
            }
            break;
        case Family::layered_13_2:
            half_powers();
            break;
        case Family::coatom_1_23:
            if (notion == Notion::rgf) {
                half_powers();
            } else {
                for (int n = 0; n <= horizon; ++n) counts.push_back(1 + binomial(n, 2));
            }
            break;
        case Family::family_12_3:
            if (notion == Notion::rgf) {
                half_powers();
            } else if (m == 3) {
                for (int n = 0; n <= horizon; ++n) counts.push_back(1 + binomial(n, 2));
            } else {
                for (int n = 0; n <= horizon; ++n) counts.push_back(count_12_3_etc(n, m));
            }
            break;
        default:
            throw std::logic_error("unreachable");
    }
    return counts;
}

} // namespace partpat
