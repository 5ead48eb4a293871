#include "partpat/set_partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace partpat {

namespace {

bool is_rgf_word(const std::vector<int>& word) {
    int running_max = 0;
    for (int a : word) {
        if (a < 1 || a > running_max + 1) return false;
        running_max = std::max(running_max, a);
    }
    return true;
}

} // namespace

SetPartition SetPartition::from_blocks(const std::vector<std::vector<int>>& blocks) {
    int n = 0;
    for (const auto& block : blocks) {
        if (block.empty()) throw std::invalid_argument("partition block may not be empty");
        for (int e : block) {
            if (e < 1) throw std::invalid_argument("partition elements must be >= 1");
            n = std::max(n, e);
        }
    }
    std::vector<int> word(n, 0);
    // order blocks by their minima, then fill in canonical indices
    std::vector<int> order(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) order[i] = static_cast<int>(i);
    auto block_min = [&](int i) {
        return *std::min_element(blocks[i].begin(), blocks[i].end());
    };
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return block_min(a) < block_min(b); });
    for (std::size_t j = 0; j < order.size(); ++j) {
        for (int e : blocks[order[j]]) {
            if (word[e - 1] != 0)
                throw std::invalid_argument("element " + std::to_string(e) +
                                            " appears in more than one block");
            word[e - 1] = static_cast<int>(j) + 1;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (word[i] == 0)
            throw std::invalid_argument("elements do not cover 1..n: missing " +
                                        std::to_string(i + 1));
    }
    return SetPartition(std::move(word));
}

SetPartition SetPartition::from_rgf_word(const std::vector<int>& word) {
    if (!is_rgf_word(word))
        throw std::invalid_argument("word is not a restricted growth word");
    return SetPartition(word);
}

SetPartition SetPartition::from_word_unchecked(std::vector<int> word) {
    return SetPartition(std::move(word));
}

int SetPartition::block_count() const {
    int k = 0;
    for (int a : word_) k = std::max(k, a);
    return k;
}

int SetPartition::block_of(int element) const {
    if (element < 1 || element > size())
        throw std::domain_error("element out of range");
    return word_[element - 1];
}

std::vector<std::vector<int>> SetPartition::blocks() const {
    std::vector<std::vector<int>> result(block_count());
    for (int i = 0; i < size(); ++i) result[word_[i] - 1].push_back(i + 1);
    return result;
}

Rgf::Rgf(std::vector<int> word) : word_(std::move(word)) {
    if (!is_rgf_word(word_))
        throw std::invalid_argument("word is not a restricted growth word");
}

bool Rgf::is_valid(const std::vector<int>& word) { return is_rgf_word(word); }

Rgf to_rgf(const SetPartition& pi) { return Rgf(pi.word()); }

SetPartition from_rgf(const Rgf& r) { return SetPartition::from_word_unchecked(r.word()); }

std::vector<int> standardize_sequence(const std::vector<int>& labels,
                                      const std::vector<int>& sequence) {
    std::vector<int> sorted(labels);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::map<int, int> rank;
    for (std::size_t i = 0; i < sorted.size(); ++i) rank[sorted[i]] = static_cast<int>(i) + 1;
    std::vector<int> result;
    result.reserve(sequence.size());
    for (int v : sequence) {
        auto it = rank.find(v);
        if (it == rank.end())
            throw std::domain_error("sequence entry " + std::to_string(v) +
                                    " is not in the label set");
        result.push_back(it->second);
    }
    return result;
}

SetPartition standardize_partition(const std::vector<int>& labels,
                                   const std::vector<std::vector<int>>& blocks) {
    std::vector<int> sorted(labels);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::map<int, int> rank;
    for (std::size_t i = 0; i < sorted.size(); ++i) rank[sorted[i]] = static_cast<int>(i) + 1;

    std::size_t seen = 0;
    std::vector<std::vector<int>> mapped;
    mapped.reserve(blocks.size());
    for (const auto& block : blocks) {
        std::vector<int> image;
        image.reserve(block.size());
        for (int v : block) {
            auto it = rank.find(v);
            if (it == rank.end())
                throw std::domain_error("block element " + std::to_string(v) +
                                        " is not in the label set");
            image.push_back(it->second);
            ++seen;
        }
        mapped.push_back(std::move(image));
    }
    if (seen != sorted.size())
        throw std::domain_error("blocks do not use every label exactly once");
    return SetPartition::from_blocks(mapped);
}

SetPartition standardize_partition(const std::vector<std::vector<int>>& blocks) {
    std::vector<int> labels;
    for (const auto& block : blocks) labels.insert(labels.end(), block.begin(), block.end());
    return standardize_partition(labels, blocks);
}

SetPartition complement(const SetPartition& pi) {
    const int n = pi.size();
    std::vector<std::vector<int>> mapped;
    for (const auto& block : pi.blocks()) {
        std::vector<int> image;
        image.reserve(block.size());
        for (int e : block) image.push_back(n + 1 - e);
        mapped.push_back(std::move(image));
    }
    return SetPartition::from_blocks(mapped);
}

std::vector<std::vector<int>> restrict_to(const SetPartition& sigma,
                                          const std::vector<int>& subset) {
    std::vector<int> t(subset);
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    for (int e : t) {
        if (e < 1 || e > sigma.size())
            throw std::domain_error("restriction element " + std::to_string(e) +
                                    " is outside the ground set");
    }
    // walking t in ascending order keeps the output ordered by block minima
    std::vector<std::vector<int>> result;
    std::map<int, std::size_t> slot;  // host block index -> output position
    for (int e : t) {
        int host = sigma.block_of(e);
        auto it = slot.find(host);
        if (it == slot.end()) {
            slot.emplace(host, result.size());
            result.push_back({e});
        } else {
            result[it->second].push_back(e);
        }
    }
    return result;
}

SetPartition induced_pattern(const SetPartition& sigma, const std::vector<int>& subset) {
    auto blocks = restrict_to(sigma, subset);
    if (blocks.empty()) return SetPartition();
    return standardize_partition(blocks);
}

std::string to_string(const SetPartition& pi) {
    if (pi.empty()) return "ε";
    std::ostringstream out;
    bool first_block = true;
    for (const auto& block : pi.blocks()) {
        if (!first_block) out << '/';
        first_block = false;
        bool first = true;
        for (int e : block) {
            if (!first) out << ',';
            first = false;
            out << e;
        }
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const SetPartition& pi) {
    return os << to_string(pi);
}

namespace {

struct RawBlock {
    std::size_t position = 0;   // byte offset of the token
    std::string text;
};

// One element with the position it came from, for error reporting.
struct RawElement {
    std::size_t position = 0;
    long value = 0;
};

long parse_number(const std::string& digits, std::size_t position) {
    if (digits.empty()) throw PartitionParseError("empty element", position);
    if (digits.size() > 8) throw PartitionParseError("element out of range", position);
    long v = 0;
    for (char c : digits) v = v * 10 + (c - '0');
    return v;
}

SetPartition assemble(const std::vector<std::vector<RawElement>>& blocks) {
    long n = 0;
    std::size_t count = 0;
    for (const auto& block : blocks) {
        for (const auto& el : block) {
            if (el.value < 1)
                throw PartitionParseError("elements must be >= 1", el.position);
            n = std::max(n, el.value);
            ++count;
        }
    }
    if (static_cast<long>(count) != n)
        throw PartitionParseError("elements do not form a set 1..n", 0);
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& block : blocks) {
        for (const auto& el : block) {
            if (seen[static_cast<std::size_t>(el.value)])
                throw PartitionParseError("duplicate element " + std::to_string(el.value),
                                          el.position);
            seen[static_cast<std::size_t>(el.value)] = 1;
        }
    }
    std::vector<std::vector<int>> plain;
    plain.reserve(blocks.size());
    for (const auto& block : blocks) {
        std::vector<int> b;
        b.reserve(block.size());
        for (const auto& el : block) b.push_back(static_cast<int>(el.value));
        plain.push_back(std::move(b));
    }
    return SetPartition::from_blocks(plain);
}

} // namespace

SetPartition parse_partition(std::string_view text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string_view body = text.substr(begin, end - begin);
    if (body.empty() || body == "ε") return SetPartition();

    std::vector<RawBlock> tokens;
    std::size_t token_start = begin;
    std::string current;
    for (std::size_t i = begin; i <= end; ++i) {
        if (i == end || text[i] == '/') {
            if (current.empty())
                throw PartitionParseError("empty block", token_start);
            tokens.push_back({token_start, current});
            current.clear();
            token_start = i + 1;
        } else {
            char c = text[i];
            if (!std::isdigit(static_cast<unsigned char>(c)) && c != ',')
                throw PartitionParseError(std::string("unexpected character '") + c + "'", i);
            current.push_back(c);
        }
    }

    // Tokens without commas and with more than one digit are ambiguous:
    // "356" may be the digit run {3,5,6} or the single element 356.  The two
    // readings are tried in that order; at most one can cover 1..n.
    bool has_run_candidates = false;
    for (const auto& tok : tokens) {
        if (tok.text.find(',') == std::string::npos && tok.text.size() > 1)
            has_run_candidates = true;
    }

    auto explode = [&](bool digit_runs) {
        std::vector<std::vector<RawElement>> blocks;
        blocks.reserve(tokens.size());
        for (const auto& tok : tokens) {
            std::vector<RawElement> block;
            if (tok.text.find(',') != std::string::npos) {
                std::string piece;
                std::size_t piece_start = tok.position;
                for (std::size_t i = 0; i <= tok.text.size(); ++i) {
                    if (i == tok.text.size() || tok.text[i] == ',') {
                        block.push_back({piece_start, parse_number(piece, piece_start)});
                        piece.clear();
                        piece_start = tok.position + i + 1;
                    } else {
                        piece.push_back(tok.text[i]);
                    }
                }
            } else if (digit_runs && tok.text.size() > 1) {
                for (std::size_t i = 0; i < tok.text.size(); ++i)
                    block.push_back({tok.position + i, tok.text[i] - '0'});
            } else {
                block.push_back({tok.position, parse_number(tok.text, tok.position)});
            }
            blocks.push_back(std::move(block));
        }
        return blocks;
    };

    if (!has_run_candidates) return assemble(explode(false));
    try {
        return assemble(explode(true));
    } catch (const PartitionParseError& run_error) {
        try {
            return assemble(explode(false));
        } catch (const PartitionParseError&) {
            throw run_error;
        }
    }
}

} // namespace partpat
