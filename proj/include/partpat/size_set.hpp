#ifndef PARTPAT_SIZE_SET_HPP
#define PARTPAT_SIZE_SET_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace partpat {

// A set of allowed block sizes: either an explicit finite set of positive
// integers, or the unbounded set of all sizes >= some minimum.
class SizeSet {
public:
    // Every positive size.
    static SizeSet all_positive() { return at_least(1); }

    static SizeSet at_least(int min_size) {
        if (min_size < 1) throw std::invalid_argument("minimum block size must be >= 1");
        SizeSet s;
        s.finite_ = false;
        s.min_ = min_size;
        return s;
    }

    static SizeSet of(std::vector<int> sizes) {
        for (int v : sizes)
            if (v < 1) throw std::invalid_argument("block sizes must be >= 1");
        std::sort(sizes.begin(), sizes.end());
        sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
        SizeSet s;
        s.finite_ = true;
        s.values_ = std::move(sizes);
        s.min_ = s.values_.empty() ? 1 : s.values_.front();
        return s;
    }

    bool contains(int size) const {
        if (finite_) return std::binary_search(values_.begin(), values_.end(), size);
        return size >= min_;
    }

    bool is_finite() const { return finite_; }

    // Sorted distinct values; only meaningful for finite sets.
    const std::vector<int>& values() const { return values_; }

    int min_size() const { return min_; }

    std::string to_string() const {
        if (!finite_) return min_ == 1 ? "all" : ">=" + std::to_string(min_);
        std::string out = "{";
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(values_[i]);
        }
        return out + "}";
    }

    bool operator==(const SizeSet&) const = default;

private:
    SizeSet() = default;

    bool finite_ = false;
    int min_ = 1;
    std::vector<int> values_;
};

} // namespace partpat

#endif
