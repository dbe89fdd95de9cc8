#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace avd {

using Color = int;  // palette colors are 1..k; 0 means "unassigned"

/// Set of positive colors, stored as a growable bitmask.
class ColorSet {
public:
    ColorSet() = default;
    ColorSet(std::initializer_list<Color> colors) {
        for (Color c : colors) insert(c);
    }

    void insert(Color c) {
        auto w = static_cast<std::size_t>(c) / 64;
        if (words_.size() <= w) words_.resize(w + 1, 0);
        words_[w] |= bit(c);
    }

    void erase(Color c) {
        auto w = static_cast<std::size_t>(c) / 64;
        if (w < words_.size()) words_[w] &= ~bit(c);
        trim();
    }

    bool contains(Color c) const {
        auto w = static_cast<std::size_t>(c) / 64;
        return c >= 0 && w < words_.size() && (words_[w] & bit(c)) != 0;
    }

    int size() const {
        int s = 0;
        for (auto w : words_) s += std::popcount(w);
        return s;
    }

    bool empty() const { return words_.empty(); }

    /// Ascending list of members.
    std::vector<Color> to_vector() const {
        std::vector<Color> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                out.push_back(static_cast<Color>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    ColorSet intersect(const ColorSet& other) const {
        ColorSet r;
        r.words_.resize(std::min(words_.size(), other.words_.size()));
        for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
        r.trim();
        return r;
    }

    friend bool operator==(const ColorSet& a, const ColorSet& b) { return a.words_ == b.words_; }

private:
    static std::uint64_t bit(Color c) { return std::uint64_t{1} << (static_cast<unsigned>(c) % 64); }
    void trim() {
        while (!words_.empty() && words_.back() == 0) words_.pop_back();
    }

    std::vector<std::uint64_t> words_;  // no trailing zero words, so == is set equality
};

}  // namespace avd
