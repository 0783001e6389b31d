#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dwa/error.hpp"

namespace dwa {

// Ordered list of red-strand labels s_1..s_m; labels are >= 0.
struct RedSpec {
    std::vector<int> labels;

    int m() const { return static_cast<int>(labels.size()); }
    int label(int j) const {  // 1-based ordinal
        if (j < 1 || j > m()) throw argument_error("red ordinal out of range");
        return labels[j - 1];
    }
    bool operator==(const RedSpec&) const = default;
    auto operator<=>(const RedSpec&) const = default;
};

// Element of Seq(s,n): an interleaving of n black markers with the reds of s.
// Slot 0 means black; slot k >= 1 refers to red ordinal k (its label is spec.labels[k-1]).
// Red ordinals appear exactly once each, in increasing order left to right.
class StrandSeq {
public:
    StrandSeq(RedSpec spec, std::vector<std::uint8_t> slots);

    static StrandSeq all_black(int n) { return StrandSeq(RedSpec{}, std::vector<std::uint8_t>(n, 0)); }

    int size() const { return static_cast<int>(slots_.size()); }  // m + n
    int black_count() const;
    const RedSpec& spec() const { return spec_; }
    const std::vector<std::uint8_t>& slots() const { return slots_; }

    bool is_black(int pos) const { return slot(pos) == 0; }   // 1-based
    bool is_red(int pos) const { return slot(pos) != 0; }
    int red_ordinal(int pos) const;                            // requires red at pos
    int red_label(int pos) const;                              // requires red at pos
    std::uint8_t slot(int pos) const {
        if (pos < 1 || pos > size()) throw argument_error("strand position out of range");
        return slots_[pos - 1];
    }

    bool operator==(const StrandSeq& o) const { return slots_ == o.slots_ && spec_ == o.spec_; }
    auto operator<=>(const StrandSeq& o) const {
        if (auto c = slots_ <=> o.slots_; c != 0) return c;
        return spec_ <=> o.spec_;
    }

    // Comma list, black = `b`, red = its label: "b,2,1,b".
    std::string to_string() const;
    static StrandSeq parse(const std::string& text, const RedSpec& spec);

private:
    RedSpec spec_;
    std::vector<std::uint8_t> slots_;
};

// All C(m+n, n) interleavings, lexicographic in the black positions.
std::vector<StrandSeq> enumerate_seq(const RedSpec& spec, int n);

// Entries j, j+1 swapped; nullopt when two reds would swap (red order violated).
std::optional<StrandSeq> transpose(const StrandSeq& seq, int j);

// s^j: replace the pair (s_j, s_{j+1}) with s_j + s_{j+1}.
RedSpec merge_spec(const RedSpec& spec, int j);

// phi_{j,a}(s): replace s_j with the pair (s_j - a, a).
RedSpec split_spec(const RedSpec& spec, int j, int a);

// phi_{j,a} on sequences: the red of ordinal j is replaced in place by the adjacent pair.
StrandSeq split_sequence(const StrandSeq& seq, int j, int a);

// Inverse of split on the image: collapse the adjacent reds of ordinals j, j+1 into one.
// Requires the pair to be adjacent in seq.
StrandSeq merge_sequence(const StrandSeq& seq, int j);

// Seq^j(s,n): sequences where red ordinal j is immediately left of red ordinal j+1.
std::vector<StrandSeq> adjacent_pair_idempotents(const RedSpec& spec, int n, int j);

bool is_adjacent_pair(const StrandSeq& seq, int j);

}  // namespace dwa
