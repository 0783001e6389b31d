#include "dwa/seq.hpp"

#include <algorithm>
#include <sstream>

namespace dwa {

StrandSeq::StrandSeq(RedSpec spec, std::vector<std::uint8_t> slots)
    : spec_(std::move(spec)), slots_(std::move(slots)) {
    int expect = 1;
    for (auto s : slots_) {
        if (s == 0) continue;
        if (s != expect) throw argument_error("red ordinals must appear once each, in order");
        ++expect;
    }
    if (expect != spec_.m() + 1)
        throw argument_error("sequence does not mention every red of the spec");
    for (int label : spec_.labels)
        if (label < 0) throw argument_error("red labels must be non-negative");
}

int StrandSeq::black_count() const {
    return static_cast<int>(std::count(slots_.begin(), slots_.end(), 0));
}

int StrandSeq::red_ordinal(int pos) const {
    std::uint8_t s = slot(pos);
    if (s == 0) throw argument_error("position " + std::to_string(pos) + " is black");
    return s;
}

int StrandSeq::red_label(int pos) const { return spec_.label(red_ordinal(pos)); }

std::string StrandSeq::to_string() const {
    std::ostringstream os;
    for (int pos = 1; pos <= size(); ++pos) {
        if (pos > 1) os << ",";
        if (is_black(pos)) os << "b";
        else os << red_label(pos);
    }
    return os.str();
}

StrandSeq StrandSeq::parse(const std::string& text, const RedSpec& spec) {
    std::vector<std::uint8_t> slots;
    int next_red = 1;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t j = text.find(',', i);
        std::string tok = text.substr(i, j == std::string::npos ? std::string::npos : j - i);
        // trim
        while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ') tok.pop_back();
        if (tok.empty()) throw argument_error("empty entry in sequence literal");
        if (tok == "b") {
            slots.push_back(0);
        } else {
            int label;
            try {
                label = std::stoi(tok);
            } catch (...) {
                throw argument_error("bad sequence entry '" + tok + "'");
            }
            if (next_red > spec.m() || spec.label(next_red) != label)
                throw argument_error("red label " + tok + " does not match the spec at ordinal " +
                                     std::to_string(next_red));
            slots.push_back(static_cast<std::uint8_t>(next_red));
            ++next_red;
        }
        if (j == std::string::npos) break;
        i = j + 1;
    }
    return StrandSeq(spec, std::move(slots));
}

std::vector<StrandSeq> enumerate_seq(const RedSpec& spec, int n) {
    if (n < 0) throw argument_error("black count must be non-negative");
    int m = spec.m();
    int total = m + n;
    std::vector<StrandSeq> out;
    // choose black positions as a lexicographic subset enumeration
    std::vector<int> blacks(n);
    for (int k = 0; k < n; ++k) blacks[k] = k;
    while (true) {
        std::vector<std::uint8_t> slots(total, 0);
        std::vector<bool> is_black_pos(total, false);
        for (int b : blacks) is_black_pos[b] = true;
        int red = 1;
        for (int pos = 0; pos < total; ++pos)
            if (!is_black_pos[pos]) slots[pos] = static_cast<std::uint8_t>(red++);
        out.emplace_back(spec, std::move(slots));
        if (n == 0) break;
        int k = n - 1;
        while (k >= 0 && blacks[k] == total - n + k) --k;
        if (k < 0) break;
        ++blacks[k];
        for (int l = k + 1; l < n; ++l) blacks[l] = blacks[l - 1] + 1;
    }
    return out;
}

std::optional<StrandSeq> transpose(const StrandSeq& seq, int j) {
    if (j < 1 || j >= seq.size()) throw argument_error("transpose position out of range");
    if (seq.is_red(j) && seq.is_red(j + 1)) return std::nullopt;
    auto slots = seq.slots();
    std::swap(slots[j - 1], slots[j]);
    return StrandSeq(seq.spec(), std::move(slots));
}

RedSpec merge_spec(const RedSpec& spec, int j) {
    if (j < 1 || j >= spec.m()) throw argument_error("merge index out of range");
    RedSpec out;
    for (int k = 1; k <= spec.m(); ++k) {
        if (k == j) out.labels.push_back(spec.label(j) + spec.label(j + 1));
        else if (k != j + 1) out.labels.push_back(spec.label(k));
    }
    return out;
}

RedSpec split_spec(const RedSpec& spec, int j, int a) {
    if (j < 1 || j > spec.m()) throw argument_error("split index out of range");
    if (a < 0 || a > spec.label(j)) throw argument_error("split amount out of range");
    RedSpec out;
    for (int k = 1; k <= spec.m(); ++k) {
        if (k == j) {
            out.labels.push_back(spec.label(j) - a);
            out.labels.push_back(a);
        } else {
            out.labels.push_back(spec.label(k));
        }
    }
    return out;
}

StrandSeq split_sequence(const StrandSeq& seq, int j, int a) {
    RedSpec target = split_spec(seq.spec(), j, a);
    std::vector<std::uint8_t> slots;
    for (int pos = 1; pos <= seq.size(); ++pos) {
        std::uint8_t s = seq.slot(pos);
        if (s == 0) {
            slots.push_back(0);
        } else if (s < j) {
            slots.push_back(s);
        } else if (s == j) {
            slots.push_back(static_cast<std::uint8_t>(j));
            slots.push_back(static_cast<std::uint8_t>(j + 1));
        } else {
            slots.push_back(static_cast<std::uint8_t>(s + 1));
        }
    }
    return StrandSeq(target, std::move(slots));
}

bool is_adjacent_pair(const StrandSeq& seq, int j) {
    for (int pos = 1; pos < seq.size(); ++pos)
        if (seq.is_red(pos) && seq.red_ordinal(pos) == j)
            return seq.is_red(pos + 1) && seq.red_ordinal(pos + 1) == j + 1;
    return false;
}

StrandSeq merge_sequence(const StrandSeq& seq, int j) {
    if (j < 1 || j >= seq.spec().m()) throw argument_error("merge index out of range");
    if (!is_adjacent_pair(seq, j)) throw argument_error("reds j, j+1 are not adjacent");
    RedSpec target = merge_spec(seq.spec(), j);
    std::vector<std::uint8_t> slots;
    for (int pos = 1; pos <= seq.size(); ++pos) {
        std::uint8_t s = seq.slot(pos);
        if (s == 0) slots.push_back(0);
        else if (s < j) slots.push_back(s);
        else if (s == j) slots.push_back(static_cast<std::uint8_t>(j));
        else if (s == j + 1) continue;
        else slots.push_back(static_cast<std::uint8_t>(s - 1));
    }
    return StrandSeq(target, std::move(slots));
}

std::vector<StrandSeq> adjacent_pair_idempotents(const RedSpec& spec, int n, int j) {
    if (j < 1 || j >= spec.m()) throw argument_error("adjacent pair index out of range");
    std::vector<StrandSeq> out;
    for (auto& seq : enumerate_seq(spec, n))
        if (is_adjacent_pair(seq, j)) out.push_back(seq);
    return out;
}

}  // namespace dwa
