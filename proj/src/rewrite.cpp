#include "dwa/rewrite.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>

#include "dwa/relations.hpp"

namespace dwa {

namespace {

using Word = std::vector<int>;  // crossing positions, bottom to top, 1-based
using Perm = std::vector<int>;  // pi[b] = t, 0-based positions

Perm identity_perm(int n) {
    Perm pi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pi[static_cast<std::size_t>(i)] = i;
    return pi;
}

// Compose a top crossing: pi := sigma_q o pi (q is 1-based).
void push_top(Perm& pi, int q) {
    for (auto& t : pi) {
        if (t == q - 1) t = q;
        else if (t == q) t = q - 1;
    }
}

Perm word_perm(const Word& w, int n) {
    Perm pi = identity_perm(n);
    for (int q : w) push_top(pi, q);
    return pi;
}

Perm inverse_perm(const Perm& pi) {
    Perm inv(pi.size());
    for (std::size_t b = 0; b < pi.size(); ++b) inv[static_cast<std::size_t>(pi[b])] = static_cast<int>(b);
    return inv;
}

[[maybe_unused]] int perm_length(const Perm& pi) {
    int len = 0;
    for (std::size_t i = 0; i < pi.size(); ++i)
        for (std::size_t j = i + 1; j < pi.size(); ++j)
            if (pi[i] > pi[j]) ++len;
    return len;
}

// Left descent at q (1-based): l(sigma_q pi) < l(pi).
bool left_descent(const Perm& inv, int q) { return inv[static_cast<std::size_t>(q - 1)] > inv[static_cast<std::size_t>(q)]; }

// Canonical reduced word: peel the smallest left descent from the top.
Word canonical_word(Perm pi) {
    Word top_first;
    Perm inv = inverse_perm(pi);
    int n = static_cast<int>(pi.size());
    while (true) {
        int a = 0;
        for (int q = 1; q < n; ++q) {
            if (left_descent(inv, q)) {
                a = q;
                break;
            }
        }
        if (a == 0) break;
        top_first.push_back(a);
        push_top(pi, a);
        inv = inverse_perm(pi);
    }
    std::reverse(top_first.begin(), top_first.end());
    return top_first;
}

StrandSeq apply_word(const Word& w, const StrandSeq& bottom) {
    StrandSeq running = bottom;
    for (int q : w) {
        auto t = transpose(running, q);
        if (!t) throw error("internal: red-red crossing surfaced during word rewriting");
        running = *t;
    }
    return running;
}

// PBW-shaped term: canonical word over sorted dots over the bottom idempotent.
struct Term {
    std::vector<std::uint8_t> bottom_slots;
    std::vector<Layer> dots;
    Word word;

    auto operator<=>(const Term&) const = default;
};

using NF = std::map<Term, Fp>;

void add_nf(NF& into, const Term& t, const Fp& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = into.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
}

void merge_nf(NF& into, const NF& from) {
    for (const auto& [t, c] : from) add_nf(into, t, c);
}

class Engine {
public:
    Engine(const Flavor& flavor, const PrimeConfig& cfg,
           std::vector<std::string>* trace = nullptr)
        : flavor_(flavor), cfg_(cfg), strands_(flavor.strands()), trace_(trace) {}

    std::size_t steps() const { return steps_; }

    NF normalize_element(const Element& a) {
        NF acc;
        for (const auto& [m, c] : a.terms())
            merge_nf(acc, normalize_raw(m.bottom(), {}, m.layers(), c));
        return acc;
    }

    Element assemble(const NF& nf) const {
        Element out(flavor_, cfg_);
        for (const auto& [t, c] : nf) {
            std::vector<Layer> layers = t.dots;
            for (int q : t.word) layers.push_back(Layer::crossing(q));
            out.add_raw(StrandSeq(flavor_.spec(), t.bottom_slots), std::move(layers), c);
        }
        return out;
    }

    // coeff * (stack, bottom to top) * dots0 * e(bottom)
    NF normalize_raw(const StrandSeq& bottom, std::vector<Layer> dots0,
                     const std::vector<Layer>& stack, Fp coeff) {
        // every recursive re-entry strictly lowers the crossing count of the
        // stack, so the nesting depth is bounded by the input's crossings
        assert(++depth_ < 64);
        struct Guard {
            int& d;
            ~Guard() { --d; }
        } guard{depth_};
        NF acc;
        if (coeff.is_zero()) return acc;
        std::sort(dots0.begin(), dots0.end());
        add_term(acc, Term{bottom.slots(), std::move(dots0), {}}, coeff);
        for (const Layer& layer : stack) {
            NF next;
            for (const auto& [t, c] : acc) {
                if (layer.kind == LayerKind::crossing) mult_cross(next, t, c, layer.pos);
                else mult_dot(next, t, c, layer);
            }
            acc = std::move(next);
        }
        return acc;
    }

    // Cyclotomic dot-power bound: with only reds left of the first black strand
    // at position q, x_q^a e(i) = 0 once a reaches the sum of those labels.
    // Follows from psi^2 = x^s read backwards plus the leftmost-black relation:
    // x_q^a e(i) = psi_{q-1} x_{q-1}^{a-s} psi_{q-1} e(i) and induction on q.
    bool cyclotomic_kill(const Term& t) const {
        if (!flavor_.cyclotomic_flavor()) return false;
        int q = 0;
        int label_sum = 0;
        for (std::size_t k = 0; k < t.bottom_slots.size(); ++k) {
            if (t.bottom_slots[k] == 0) {
                q = static_cast<int>(k) + 1;
                break;
            }
            label_sum += flavor_.spec().label(static_cast<int>(t.bottom_slots[k]));
        }
        if (q == 0) return false;  // no black strand
        int power = 0;
        for (const Layer& dot : t.dots)
            if (dot.kind == LayerKind::black_dot && dot.pos == q) ++power;
        return power >= label_sum;
    }

    void add_term(NF& into, Term t, const Fp& c) const {
        if (cyclotomic_kill(t)) return;
        add_nf(into, t, c);
    }

private:
    struct Defect {
        std::vector<Layer> stack;  // raw replacement above (bottom, dots)
        int sign;                  // +1 / -1 multiplier; E-sign folded in already
    };

    StrandSeq seq_of(const Term& t) const { return StrandSeq(flavor_.spec(), t.bottom_slots); }

    void accumulate_raw(NF& out, const Term& base, const std::vector<Layer>& stack, Fp coeff) {
        merge_nf(out, normalize_raw(seq_of(base), base.dots, stack, coeff));
    }

    static std::vector<Layer> crossings(const Word& w) {
        std::vector<Layer> out;
        out.reserve(w.size());
        for (int q : w) out.push_back(Layer::crossing(q));
        return out;
    }

    // Sliding a dot from the top of the word down to the bottom. Free along
    // red strands and through mixed crossings; a unit defect per black-black
    // crossing it passes.
    void mult_dot(NF& out, const Term& t, Fp c, const Layer& dot) {
        StrandSeq bottom = seq_of(t);
        std::vector<StrandSeq> below;
        below.reserve(t.word.size() + 1);
        below.push_back(bottom);
        for (int q : t.word) {
            auto s = transpose(below.back(), q);
            if (!s) throw error("internal: invalid word in term");
            below.push_back(*s);
        }
        const StrandSeq& top = below.back();
        if (dot.kind == LayerKind::black_dot) {
            if (!top.is_black(dot.pos)) return;  // x on a red strand is zero
        } else {
            if (!flavor_.allows_red_dots()) return;
            if (!top.is_red(dot.pos) || dot.d < 1 || dot.d > top.red_label(dot.pos)) return;
        }
        int pos = dot.pos;
        for (int h = static_cast<int>(t.word.size()) - 1; h >= 0; --h) {
            int j = t.word[static_cast<std::size_t>(h)];
            if (pos != j && pos != j + 1) continue;
            const StrandSeq& ctx = below[static_cast<std::size_t>(h)];
            if (dot.kind == LayerKind::black_dot && ctx.is_black(j) && ctx.is_black(j + 1)) {
                Word shorter = t.word;
                shorter.erase(shorter.begin() + h);
                note("dot-slide", j, 1);
                accumulate_raw(out, t, crossings(shorter), pos == j ? c : -c);
            }
            pos = (pos == j) ? j + 1 : j;
        }
        Term landed = t;
        landed.dots.push_back(Layer{dot.kind, pos, dot.d});
        std::sort(landed.dots.begin(), landed.dots.end());
        add_term(out, landed, c);
    }

    void mult_cross(NF& out, const Term& t, Fp c, int q) {
        StrandSeq bottom = seq_of(t);
        StrandSeq top = apply_word(t.word, bottom);
        if (q < 1 || q >= top.size()) throw argument_error("crossing position out of range");
        if (top.is_red(q) && top.is_red(q + 1)) return;  // red-red crossing is zero

        Perm pi = word_perm(t.word, strands_);
        Perm inv = inverse_perm(pi);
        bool lengthens = inv[static_cast<std::size_t>(q - 1)] < inv[static_cast<std::size_t>(q)];

        if (lengthens) {
            Word w2 = t.word;
            w2.push_back(q);
            std::vector<Defect> defects;
            Word cw = canonicalize_word(std::move(w2), bottom, defects);
            Term t2 = t;
            t2.word = std::move(cw);
            add_term(out, t2, c);
            for (auto& d : defects)
                accumulate_raw(out, t, d.stack, d.sign > 0 ? c : -c);
            return;
        }

        // sigma_q shortens: surface a reduced word ending with q, then psi_q^2.
        std::vector<Defect> defects;
        Word w = expose(t.word, q, bottom, defects);
        for (auto& d : defects) {
            d.stack.push_back(Layer::crossing(q));
            accumulate_raw(out, t, d.stack, d.sign > 0 ? c : -c);
        }
        Word wp(w.begin(), w.end() - 1);
        StrandSeq ctx = apply_word(wp, bottom);
        bool lred = ctx.is_red(q), rred = ctx.is_red(q + 1);
        if (!lred && !rred) {
            note("psi-squared", q, 0);
            return;  // psi^2 = 0 on black-black
        }
        int s = lred ? ctx.red_label(q) : ctx.red_label(q + 1);
        int red_pos = lred ? q : q + 1;
        int black_pos = lred ? q + 1 : q;
        int dmax = flavor_.allows_red_dots() ? s : 0;
        note("psi-squared", q, dmax + 1);
        for (int d = 0; d <= dmax; ++d) {
            std::vector<Layer> stack = crossings(wp);
            if (d > 0) stack.push_back(Layer::red_dot(red_pos, d));
            for (int r = 0; r < s - d; ++r) stack.push_back(Layer::black_dot(black_pos));
            accumulate_raw(out, t, stack, d % 2 == 0 ? c : -c);
        }
    }

    // Rewrite the reduced word u into a reduced word of the same permutation
    // whose top letter is a. Precondition: a is a left descent of perm(u).
    // Collected defect stacks are relative to (bottom, dots) of the caller.
    Word expose(Word u, int a, const StrandSeq& seq0, std::vector<Defect>& defects) {
        if (u.empty()) throw error("internal: expose on the empty word");
        assert(perm_length(word_perm(u, strands_)) == static_cast<int>(u.size()));
        assert(left_descent(inverse_perm(word_perm(u, strands_)), a));
        int b = u.back();
        if (b == a) return u;
        Word u1(u.begin(), u.end() - 1);
        if (std::abs(a - b) > 1) {
            std::vector<Defect> inner;
            Word w = expose(std::move(u1), a, seq0, inner);
            for (auto& d : inner) {
                d.stack.push_back(Layer::crossing(b));
                defects.push_back(std::move(d));
            }
            w.back() = b;  // swap the commuting top pair [.., a] ++ [b] -> [.., b, a]
            w.push_back(a);
            return w;
        }
        // adjacent letters: surface [.., b, a, b] and braid it to [.., a, b, a]
        std::vector<Defect> d1;
        Word w = expose(std::move(u1), a, seq0, d1);
        for (auto& d : d1) {
            d.stack.push_back(Layer::crossing(b));
            defects.push_back(std::move(d));
        }
        Word w1(w.begin(), w.end() - 1);
        std::vector<Defect> d2;
        Word tw = expose(std::move(w1), b, seq0, d2);
        for (auto& d : d2) {
            d.stack.push_back(Layer::crossing(a));
            d.stack.push_back(Layer::crossing(b));
            defects.push_back(std::move(d));
        }
        Word tp(tw.begin(), tw.end() - 1);

        StrandSeq ctx = apply_word(tp, seq0);
        note("braid", std::min(a, b), 1);
        int j = std::min(a, b);
        if (j + 2 <= ctx.size() && ctx.is_black(j) && ctx.is_red(j + 1) && ctx.is_black(j + 2)) {
            int s = ctx.red_label(j + 1);
            int dir = (b == j) ? +1 : -1;  // [j,j+1,j] = [j+1,j,j+1] + defect
            int d3max = flavor_.allows_red_dots() ? s - 1 : 0;
            for (int d3 = 0; d3 <= d3max && s >= 1; ++d3) {
                for (int d1v = 0; d1v + d3 <= s - 1; ++d1v) {
                    int d2v = s - 1 - d1v - d3;
                    Defect def;
                    def.stack = crossings(tp);
                    for (int r = 0; r < d1v; ++r) def.stack.push_back(Layer::black_dot(j));
                    if (d3 > 0) def.stack.push_back(Layer::red_dot(j + 1, d3));
                    for (int r = 0; r < d2v; ++r) def.stack.push_back(Layer::black_dot(j + 2));
                    def.sign = dir * (d3 % 2 == 0 ? 1 : -1);
                    defects.push_back(std::move(def));
                }
            }
        }
        Word outw = std::move(tp);
        outw.push_back(a);
        outw.push_back(b);
        outw.push_back(a);
        return outw;
    }

    // Rewrite the reduced word u into the canonical word of its permutation.
    Word canonicalize_word(Word u, const StrandSeq& seq0, std::vector<Defect>& defects) {
        Word target = canonical_word(word_perm(u, strands_));
        if (u == target) return target;
        Word work = std::move(u);
        for (int k = static_cast<int>(target.size()) - 1; k >= 0; --k) {
            int a = target[static_cast<std::size_t>(k)];
            std::vector<Defect> local;
            work = expose(std::move(work), a, seq0, local);
            for (auto& d : local) {
                for (std::size_t kk = static_cast<std::size_t>(k) + 1; kk < target.size(); ++kk)
                    d.stack.push_back(Layer::crossing(target[kk]));
                defects.push_back(std::move(d));
            }
            work.pop_back();
        }
        return target;
    }

    void note(const char* rule, int pos, int terms) {
        ++steps_;
        if (trace_)
            trace_->push_back(std::string(rule) + " @" + std::to_string(pos) +
                              " terms=" + std::to_string(terms));
    }

    const Flavor& flavor_;
    PrimeConfig cfg_;
    int strands_;
    std::size_t steps_ = 0;
    std::vector<std::string>* trace_ = nullptr;
    int depth_ = 0;
};

// Extract (dots, word) from a PBW-shaped monomial; valid because in the
// canonical pre-form every dot sits below every crossing it does not commute with.
void split_monomial(const Monomial& m, std::vector<Layer>& dots, Word& word) {
    for (const Layer& layer : m.layers()) {
        if (layer.kind == LayerKind::crossing) word.push_back(layer.pos);
        else dots.push_back(layer);
    }
}

}  // namespace

NormalFormReport Rewriter::reduce(const Element& a, std::vector<std::string>* trace) const {
    if (!(a.flavor() == flavor_)) throw argument_error("flavor mismatch in reduce");
    Engine engine(flavor_, cfg_, trace);
    NF nf = engine.normalize_element(a);
    NormalFormReport report{a, engine.assemble(nf), engine.steps(), true};
    return report;
}

Proof Rewriter::prove_zero(const Element& a, int budget) const {
    NormalFormReport base = reduce(a);
    if (base.reduced.is_zero()) return Proof::proven;
    if (budget <= 0) return Proof::unknown;

    // Bounded search over braid-orientation variants of individual terms.
    std::set<std::string> seen;
    std::deque<Element> frontier;
    frontier.push_back(base.reduced);
    seen.insert(base.reduced.to_string());
    int expansions = 0;

    while (!frontier.empty() && expansions < budget) {
        Element cur = frontier.front();
        frontier.pop_front();
        for (const auto& [m, c] : cur.terms()) {
            std::vector<Layer> dots;
            Word word;
            split_monomial(m, dots, word);
            for (std::size_t h = 0; h + 2 < word.size(); ++h) {
                int x = word[h], y = word[h + 1], z = word[h + 2];
                if (x != z || std::abs(x - y) != 1) continue;
                if (++expansions > budget) break;
                // replace the window [x,y,x] by [y,x,y] plus the braid defect
                Word variant = word;
                variant[h] = y;
                variant[h + 1] = x;
                variant[h + 2] = y;
                Engine engine(flavor_, cfg_);
                StrandSeq bottom = m.bottom();
                std::vector<Layer> variant_stack;
                for (int qq : variant) variant_stack.push_back(Layer::crossing(qq));
                Element replacement = engine.assemble(
                    engine.normalize_raw(bottom, dots, variant_stack, c));
                // defect of [x,y,x] -> [y,x,y] over the context below the window
                Word below(word.begin(), word.begin() + static_cast<long>(h));
                StrandSeq ctx = m.bottom();
                bool valid = true;
                for (int qq : below) {
                    auto tseq = transpose(ctx, qq);
                    if (!tseq) { valid = false; break; }
                    ctx = *tseq;
                }
                if (!valid) continue;
                int j = std::min(x, y);
                int dir = (x == j) ? +1 : -1;
                if (j + 2 <= ctx.size() && ctx.is_black(j) && ctx.is_red(j + 1) &&
                    ctx.is_black(j + 2)) {
                    Element defect = braid_rhs(flavor_, cfg_, ctx, j);
                    // stack the defect over the word below the window
                    NF acc;
                    for (const auto& [dm, dc] : defect.terms()) {
                        std::vector<Layer> stack;
                        for (int qq : below) stack.push_back(Layer::crossing(qq));
                        for (const Layer& dl : dm.layers()) stack.push_back(dl);
                        merge_nf(acc, engine.normalize_raw(bottom, dots, stack,
                                                           dir > 0 ? c * dc : -(c * dc)));
                    }
                    replacement = replacement + engine.assemble(acc);
                }
                Element candidate = cur - Element::from_monomial(flavor_, cfg_, m, c) + replacement;
                candidate = reduce(candidate).reduced;
                if (candidate.is_zero()) return Proof::proven;
                auto key = candidate.to_string();
                if (seen.insert(key).second) frontier.push_back(candidate);
            }
        }
    }
    return Proof::unknown;
}

bool Rewriter::oracle_equal(const Element& a, const Element& b, const OracleCaps& caps) const {
    if (!(a.flavor() == flavor_) || !(b.flavor() == flavor_))
        throw argument_error("flavor mismatch in oracle_equal");
    if (cfg_.p() > caps.max_p) throw resource_error("oracle: prime exceeds cap");
    if (flavor_.strands() > caps.max_strands) throw resource_error("oracle: too many strands");

    Element diff = a - b;
    if (diff.is_zero()) return true;
    auto deg = diff.degree();
    if (!deg) throw argument_error("oracle_equal requires homogeneous inputs of equal degree");
    if (std::abs(*deg) > caps.max_degree) throw resource_error("oracle: degree exceeds cap");

    std::size_t diff_len = 0;
    for (const auto& [m, c] : diff.terms()) diff_len = std::max(diff_len, m.layers().size());
    if (diff_len > caps.max_stack_len) throw resource_error("oracle: element exceeds stack cap");
    const std::size_t max_len = std::min(caps.max_stack_len, diff_len + 4);

    using Row = std::map<Monomial, Fp>;
    std::map<Monomial, Row> basis;  // pivot monomial (largest) -> normalized row

    auto reduce_row = [&](Row row) {
        while (!row.empty()) {
            auto lead = std::prev(row.end());
            auto it = basis.find(lead->first);
            if (it == basis.end()) return row;
            Fp factor = lead->second;
            for (const auto& [mm, cc] : it->second) {
                auto [rit, inserted] = row.emplace(mm, -(factor * cc));
                if (!inserted) {
                    rit->second -= factor * cc;
                    if (rit->second.is_zero()) row.erase(rit);
                }
            }
        }
        return row;
    };

    std::deque<Row> queue;
    auto enqueue_element = [&](const Element& e) {
        Row row;
        for (const auto& [m, c] : e.terms())
            if (m.layers().size() <= max_len) row.emplace(m, c);
            else return;  // drop rows that overflow the stack cap entirely
        if (!row.empty()) queue.push_back(std::move(row));
    };

    for (const auto& inst : relation_instances(flavor_, cfg_)) {
        if (inst.element.is_zero()) continue;
        auto rdeg = inst.element.degree();
        if (!rdeg) continue;
        if (std::abs(*rdeg - *deg) > 2 * static_cast<int>(max_len)) continue;
        enqueue_element(inst.element);
    }

    std::size_t rows_processed = 0;
    const auto seqs = flavor_.sequences();

    while (!queue.empty()) {
        if (++rows_processed > caps.max_rows) throw resource_error("oracle: row budget exceeded");
        Row row = reduce_row(std::move(queue.front()));
        queue.pop_front();
        if (row.empty()) continue;
        // normalize and install
        Fp leadc = std::prev(row.end())->second;
        Fp inv = leadc.inverse();
        for (auto& [mm, cc] : row) cc *= inv;
        Monomial pivot = std::prev(row.end())->first;
        basis.emplace(pivot, row);

        // saturate: multiply by every single generator above and below
        auto saturate = [&](bool above) {
            for (int pos = 1; pos <= flavor_.strands(); ++pos) {
                std::vector<Layer> cands;
                cands.push_back(Layer::black_dot(pos));
                if (flavor_.allows_red_dots()) {
                    int max_label = 0;
                    for (const auto& s : flavor_.spec().labels) max_label = std::max(max_label, s);
                    for (int d = 1; d <= max_label; ++d) cands.push_back(Layer::red_dot(pos, d));
                }
                if (pos < flavor_.strands()) cands.push_back(Layer::crossing(pos));
                for (const Layer& g : cands) {
                    Element prod(flavor_, cfg_);
                    bool overflow = false;
                    for (const auto& [m, c] : row) {
                        if (m.layers().size() + 1 > max_len) { overflow = true; break; }
                        if (above) {
                            std::vector<Layer> layers = m.layers();
                            layers.push_back(g);
                            prod.add_raw(m.bottom(), std::move(layers), c);
                        } else {
                            StrandSeq nb = m.bottom();
                            if (g.kind == LayerKind::crossing) {
                                auto tseq = transpose(nb, g.pos);
                                if (!tseq) continue;
                                nb = *tseq;
                            }
                            std::vector<Layer> layers{g};
                            layers.insert(layers.end(), m.layers().begin(), m.layers().end());
                            prod.add_raw(nb, std::move(layers), c);
                        }
                    }
                    if (!overflow && !prod.is_zero()) enqueue_element(prod);
                }
            }
        };
        saturate(true);
        saturate(false);
    }

    Row target;
    for (const auto& [m, c] : diff.terms()) target.emplace(m, c);
    return reduce_row(std::move(target)).empty();
}

}  // namespace dwa
