#include "dwa/relations.hpp"

#include <sstream>

namespace dwa {

namespace {

Element raw(const Flavor& fl, const PrimeConfig& cfg, const StrandSeq& bottom,
            std::vector<Layer> layers, int coeff = 1) {
    Element out(fl, cfg);
    out.add_raw(bottom, std::move(layers), Fp(coeff, cfg));
    return out;
}

std::string tag(const std::string& name, const StrandSeq& seq, int j, int extra = -1) {
    std::ostringstream os;
    os << name << "[j=" << j;
    if (extra >= 0) os << ",d=" << extra;
    os << "]@(" << seq.to_string() << ")";
    return os.str();
}

}  // namespace

Element psi_squared_rhs(const Flavor& fl, const PrimeConfig& cfg, const StrandSeq& seq, int j) {
    Element rhs = Element::zero(fl, cfg);
    bool lred = seq.is_red(j), rred = seq.is_red(j + 1);
    if (lred && rred) return rhs;  // both sides vanish
    if (!lred && !rred) return rhs;  // psi^2 = 0 on black-black
    int s = lred ? seq.red_label(j) : seq.red_label(j + 1);
    int red_pos = lred ? j : j + 1;
    int black_pos = lred ? j + 1 : j;
    bool with_e = fl.kind() != AlgebraKind::cyclotomic_webster;
    int dmax = with_e ? s : 0;
    for (int d = 0; d <= dmax; ++d) {
        std::vector<Layer> layers;
        if (d > 0) layers.push_back(Layer::red_dot(red_pos, d));
        for (int r = 0; r < s - d; ++r) layers.push_back(Layer::black_dot(black_pos));
        rhs = rhs + raw(fl, cfg, seq, std::move(layers), d % 2 == 0 ? 1 : -1);
    }
    return rhs;
}

Element braid_rhs(const Flavor& fl, const PrimeConfig& cfg, const StrandSeq& seq, int j) {
    Element rhs = Element::zero(fl, cfg);
    if (!(seq.is_black(j) && seq.is_red(j + 1) && seq.is_black(j + 2))) return rhs;
    int s = seq.red_label(j + 1);
    bool with_e = fl.kind() != AlgebraKind::cyclotomic_webster;
    for (int d3 = 0; d3 <= (with_e ? s - 1 : 0) && s >= 1; ++d3) {
        for (int d1 = 0; d1 + d3 <= s - 1; ++d1) {
            int d2 = s - 1 - d1 - d3;
            std::vector<Layer> layers;
            for (int r = 0; r < d1; ++r) layers.push_back(Layer::black_dot(j));
            if (d3 > 0) layers.push_back(Layer::red_dot(j + 1, d3));
            for (int r = 0; r < d2; ++r) layers.push_back(Layer::black_dot(j + 2));
            rhs = rhs + raw(fl, cfg, seq, std::move(layers), d3 % 2 == 0 ? 1 : -1);
        }
    }
    return rhs;
}

std::vector<RelationInstance> relation_instances(const Flavor& fl, const PrimeConfig& cfg) {
    std::vector<RelationInstance> out;
    const bool with_e = fl.kind() == AlgebraKind::deformed_webster && fl.spec().m() > 0;
    const auto seqs = fl.sequences();
    const int total = fl.strands();

    auto cross = [&](const StrandSeq& seq, int j) {
        return Element::generator(fl, cfg, Layer::crossing(j), seq);
    };
    auto bdot = [&](const StrandSeq& seq, int j) {
        return Element::generator(fl, cfg, Layer::black_dot(j), seq);
    };
    auto rdot = [&](const StrandSeq& seq, int j, int d) {
        return Element::generator(fl, cfg, Layer::red_dot(j, d), seq);
    };
    auto idem = [&](const StrandSeq& seq) { return Element::idempotent(fl, cfg, seq); };

    for (const auto& seq : seqs) {
        // e(i)e(j) = delta e(i)
        out.push_back({tag("idem-square", seq, 0), idem(seq) * idem(seq) - idem(seq)});

        int max_label = 0;
        for (int pos = 1; pos <= total; ++pos)
            if (seq.is_red(pos)) max_label = std::max(max_label, seq.red_label(pos));

        for (int pos = 1; pos <= total; ++pos) {
            // dot zero rules and centrality
            out.push_back({tag("dot-central", seq, pos),
                           bdot(seq, pos) * idem(seq) - idem(seq) * bdot(seq, pos)});
            if (seq.is_red(pos))
                out.push_back({tag("dot-on-red", seq, pos), bdot(seq, pos)});
            if (with_e) {
                for (int d = 1; d <= max_label + 1; ++d) {
                    bool valid = seq.is_red(pos) && d <= seq.red_label(pos);
                    if (!valid) {
                        out.push_back({tag("edot-zero", seq, pos, d), rdot(seq, pos, d)});
                    } else {
                        out.push_back({tag("edot-central", seq, pos, d),
                                       rdot(seq, pos, d) * idem(seq) - idem(seq) * rdot(seq, pos, d)});
                    }
                }
            }
            // commuting dots
            for (int pos2 = pos + 1; pos2 <= total; ++pos2) {
                out.push_back({tag("xx-commute", seq, pos, pos2),
                               bdot(seq, pos) * bdot(seq, pos2) - bdot(seq, pos2) * bdot(seq, pos)});
                if (with_e && seq.is_red(pos2)) {
                    for (int d = 1; d <= seq.red_label(pos2); ++d)
                        out.push_back({tag("ex-commute", seq, pos, d),
                                       rdot(seq, pos2, d) * bdot(seq, pos) -
                                           bdot(seq, pos) * rdot(seq, pos2, d)});
                }
                if (with_e && seq.is_red(pos) && seq.is_red(pos2)) {
                    for (int d = 1; d <= seq.red_label(pos); ++d)
                        for (int d2 = 1; d2 <= seq.red_label(pos2); ++d2)
                            out.push_back({tag("ee-commute", seq, pos, d),
                                           rdot(seq, pos, d) * rdot(seq, pos2, d2) -
                                               rdot(seq, pos2, d2) * rdot(seq, pos, d)});
                }
            }
        }

        for (int j = 1; j < total; ++j) {
            bool lred = seq.is_red(j), rred = seq.is_red(j + 1);
            if (lred && rred) {
                out.push_back({tag("psi-red-red", seq, j), cross(seq, j)});
                continue;
            }
            StrandSeq swapped = *transpose(seq, j);

            // psi_j e(i) = e(sigma_j(i)) psi_j
            out.push_back({tag("psi-idem", seq, j),
                           cross(seq, j) * idem(seq) - idem(swapped) * cross(seq, j)});

            // far commutations
            for (int l = 1; l <= total; ++l) {
                if (l == j || l == j + 1) continue;
                out.push_back({tag("psi-x-far", seq, j, l),
                               cross(seq, j) * bdot(seq, l) - bdot(swapped, l) * cross(seq, j)});
                if (with_e && seq.is_red(l))
                    for (int d = 1; d <= seq.red_label(l); ++d)
                        out.push_back({tag("psi-E-far", seq, j, l),
                                       cross(seq, j) * rdot(seq, l, d) -
                                           rdot(swapped, l, d) * cross(seq, j)});
            }
            for (int l = j + 2; l < total; ++l) {
                if (seq.is_red(l) && seq.is_red(l + 1)) continue;
                StrandSeq swl = *transpose(seq, l);
                out.push_back({tag("psi-psi-far", seq, j, l),
                               cross(swl, j) * cross(seq, l) - cross(swapped, l) * cross(seq, j)});
            }

            // E-dots slide through crossings: psi_j E(d)_j = E(d)_{j+1} psi_j
            // and E(d)_j psi_j = psi_j E(d)_{j+1}
            if (with_e) {
                if (lred) {
                    for (int d = 1; d <= seq.red_label(j); ++d)
                        out.push_back({tag("psi-E-slide-up", seq, j, d),
                                       cross(seq, j) * rdot(seq, j, d) -
                                           rdot(swapped, j + 1, d) * cross(seq, j)});
                }
                if (rred) {
                    for (int d = 1; d <= seq.red_label(j + 1); ++d)
                        out.push_back({tag("E-psi-slide-down", seq, j, d),
                                       rdot(swapped, j, d) * cross(seq, j) -
                                           cross(seq, j) * rdot(seq, j + 1, d)});
                }
            }

            // dot slides with a unit defect on black-black
            bool bb = !lred && !rred;
            Element slide_a = bdot(swapped, j) * cross(seq, j) - cross(seq, j) * bdot(seq, j + 1);
            if (bb) slide_a = slide_a - idem(seq);
            out.push_back({tag("dot-slide-a", seq, j), slide_a});

            Element slide_b = cross(seq, j) * bdot(seq, j) - bdot(swapped, j + 1) * cross(seq, j);
            if (bb) slide_b = slide_b - idem(seq);
            out.push_back({tag("dot-slide-b", seq, j), slide_b});

            // psi^2
            Element lhs2 = cross(swapped, j) * cross(seq, j);
            out.push_back({tag("psi-squared", seq, j), lhs2 - psi_squared_rhs(fl, cfg, seq, j)});
        }

        // braid
        for (int j = 1; j + 1 < total; ++j) {
            auto word = [&](std::initializer_list<int> letters) {
                Element acc = idem(seq);
                StrandSeq running = seq;
                for (int l : letters) {  // bottom-to-top
                    if (running.is_red(l) && running.is_red(l + 1))
                        return Element::zero(fl, cfg);
                    acc = cross(running, l) * acc;
                    running = *transpose(running, l);
                }
                return acc;
            };
            Element lhs = word({j, j + 1, j}) - word({j + 1, j, j + 1});
            out.push_back({tag("braid", seq, j), lhs - braid_rhs(fl, cfg, seq, j)});
        }

        // cyclotomic: leftmost black kills the idempotent
        if (fl.cyclotomic_flavor() && seq.size() >= 1 && seq.is_black(1))
            out.push_back({tag("cyclotomic", seq, 1), idem(seq)});
    }
    return out;
}

}  // namespace dwa
