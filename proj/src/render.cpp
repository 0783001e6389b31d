#include "dwa/render.hpp"

#include <sstream>

namespace dwa {

namespace {

constexpr double kDx = 36.0;       // strand spacing
constexpr double kDy = 34.0;       // layer height
constexpr double kMargin = 26.0;

struct TermGeometry {
    const Monomial* m;
    double x0;  // left edge
};

// Follow one strand from bottom position p0 through the layers; returns the
// x position index at each height 0..layers+1.
std::vector<int> strand_track(const Monomial& m, int p0) {
    std::vector<int> at;
    int pos = p0;
    at.push_back(pos);
    for (const Layer& layer : m.layers()) {
        if (layer.kind == LayerKind::crossing) {
            if (pos == layer.pos) pos = layer.pos + 1;
            else if (pos == layer.pos + 1) pos = layer.pos;
        }
        at.push_back(pos);
    }
    return at;
}

double term_width(const Monomial& m) {
    return kMargin * 2 + kDx * static_cast<double>(m.bottom().size() > 0 ? m.bottom().size() - 1 : 0);
}

}  // namespace

std::string render_svg(const Element& elem, const RenderOptions& opts) {
    if (elem.term_count() > opts.max_terms)
        throw resource_error("render: too many terms (" + std::to_string(elem.term_count()) + ")");

    std::size_t max_layers = 0;
    for (const auto& [m, c] : elem.terms()) max_layers = std::max(max_layers, m.layers().size());
    double band = opts.splitter_j > 0 ? kDy : 0.0;
    double height = kMargin * 2 + kDy * static_cast<double>(max_layers + 1) + band + 18.0;

    std::ostringstream os;
    std::vector<TermGeometry> geoms;
    double x = 10.0;
    for (const auto& [m, c] : elem.terms()) {
        geoms.push_back({&m, x});
        x += term_width(m) + 30.0;
    }
    double width = elem.is_zero() ? 120.0 : x;

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    if (elem.is_zero()) {
        os << "  <text x=\"20\" y=\"" << height / 2 << "\" font-size=\"16\">0</text>\n";
        os << "</svg>\n";
        return os.str();
    }

    auto ypos = [&](std::size_t h) { return height - kMargin - 18.0 - kDy * static_cast<double>(h) -
                                            (opts.splitter_j > 0 && !opts.merge_top ? band : 0.0); };

    std::size_t idx = 0;
    for (const auto& [m, c] : elem.terms()) {
        const TermGeometry& g = geoms[idx++];
        const StrandSeq& bottom = m.bottom();
        auto xpos = [&](int pos) { return g.x0 + kMargin + kDx * static_cast<double>(pos - 1); };
        std::size_t levels = m.layers().size() + 1;

        // caption: "+ c" between terms, coefficient under the picture
        std::string caption = (idx > 1 ? "+ " : "") + std::to_string(c.value());
        os << "  <text x=\"" << g.x0 << "\" y=\"" << height - 6.0 << "\" font-size=\"13\">"
           << caption << "</text>\n";

        for (int p0 = 1; p0 <= bottom.size(); ++p0) {
            auto track = strand_track(m, p0);
            bool red = bottom.is_red(p0);
            std::ostringstream pts;
            for (std::size_t h = 0; h < track.size(); ++h)
                pts << xpos(track[h]) << "," << ypos(h) << " ";
            // extend to the top of the picture
            pts << xpos(track.back()) << "," << ypos(levels);
            if (red) {
                os << "  <polyline points=\"" << pts.str()
                   << "\" fill=\"none\" stroke=\"#c02020\" stroke-width=\"4\"/>\n";
                os << "  <polyline points=\"" << pts.str()
                   << "\" fill=\"none\" stroke=\"#ffffff\" stroke-width=\"1.4\"/>\n";
                os << "  <text x=\"" << xpos(p0) - 4.0 << "\" y=\"" << ypos(0) + 14.0
                   << "\" font-size=\"11\" fill=\"#c02020\">" << bottom.red_label(p0)
                   << "</text>\n";
            } else {
                os << "  <polyline points=\"" << pts.str()
                   << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.6\"/>\n";
            }
        }

        // dots sit between levels h and h+1 on their strand position
        for (std::size_t h = 0; h < m.layers().size(); ++h) {
            const Layer& layer = m.layers()[h];
            double y = (ypos(h) + ypos(h + 1)) / 2.0;
            if (layer.kind == LayerKind::black_dot) {
                os << "  <circle cx=\"" << xpos(layer.pos) << "\" cy=\"" << y
                   << "\" r=\"3.4\" fill=\"#000000\"/>\n";
            } else if (layer.kind == LayerKind::red_dot) {
                os << "  <circle cx=\"" << xpos(layer.pos) << "\" cy=\"" << y
                   << "\" r=\"3.8\" fill=\"#c02020\"/>\n";
                os << "  <text x=\"" << xpos(layer.pos) + 5.0 << "\" y=\"" << y + 4.0
                   << "\" font-size=\"10\" fill=\"#c02020\">E" << layer.d << "</text>\n";
            }
        }

        // trivalent merge vertex for splitter bimodule elements
        if (opts.splitter_j > 0) {
            const StrandSeq& gate = opts.merge_top ? m.top() : m.bottom();
            int lp = 0;
            for (int pos = 1; pos < gate.size(); ++pos)
                if (gate.is_red(pos) && gate.red_ordinal(pos) == opts.splitter_j) lp = pos;
            if (lp > 0) {
                double ymid = opts.merge_top ? ypos(levels) : ypos(0);
                double yout = opts.merge_top ? ymid - kDy * 0.8 : ymid + kDy * 0.8;
                double xm = (xpos(lp) + xpos(lp + 1)) / 2.0;
                int label = gate.red_label(lp) + gate.red_label(lp + 1);
                os << "  <path d=\"M " << xpos(lp) << " " << ymid << " L " << xm << " "
                   << (ymid + yout) / 2.0 << " L " << xpos(lp + 1) << " " << ymid
                   << "\" fill=\"none\" stroke=\"#c02020\" stroke-width=\"4\"/>\n";
                os << "  <line x1=\"" << xm << "\" y1=\"" << (ymid + yout) / 2.0 << "\" x2=\""
                   << xm << "\" y2=\"" << yout
                   << "\" stroke=\"#c02020\" stroke-width=\"5\"/>\n";
                os << "  <text x=\"" << xm + 4.0 << "\" y=\"" << yout + 4.0
                   << "\" font-size=\"11\" fill=\"#c02020\">" << label << "</text>\n";
            }
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_tikz(const Element& elem, const RenderOptions& opts) {
    if (elem.term_count() > opts.max_terms)
        throw resource_error("render: too many terms (" + std::to_string(elem.term_count()) + ")");
    std::ostringstream os;
    os << "% " << elem.to_string() << "\n";
    if (elem.is_zero()) {
        os << "\\begin{tikzpicture}\\node at (0,0) {$0$};\\end{tikzpicture}\n";
        return os.str();
    }
    std::size_t idx = 0;
    for (const auto& [m, c] : elem.terms()) {
        const StrandSeq& bottom = m.bottom();
        std::size_t levels = m.layers().size() + 1;
        os << "% term " << ++idx << ", coefficient " << c.value() << "\n";
        os << "\\begin{tikzpicture}[scale=0.6]\n";
        os << "  \\node at (-0.8," << 0.5 * static_cast<double>(levels) << ") {$"
           << c.value() << "\\cdot$};\n";
        for (int p0 = 1; p0 <= bottom.size(); ++p0) {
            auto track = strand_track(m, p0);
            bool red = bottom.is_red(p0);
            os << "  \\draw[" << (red ? "red, double, thick" : "thick") << "] ";
            for (std::size_t h = 0; h < track.size(); ++h) {
                if (h) os << " -- ";
                os << "(" << track[h] - 1 << "," << h << ")";
            }
            os << " -- (" << track.back() - 1 << "," << levels << ");\n";
            if (red)
                os << "  \\node[red, below] at (" << p0 - 1 << ",0) {$\\scriptstyle "
                   << bottom.red_label(p0) << "$};\n";
        }
        for (std::size_t h = 0; h < m.layers().size(); ++h) {
            const Layer& layer = m.layers()[h];
            double y = static_cast<double>(h) + 0.5;
            if (layer.kind == LayerKind::black_dot)
                os << "  \\filldraw (" << layer.pos - 1 << "," << y << ") circle (2.5pt);\n";
            else if (layer.kind == LayerKind::red_dot)
                os << "  \\filldraw[red] (" << layer.pos - 1 << "," << y
                   << ") circle (2.5pt) node[right] {$\\scriptstyle E_{" << layer.d << "}$};\n";
        }
        if (opts.splitter_j > 0) {
            const StrandSeq& gate = opts.merge_top ? m.top() : m.bottom();
            for (int pos = 1; pos < gate.size(); ++pos) {
                if (!(gate.is_red(pos) && gate.red_ordinal(pos) == opts.splitter_j)) continue;
                double ymid = opts.merge_top ? static_cast<double>(levels) : 0.0;
                double yout = opts.merge_top ? ymid + 0.8 : ymid - 0.8;
                double xm = static_cast<double>(pos) - 0.5;
                os << "  \\draw[red, double, thick] (" << pos - 1 << "," << ymid << ") -- (" << xm
                   << "," << (ymid + yout) / 2 << ") -- (" << pos << "," << ymid << ");\n";
                os << "  \\draw[red, double, very thick] (" << xm << "," << (ymid + yout) / 2
                   << ") -- (" << xm << "," << yout << ") node[right] {$\\scriptstyle "
                   << gate.red_label(pos) + gate.red_label(pos + 1) << "$};\n";
            }
        }
        os << "\\end{tikzpicture}\n";
    }
    return os.str();
}

}  // namespace dwa
