#include "fundalc/plot.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fundalc/io.hpp"

namespace fundalc {

namespace {

double qd(const Rat& r) { return static_cast<double>(r.num) / static_cast<double>(r.den); }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

struct Frame {
    // Orthonormal basis of the root span under the invariant form.
    std::vector<std::vector<double>> basis;  // 1 or 2 vectors of length rank
    const RootDatum* d;
    double scale;
    double cx, cy;

    std::pair<double, double> project(const QVec& v) const {
        std::vector<double> dv(v.size());
        for (size_t i = 0; i < v.size(); ++i) dv[i] = qd(v[i]);
        auto form = [&](const std::vector<double>& a, const std::vector<double>& b) {
            double s = 0;
            for (int i = 0; i < d->rank; ++i)
                for (int j = 0; j < d->rank; ++j)
                    s += a[static_cast<size_t>(i)] * qd(d->inner_product.at(i, j)) * b[static_cast<size_t>(j)];
            return s;
        };
        double x = form(dv, basis[0]);
        double y = basis.size() > 1 ? form(dv, basis[1]) : 0.0;
        return {cx + scale * x, cy - scale * y};
    }
};

Frame make_frame(const RootDatum& d, double scale, double cx, double cy) {
    if (d.ss_rank() < 1 || d.ss_rank() > 2)
        throw std::invalid_argument("plotting needs semisimple rank 1 or 2");
    auto form = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0;
        for (int i = 0; i < d.rank; ++i)
            for (int j = 0; j < d.rank; ++j)
                s += a[static_cast<size_t>(i)] * qd(d.inner_product.at(i, j)) * b[static_cast<size_t>(j)];
        return s;
    };
    std::vector<std::vector<double>> basis;
    for (int k = 0; k < d.ss_rank(); ++k) {
        std::vector<double> b(static_cast<size_t>(d.rank), 0.0);
        const IVec& cv = d.coroots[static_cast<size_t>(d.simples[static_cast<size_t>(k)])];
        for (int i = 0; i < d.rank; ++i) b[static_cast<size_t>(i)] = static_cast<double>(cv[static_cast<size_t>(i)]);
        for (const auto& prev : basis) {
            double c = form(b, prev);
            for (size_t i = 0; i < b.size(); ++i) b[i] -= c * prev[i];
        }
        double n = std::sqrt(form(b, b));
        for (auto& x : b) x /= n;
        basis.push_back(std::move(b));
    }
    return Frame{std::move(basis), &d, scale, cx, cy};
}

// Vertices of the base alcove: intersections of its walls (exact, then
// projected). Rank 2: triangle from the two simple walls and the affine
// wall; rank 1: segment.
std::vector<QVec> base_alcove_vertices(const RootDatum& d) {
    std::vector<std::pair<int, long long>> walls;  // (root, level): <alpha,v> = -level
    for (int i = 0; i < d.ss_rank(); ++i) walls.emplace_back(d.simples[static_cast<size_t>(i)], 0);
    walls.emplace_back(d.highest_root[0], 1);
    std::vector<QVec> verts;
    int n = static_cast<int>(walls.size());
    for (int skip = 0; skip < n; ++skip) {
        // Solve the other wall equations plus "stay in the base point's
        // affine patch" (project along the central directions).
        QMat a(n - 1 + (d.rank - d.ss_rank()), d.rank);
        QVec b;
        int row = 0;
        for (int k = 0; k < n; ++k) {
            if (k == skip) continue;
            for (int j = 0; j < d.rank; ++j)
                a.at(row, j) = Rat(d.roots[static_cast<size_t>(walls[static_cast<size_t>(k)].first)][static_cast<size_t>(j)]);
            b.push_back(Rat(-walls[static_cast<size_t>(k)].second));
            ++row;
        }
        // Central components pinned to the base point's.
        if (d.rank > d.ss_rank()) {
            QMat pairing(d.ss_rank(), d.rank);
            for (int i = 0; i < d.ss_rank(); ++i)
                for (int j = 0; j < d.rank; ++j)
                    pairing.at(i, j) = Rat(d.roots[static_cast<size_t>(d.simples[static_cast<size_t>(i)])][static_cast<size_t>(j)]);
            for (const QVec& z : kernel_basis(pairing)) {
                for (int j = 0; j < d.rank; ++j) a.at(row, j) = z[static_cast<size_t>(j)];
                b.push_back(dot(z, d.base_point));
                ++row;
            }
        }
        auto sol = solve_linear(a, b);
        if (sol) verts.push_back(*sol);
    }
    return verts;
}

}  // namespace

std::string plot_rank2_svg(const RootDatum& d, const std::vector<AffElt>& elements,
                           const PlotOptions& opt) {
    const double size = 640.0;
    Frame fr = make_frame(d, opt.scale, size / 2, size / 2);
    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << static_cast<int>(size)
        << "' height='" << static_cast<int>(size) << "' viewBox='0 0 " << static_cast<int>(size)
        << " " << static_cast<int>(size) << "'>\n";
    svg << "<rect width='100%' height='100%' fill='white'/>\n";

    // Half-plane shading for the direction overlay.
    if (opt.v) {
        auto [px, py] = fr.project(*opt.v);
        double nx = px - size / 2, ny = py - size / 2;
        double nn = std::sqrt(nx * nx + ny * ny);
        if (nn > 1e-9) {
            svg << "<line x1='" << fmt(size / 2) << "' y1='" << fmt(size / 2) << "' x2='"
                << fmt(size / 2 + 2 * nx) << "' y2='" << fmt(size / 2 + 2 * ny)
                << "' stroke='#2b8a3e' stroke-width='2' stroke-dasharray='6,3'/>\n";
        }
    }

    // Hyperplanes <alpha, x> = k for |k| <= window: draw the segment across
    // the canvas, solving within the projected plane.
    long long separating_drawn = 0;
    std::vector<QVec> bverts = base_alcove_vertices(d);
    for (int r = 0; r < d.num_positive; ++r) {
        for (long long k = -opt.window; k <= opt.window; ++k) {
            // Two points on the hyperplane within the root span patch.
            // Solve <alpha, p> = k together with central pinning and (rank 2)
            // a parametrized second direction.
            // Parametrize instead: point p0 with <alpha,p0>=k, direction t
            // orthogonal in pairing: draw p0 +- L t.
            QMat a(1 + (d.rank - d.ss_rank()), d.rank);
            QVec b;
            for (int j = 0; j < d.rank; ++j) a.at(0, j) = Rat(d.roots[static_cast<size_t>(r)][static_cast<size_t>(j)]);
            b.push_back(Rat(k));
            int row = 1;
            if (d.rank > d.ss_rank()) {
                QMat pairing(d.ss_rank(), d.rank);
                for (int i = 0; i < d.ss_rank(); ++i)
                    for (int j = 0; j < d.rank; ++j)
                        pairing.at(i, j) = Rat(d.roots[static_cast<size_t>(d.simples[static_cast<size_t>(i)])][static_cast<size_t>(j)]);
                for (const QVec& z : kernel_basis(pairing)) {
                    for (int j = 0; j < d.rank; ++j) a.at(row, j) = z[static_cast<size_t>(j)];
                    b.push_back(dot(z, d.base_point));
                    ++row;
                }
            }
            auto p0 = solve_linear(a, b);
            if (!p0) continue;
            auto [x0, y0] = fr.project(*p0);
            double dx, dy;
            if (d.ss_rank() == 1) {
                dx = 0; dy = 1;  // vertical wall marks on the line picture
            } else {
                // Direction inside the plane orthogonal (in the picture) to
                // the projected normal of alpha.
                QVec cv = to_qvec(d.coroots[static_cast<size_t>(r)]);
                auto [nx0, ny0] = fr.project(qvec_add(*p0, cv));
                double nx = nx0 - x0, ny = ny0 - y0;
                double nn = std::sqrt(nx * nx + ny * ny);
                dx = -ny / nn; dy = nx / nn;
            }
            const double len = size;
            bool separating = false;
            bool violated = false;
            if (elements.size() == 1) {
                long long mx = alcove_floor(d, elements[0], r);
                long long mb = alcove_floor_base(d, r);
                long long lo = std::min(mx, mb), hi = std::max(mx, mb);
                separating = mx != mb && lo + 1 <= k && k <= hi;
                if (separating && opt.v) {
                    // Highlight comparisons failing in a plus direction.
                    VDatum vd = make_vdatum(d, *opt.v);
                    for (int pr : vd.plus) {
                        int pp = d.is_positive(pr) ? pr : d.negative_of(pr);
                        if (pp == r && alcove_floor(d, elements[0], pr) < alcove_floor_base(d, pr))
                            violated = true;
                    }
                }
            }
            if (separating) ++separating_drawn;
            const char* stroke = violated ? "#9c36b5" : (separating ? "#e03131" : "#ced4da");
            svg << "<line x1='" << fmt(x0 - len * dx) << "' y1='" << fmt(y0 - len * dy)
                << "' x2='" << fmt(x0 + len * dx) << "' y2='" << fmt(y0 + len * dy)
                << "' stroke='" << stroke
                << "' stroke-width='" << (separating ? "2.5" : "1") << "'/>\n";
        }
    }

    // Shaded base alcove and image alcoves.
    auto draw_alcove = [&](const AffElt& x, const char* fill, const std::string& label) {
        std::ostringstream pts;
        QVec centroid(static_cast<size_t>(d.rank), Rat(0));
        for (const QVec& v : bverts) {
            QVec img = aff_act(x, v);
            centroid = qvec_add(centroid, img);
            auto [px, py] = fr.project(img);
            pts << fmt(px) << "," << fmt(py) << " ";
        }
        if (d.ss_rank() == 1) {
            // Degenerate polygon: draw a band segment instead.
            auto [x1, y1] = fr.project(aff_act(x, bverts[0]));
            auto [x2, y2] = fr.project(aff_act(x, bverts[1]));
            svg << "<line x1='" << fmt(x1) << "' y1='" << fmt(y1) << "' x2='" << fmt(x2)
                << "' y2='" << fmt(y2) << "' stroke='" << fill << "' stroke-width='10'/>\n";
        } else {
            svg << "<polygon points='" << pts.str() << "' fill='" << fill
                << "' fill-opacity='0.55' stroke='#495057'/>\n";
        }
        centroid = qvec_scale(Rat(1, static_cast<long long>(bverts.size())), centroid);
        auto [cx, cy] = fr.project(centroid);
        svg << "<text x='" << fmt(cx) << "' y='" << fmt(cy)
            << "' font-size='11' text-anchor='middle'>" << label << "</text>\n";
    };
    draw_alcove(aff_identity(d), "#74c0fc", "1");
    for (const AffElt& x : elements)
        if (!aff_is_identity(x)) draw_alcove(x, "#ffd43b", print_element(d, x));

    svg << "<!-- separating=" << separating_drawn << " -->\n";
    svg << "</svg>\n";
    return svg.str();
}

void plot_rank2_file(const RootDatum& d, const std::vector<AffElt>& elements,
                     const PlotOptions& opt, const std::string& out_path) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << plot_rank2_svg(d, elements, opt);
}

}  // namespace fundalc
