#include "fundalc/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fundalc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

// C[i][j] = <alpha_i, alpha_j^vee>.
IMat cartan_matrix(char family, int n) {
    IMat c(n, n);
    for (int i = 0; i < n; ++i) c.at(i, i) = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) { c.at(i, i + 1) = -1; c.at(i + 1, i) = -1; }
    };
    switch (family) {
        case 'A': chain(n); break;
        case 'B':
            if (n < 2) fail("type B needs rank >= 2");
            chain(n);
            c.at(n - 2, n - 1) = -2; c.at(n - 1, n - 2) = -1;
            break;
        case 'C':
            if (n == 1) { /* Sp2 = SL2 */ break; }
            chain(n);
            c.at(n - 2, n - 1) = -1; c.at(n - 1, n - 2) = -2;
            break;
        case 'D':
            if (n < 3) fail("type D needs rank >= 3");
            chain(n - 1);
            c.at(n - 3, n - 1) = -1; c.at(n - 1, n - 3) = -1;
            break;
        case 'G':
            if (n != 2) fail("type G has rank 2");
            c.at(0, 1) = -1; c.at(1, 0) = -3;
            break;
        default: fail("unknown family");
    }
    return c;
}

struct Seed {
    int rank;
    std::vector<IVec> simple_roots;    // character coords
    std::vector<IVec> simple_coroots;  // lattice coords
};

Seed seed_simply_connected(const IMat& cartan) {
    int n = cartan.rows;
    Seed s;
    s.rank = n;
    for (int i = 0; i < n; ++i) {
        IVec root(n), coroot(n, 0);
        for (int j = 0; j < n; ++j) root[j] = cartan.at(i, j);
        coroot[i] = 1;
        s.simple_roots.push_back(root);
        s.simple_coroots.push_back(coroot);
    }
    return s;
}

Seed seed_adjoint(const IMat& cartan) {
    int n = cartan.rows;
    Seed s;
    s.rank = n;
    for (int i = 0; i < n; ++i) {
        IVec root(n, 0), coroot(n);
        root[i] = 1;
        for (int j = 0; j < n; ++j) coroot[j] = cartan.at(j, i);
        s.simple_roots.push_back(root);
        s.simple_coroots.push_back(coroot);
    }
    return s;
}

Seed seed_gl(int n) {
    Seed s;
    s.rank = n;
    for (int i = 0; i + 1 < n; ++i) {
        IVec v(n, 0);
        v[i] = 1; v[i + 1] = -1;
        s.simple_roots.push_back(v);
        s.simple_coroots.push_back(v);
    }
    return s;
}

DiagramAutomorphism identity_sigma(int rank) {
    DiagramAutomorphism s;
    s.m = IMat::identity(rank);
    s.mi = IMat::identity(rank);
    s.order = 1;
    return s;
}

DiagramAutomorphism sigma_from_matrix(const RootDatum& d, const IMat& m) {
    DiagramAutomorphism s;
    s.m = m;
    s.mi = unimodular_inverse(m);
    IMat p = m;
    s.order = 1;
    while (!p.is_identity()) {
        p = p * m;
        if (++s.order > 64) fail("diagram automorphism has no small finite order");
    }
    s.simple_perm.resize(d.simples.size());
    for (size_t i = 0; i < d.simples.size(); ++i) {
        int img = d.apply_to_root(m, d.simples[i]);
        int pos = -1;
        for (size_t j = 0; j < d.simples.size(); ++j)
            if (d.simples[j] == img) pos = static_cast<int>(j);
        if (pos < 0) fail("automorphism does not permute the simple roots");
        s.simple_perm[i] = pos;
    }
    return s;
}

IMat permutation_matrix(int n, const std::vector<int>& perm) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(perm[static_cast<size_t>(i)], i) = 1;
    return m;
}

struct KeyParts {
    std::string base;
    int twist = 1;
};

KeyParts split_key(const std::string& key) {
    KeyParts p;
    auto at = key.find('@');
    if (at == std::string::npos) { p.base = key; return p; }
    p.base = key.substr(0, at);
    std::string t = key.substr(at + 1);
    if (t != "2" && t != "3") fail("unsupported twist order in key '" + key + "'");
    p.twist = std::stoi(t);
    return p;
}

int parse_int_after(const std::string& s, size_t pos, size_t end) {
    if (pos >= end) fail("missing rank in catalogue key '" + s + "'");
    for (size_t i = pos; i < end; ++i)
        if (!isdigit(static_cast<unsigned char>(s[i]))) fail("bad rank in catalogue key '" + s + "'");
    return std::stoi(s.substr(pos, end - pos));
}

}  // namespace

int RootDatum::root_index(const IVec& c) const {
    auto it = root_lookup_.find(c);
    return it == root_lookup_.end() ? -1 : it->second;
}

int RootDatum::coroot_index(const IVec& c) const {
    auto it = coroot_lookup_.find(c);
    return it == coroot_lookup_.end() ? -1 : it->second;
}

int RootDatum::root_index_checked(const IVec& c) const {
    int i = root_index(c);
    if (i < 0) fail("vector is not a root of " + label);
    return i;
}

WeylElt RootDatum::simple_reflection(int simple_pos) const {
    return reflection(simples[static_cast<size_t>(simple_pos)]);
}

WeylElt RootDatum::reflection(int root_idx) const {
    // v |-> v - <alpha, v> alpha^vee
    IMat m = IMat::identity(rank);
    const IVec& a = roots[static_cast<size_t>(root_idx)];
    const IVec& av = coroots[static_cast<size_t>(root_idx)];
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) m.at(i, j) -= av[i] * a[j];
    return {m};
}

int RootDatum::apply_to_root(const IMat& isometry, int root_idx) const {
    IVec cv = isometry.apply(coroots[static_cast<size_t>(root_idx)]);
    int i = coroot_index(cv);
    if (i < 0) fail("isometry does not permute the coroots of " + label);
    return i;
}

const std::vector<WeylElt>& RootDatum::weyl_elements() const {
    std::call_once(weyl_once_, [this] {
        std::vector<WeylElt> out;
        std::unordered_map<IVec, int, IVecHash> seen;
        out.push_back({IMat::identity(rank)});
        seen.emplace(out[0].m.a, 0);
        for (size_t head = 0; head < out.size(); ++head) {
            WeylElt w = out[head];
            for (int i = 0; i < ss_rank(); ++i) {
                WeylElt nw = w * simple_reflection(i);
                if (seen.emplace(nw.m.a, 1).second) out.push_back(nw);
            }
        }
        weyl_cache_ = std::move(out);
    });
    return weyl_cache_;
}

const std::vector<QVec>& RootDatum::fundamental_coweights() const {
    std::call_once(fcw_once_, [this] {
        QMat a(ss_rank(), rank);
        for (int i = 0; i < ss_rank(); ++i)
            for (int j = 0; j < rank; ++j)
                a.at(i, j) = Rat(roots[static_cast<size_t>(simples[static_cast<size_t>(i)])][static_cast<size_t>(j)]);
        std::vector<QVec> out;
        for (int i = 0; i < ss_rank(); ++i) {
            QVec b(ss_rank(), Rat(0));
            b[static_cast<size_t>(i)] = Rat(1);
            auto sol = solve_linear(a, b);
            if (!sol) fail("simple roots are linearly dependent");
            out.push_back(*sol);
        }
        fcw_cache_ = std::move(out);
    });
    return fcw_cache_;
}

void RootDatum::finalize() {
    // Close the simple root/coroot pairs under the simple reflections.
    std::vector<std::pair<IVec, IVec>> pairs;
    std::set<IVec> seen;
    std::vector<std::pair<IVec, IVec>> simple_pairs;
    for (int s : simples)
        simple_pairs.emplace_back(roots[static_cast<size_t>(s)], coroots[static_cast<size_t>(s)]);
    for (const auto& sp : simple_pairs)
        if (seen.insert(sp.first).second) pairs.push_back(sp);
    for (size_t head = 0; head < pairs.size(); ++head) {
        auto cur = pairs[head];
        for (const auto& sp : simple_pairs) {
            long long c1 = dot(cur.first, sp.second);   // <alpha, s^vee>
            long long c2 = dot(sp.first, cur.second);   // <s, alpha^vee>
            IVec root = cur.first, coroot = cur.second;
            for (size_t j = 0; j < root.size(); ++j) root[j] -= c1 * sp.first[j];
            for (size_t j = 0; j < coroot.size(); ++j) coroot[j] -= c2 * sp.second[j];
            if (seen.insert(root).second) pairs.emplace_back(root, coroot);
        }
    }

    // Expansion over the simple roots; classifies positives.
    QMat smat(static_cast<int>(simple_pairs.size()), rank);
    for (size_t i = 0; i < simple_pairs.size(); ++i)
        for (int j = 0; j < rank; ++j)
            smat.at(static_cast<int>(i), j) = Rat(simple_pairs[i].first[static_cast<size_t>(j)]);
    // Solve c * S = alpha, i.e. S^T c = alpha.
    QMat st(rank, static_cast<int>(simple_pairs.size()));
    for (int i = 0; i < smat.rows; ++i)
        for (int j = 0; j < smat.cols; ++j) st.at(j, i) = smat.at(i, j);

    struct Entry { IVec root, coroot, coeffs; int ht; };
    std::vector<Entry> pos;
    for (const auto& pr : pairs) {
        auto sol = solve_linear(st, to_qvec(pr.first));
        if (!sol) fail("root outside the span of the simple roots");
        IVec coeffs(sol->size());
        int ht = 0;
        int sign = 0;
        for (size_t j = 0; j < sol->size(); ++j) {
            if (!(*sol)[j].is_integer()) fail("root with non-integral simple coordinates");
            coeffs[j] = (*sol)[j].num;
            ht += static_cast<int>(coeffs[j]);
            if (coeffs[j] > 0) { if (sign < 0) fail("root with mixed-sign coordinates"); sign = 1; }
            if (coeffs[j] < 0) { if (sign > 0) fail("root with mixed-sign coordinates"); sign = -1; }
        }
        if (sign == 0) fail("zero vector in root closure");
        if (sign > 0) pos.push_back({pr.first, pr.second, coeffs, ht});
    }
    std::sort(pos.begin(), pos.end(), [](const Entry& a, const Entry& b) {
        if (a.ht != b.ht) return a.ht < b.ht;
        return a.root < b.root;
    });

    num_positive = static_cast<int>(pos.size());
    roots.clear(); coroots.clear(); simple_coords.clear(); height.clear();
    roots.reserve(2 * pos.size());
    for (const auto& e : pos) { roots.push_back(e.root); coroots.push_back(e.coroot); }
    for (const auto& e : pos) { roots.push_back(ivec_neg(e.root)); coroots.push_back(ivec_neg(e.coroot)); }
    for (const auto& e : pos) { simple_coords.push_back(e.coeffs); height.push_back(e.ht); }
    for (const auto& e : pos) { simple_coords.push_back(ivec_neg(e.coeffs)); height.push_back(-e.ht); }

    root_lookup_.clear(); coroot_lookup_.clear();
    for (int i = 0; i < num_roots(); ++i) {
        root_lookup_.emplace(roots[static_cast<size_t>(i)], i);
        coroot_lookup_.emplace(coroots[static_cast<size_t>(i)], i);
    }

    simples.clear();
    for (const auto& sp : simple_pairs) simples.push_back(root_index_checked(sp.first));

    // Dynkin components.
    int n = ss_rank();
    component_of_simple.assign(static_cast<size_t>(n), -1);
    num_components = 0;
    for (int i = 0; i < n; ++i) {
        if (component_of_simple[static_cast<size_t>(i)] >= 0) continue;
        std::vector<int> stack{i};
        component_of_simple[static_cast<size_t>(i)] = num_components;
        while (!stack.empty()) {
            int a = stack.back(); stack.pop_back();
            for (int b = 0; b < n; ++b) {
                if (component_of_simple[static_cast<size_t>(b)] >= 0) continue;
                long long c = dot(roots[static_cast<size_t>(simples[static_cast<size_t>(a)])],
                                  coroots[static_cast<size_t>(simples[static_cast<size_t>(b)])]);
                if (c != 0) {
                    component_of_simple[static_cast<size_t>(b)] = num_components;
                    stack.push_back(b);
                }
            }
        }
        ++num_components;
    }
    component_of_root.assign(static_cast<size_t>(num_roots()), -1);
    for (int i = 0; i < num_roots(); ++i)
        for (int j = 0; j < n; ++j)
            if (simple_coords[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
                component_of_root[static_cast<size_t>(i)] = component_of_simple[static_cast<size_t>(j)];
                break;
            }

    highest_root.assign(static_cast<size_t>(num_components), -1);
    for (int i = 0; i < num_positive; ++i) {
        int c = component_of_root[static_cast<size_t>(i)];
        int& h = highest_root[static_cast<size_t>(c)];
        if (h < 0 || height[static_cast<size_t>(i)] > height[static_cast<size_t>(h)]) h = i;
    }
    coxeter_number.assign(static_cast<size_t>(num_components), 0);
    for (int c = 0; c < num_components; ++c) {
        int top = height[static_cast<size_t>(highest_root[static_cast<size_t>(c)])];
        for (int i = 0; i < num_positive; ++i)
            if (component_of_root[static_cast<size_t>(i)] == c && i != highest_root[static_cast<size_t>(c)] &&
                height[static_cast<size_t>(i)] == top)
                fail("highest root is not unique; component is not irreducible");
        coxeter_number[static_cast<size_t>(c)] = top + 1;
    }

    two_rho.assign(static_cast<size_t>(rank), 0);
    for (int i = 0; i < num_positive; ++i) two_rho = ivec_add(two_rho, roots[static_cast<size_t>(i)]);

    // Interior point of the base alcove: -sum_c y_c / h_c where
    // <alpha_i, y_c> = 1 on the simples of component c.
    base_point.assign(static_cast<size_t>(rank), Rat(0));
    {
        QMat a(n, rank);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < rank; ++j)
                a.at(i, j) = Rat(roots[static_cast<size_t>(simples[static_cast<size_t>(i)])][static_cast<size_t>(j)]);
        for (int c = 0; c < num_components; ++c) {
            QVec b(static_cast<size_t>(n), Rat(0));
            for (int i = 0; i < n; ++i)
                if (component_of_simple[static_cast<size_t>(i)] == c) b[static_cast<size_t>(i)] = Rat(1);
            auto y = solve_linear(a, b);
            if (!y) fail("cannot place base alcove interior point");
            Rat inv_h = Rat(1, coxeter_number[static_cast<size_t>(c)]);
            for (int j = 0; j < rank; ++j) base_point[static_cast<size_t>(j)] -= inv_h * (*y)[static_cast<size_t>(j)];
        }
    }

    // W-invariant inner product: per component sum of alpha (x) alpha over the
    // component's roots, rescaled so short coroots have squared length 2;
    // plus the standard form on the central complement. For GL_n this works
    // out to the standard dot product.
    {
        inner_product = QMat(rank, rank);
        for (int c = 0; c < num_components; ++c) {
            QMat braw(rank, rank);
            for (int r = 0; r < num_roots(); ++r) {
                if (component_of_root[static_cast<size_t>(r)] != c) continue;
                for (int i = 0; i < rank; ++i)
                    for (int j = 0; j < rank; ++j)
                        braw.at(i, j) += Rat(roots[static_cast<size_t>(r)][static_cast<size_t>(i)] *
                                             roots[static_cast<size_t>(r)][static_cast<size_t>(j)]);
            }
            std::optional<Rat> min_sq;
            for (int r = 0; r < num_positive; ++r) {
                if (component_of_root[static_cast<size_t>(r)] != c) continue;
                QVec cv = to_qvec(coroots[static_cast<size_t>(r)]);
                Rat q = dot(cv, braw.apply(cv));
                if (!min_sq || q < *min_sq) min_sq = q;
            }
            Rat scale = Rat(2) / *min_sq;
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < rank; ++j)
                    inner_product.at(i, j) += scale * braw.at(i, j);
        }
        // Central complement: solve v = r + z with r in span(coroots) and
        // <alpha_i, z> = 0, then add z . z' in standard coordinates.
        if (n < rank) {
            QMat pairing(n, rank);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < rank; ++j)
                    pairing.at(i, j) = Rat(roots[static_cast<size_t>(simples[static_cast<size_t>(i)])][static_cast<size_t>(j)]);
            std::vector<QVec> zbasis = kernel_basis(pairing);
            // Coroot span basis: simple coroots.
            QMat mix(rank, n + static_cast<int>(zbasis.size()));
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < rank; ++i)
                    mix.at(i, j) = Rat(coroots[static_cast<size_t>(simples[static_cast<size_t>(j)])][static_cast<size_t>(i)]);
            for (size_t j = 0; j < zbasis.size(); ++j)
                for (int i = 0; i < rank; ++i)
                    mix.at(i, n + static_cast<int>(j)) = zbasis[j][static_cast<size_t>(i)];
            std::vector<QVec> zpart;  // central projection of each basis vector
            for (int e = 0; e < rank; ++e) {
                QVec rhs(static_cast<size_t>(rank), Rat(0));
                rhs[static_cast<size_t>(e)] = Rat(1);
                auto sol = solve_linear(mix, rhs);
                if (!sol) fail("cocharacter space does not split over the coroot span");
                QVec z(static_cast<size_t>(rank), Rat(0));
                for (size_t j = 0; j < zbasis.size(); ++j)
                    z = qvec_add(z, qvec_scale((*sol)[static_cast<size_t>(n) + j], zbasis[j]));
                zpart.push_back(z);
            }
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < rank; ++j)
                    inner_product.at(i, j) += dot(zpart[static_cast<size_t>(i)], zpart[static_cast<size_t>(j)]);
        }
    }

    if (sigma.m.rows == 0) {
        sigma = identity_sigma(rank);
        sigma.simple_perm.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) sigma.simple_perm[static_cast<size_t>(i)] = i;
    }
}

void RootDatum::validate() const {
    if (num_roots() != 2 * num_positive) fail(label + ": positives and negatives mismatched");
    for (int i = 0; i < num_roots(); ++i) {
        if (dot(roots[static_cast<size_t>(i)], coroots[static_cast<size_t>(i)]) != 2)
            fail(label + ": <alpha, alpha^vee> != 2");
        if (root_index(ivec_neg(roots[static_cast<size_t>(i)])) != negative_of(i))
            fail(label + ": root set is not symmetric");
    }
    // Reflection closure on both sides.
    for (int i = 0; i < num_roots(); ++i) {
        WeylElt s = reflection(i);
        for (int j = 0; j < num_roots(); ++j) {
            IVec cv = s.m.apply(coroots[static_cast<size_t>(j)]);
            if (coroot_index(cv) < 0) fail(label + ": coroots not closed under reflections");
            // s_alpha on characters: beta - <beta, alpha^vee> alpha
            long long cc = dot(roots[static_cast<size_t>(j)], coroots[static_cast<size_t>(i)]);
            IVec img = roots[static_cast<size_t>(j)];
            for (size_t k = 0; k < img.size(); ++k) img[k] -= cc * roots[static_cast<size_t>(i)][k];
            if (root_index(img) < 0) fail(label + ": roots not closed under reflections");
        }
    }
    // Cartan integers against the invariant form.
    for (int i = 0; i < num_roots(); ++i)
        for (int j = 0; j < num_roots(); ++j) {
            QVec ci = to_qvec(coroots[static_cast<size_t>(i)]);
            QVec cj = to_qvec(coroots[static_cast<size_t>(j)]);
            Rat lhs = Rat(dot(roots[static_cast<size_t>(i)], coroots[static_cast<size_t>(j)]));
            Rat rhs = Rat(2) * dot(ci, inner_product.apply(cj)) / dot(ci, inner_product.apply(ci));
            if (lhs != rhs) fail(label + ": pairing disagrees with the invariant form");
        }
    // sigma sanity.
    if (!(sigma.m * sigma.mi).is_identity()) fail(label + ": sigma inverse is wrong");
    IMat p = IMat::identity(rank);
    for (int k = 0; k < sigma.order; ++k) p = p * sigma.m;
    if (!p.is_identity()) fail(label + ": sigma order is wrong");
    for (int i = 0; i < num_roots(); ++i) {
        int img = apply_to_root(sigma.m, i);
        if (is_positive(i) != is_positive(img)) fail(label + ": sigma does not preserve positivity");
    }
    for (size_t i = 0; i < simples.size(); ++i) {
        int img = apply_to_root(sigma.m, simples[i]);
        if (img != simples[static_cast<size_t>(sigma.simple_perm[i])])
            fail(label + ": sigma simple permutation is wrong");
    }
    for (int i = 0; i < num_positive; ++i) {
        Rat v = pair(i, sigma_cochar(sigma, base_point));
        if (!(Rat(-1) < v && v < Rat(0))) fail(label + ": sigma does not fix the base alcove");
    }
}

IVec sigma_cochar(const DiagramAutomorphism& s, const IVec& v) { return s.m.apply(v); }
QVec sigma_cochar(const DiagramAutomorphism& s, const QVec& v) { return s.m.apply(v); }
IVec sigma_char(const DiagramAutomorphism& s, const IVec& chi) { return s.mi.apply_transpose(chi); }
WeylElt sigma_weyl(const DiagramAutomorphism& s, const WeylElt& w) { return {s.m * w.m * s.mi}; }

DiagramAutomorphism sigma_power(const RootDatum& d, int k) {
    int o = d.sigma.order;
    int e = ((k % o) + o) % o;
    IMat m = IMat::identity(d.rank);
    for (int i = 0; i < e; ++i) m = m * d.sigma.m;
    return sigma_from_matrix(d, m);
}

std::pair<QVec, WeylElt> dominant_representative(const RootDatum& d, const QVec& v) {
    QVec cur = v;
    WeylElt w{IMat::identity(d.rank)};
    for (;;) {
        int neg = -1;
        for (int i = 0; i < d.ss_rank(); ++i)
            if (d.pair(d.simples[static_cast<size_t>(i)], cur).sign() < 0) { neg = i; break; }
        if (neg < 0) return {cur, w};
        WeylElt s = d.simple_reflection(neg);
        cur = s.m.apply(cur);
        w = s * w;
    }
}

RootDatum build_root_datum(const std::string& key) {
    if (key.rfind("file:", 0) == 0) {
        std::string path = key.substr(5);
        std::ifstream in(path);
        if (!in) fail("cannot open datum file '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return datum_from_json(ss.str());
    }

    KeyParts kp = split_key(key);
    const std::string& base = kp.base;

    RootDatum d;
    d.label = key;
    Seed seed;
    char family = 0;
    int crank = 0;     // Cartan rank
    bool adjoint = false;
    bool is_gl = false;

    auto lattice_suffix = [&](size_t pos) {
        std::string suf = base.substr(pos);
        if (suf == "-sc") return false;
        if (suf == "-ad") return true;
        fail("catalogue key '" + key + "' needs -sc or -ad");
        return false;
    };

    if (base.rfind("GL", 0) == 0) {
        int n = parse_int_after(base, 2, base.size());
        if (n < 1) fail("GL needs n >= 1");
        seed = seed_gl(n);
        is_gl = true;
        family = 'A'; crank = n - 1;
    } else if (base.rfind("SL", 0) == 0) {
        int n = parse_int_after(base, 2, base.size());
        if (n < 2) fail("SL needs n >= 2");
        family = 'A'; crank = n - 1;
        seed = seed_simply_connected(cartan_matrix('A', crank));
    } else if (base.rfind("PGL", 0) == 0) {
        int n = parse_int_after(base, 3, base.size());
        if (n < 2) fail("PGL needs n >= 2");
        family = 'A'; crank = n - 1;
        seed = seed_adjoint(cartan_matrix('A', crank));
        adjoint = true;
    } else if (base.rfind("Sp", 0) == 0) {
        size_t dash = base.find('-');
        if (dash == std::string::npos) fail("Sp key needs -sc");
        int m = parse_int_after(base, 2, dash);
        if (m % 2 != 0 || m < 2) fail("Sp needs even dimension");
        if (lattice_suffix(dash)) fail("only Sp{2n}-sc is in the catalogue");
        family = 'C'; crank = m / 2;
        seed = seed_simply_connected(cartan_matrix(crank == 1 ? 'A' : 'C', crank));
    } else if (base.rfind("SO", 0) == 0) {
        size_t dash = base.find('-');
        if (dash == std::string::npos) fail("SO key needs -sc or -ad");
        int m = parse_int_after(base, 2, dash);
        adjoint = lattice_suffix(dash);
        if (m % 2 == 1) {
            family = 'B'; crank = (m - 1) / 2;
            if (crank < 2) fail("SO{2n+1} needs n >= 2");
        } else {
            family = 'D'; crank = m / 2;
            if (crank < 3) fail("SO{2n} needs n >= 3");
        }
        IMat c = cartan_matrix(family, crank);
        seed = adjoint ? seed_adjoint(c) : seed_simply_connected(c);
    } else if (base == "G2-sc") {
        family = 'G'; crank = 2;
        seed = seed_simply_connected(cartan_matrix('G', 2));
    } else {
        fail("unknown catalogue key '" + key + "'");
    }

    d.rank = seed.rank;
    for (size_t i = 0; i < seed.simple_roots.size(); ++i) {
        d.roots.push_back(seed.simple_roots[i]);
        d.coroots.push_back(seed.simple_coroots[i]);
        d.simples.push_back(static_cast<int>(i));
    }
    d.finalize();

    if (kp.twist != 1) {
        IMat m;
        int n = d.ss_rank();
        if (is_gl) {
            if (kp.twist != 2 || d.rank < 2) fail("GL twist must be @2 with n >= 2");
            m = IMat(d.rank, d.rank);
            for (int i = 0; i < d.rank; ++i) m.at(i, d.rank - 1 - i) = -1;
        } else if (family == 'A') {
            if (kp.twist != 2 || n < 2) fail("type A twist must be @2 with rank >= 2");
            std::vector<int> perm(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = n - 1 - i;
            m = permutation_matrix(n, perm);
        } else if (family == 'D') {
            std::vector<int> perm(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
            if (kp.twist == 2) {
                std::swap(perm[static_cast<size_t>(n - 2)], perm[static_cast<size_t>(n - 1)]);
            } else {
                if (n != 4) fail("@3 twist needs D4");
                perm[0] = 2; perm[2] = 3; perm[3] = 0;
            }
            m = permutation_matrix(n, perm);
        } else {
            fail("no twist of order " + std::to_string(kp.twist) + " for this type");
        }
        d.sigma = sigma_from_matrix(d, m);
        if (d.sigma.order != kp.twist) fail("constructed twist has the wrong order");
    }

    d.validate();
    return d;
}

std::vector<std::pair<std::string, std::string>> catalogue_entries() {
    return {
        {"GL{n}", "general linear; infinite length-zero subgroup, use --omega-window"},
        {"SL{n}", "special linear, simply connected; add @2 for the diagram flip (n >= 3)"},
        {"PGL{n}", "projective linear, adjoint; @2 as for SL"},
        {"Sp{2n}-sc", "symplectic, simply connected"},
        {"SO{2n+1}-sc | SO{2n+1}-ad", "odd orthogonal"},
        {"SO{2n}-sc | SO{2n}-ad", "even orthogonal; @2 swaps the fork, SO8-sc@3 is triality"},
        {"G2-sc", "exceptional G2"},
        {"file:<path>", "user-supplied datum JSON (validated on load)"},
    };
}

RootDatum product_datum(const RootDatum& a, const RootDatum& b) {
    RootDatum d;
    d.label = a.label + "x" + b.label;
    d.rank = a.rank + b.rank;
    auto lift = [&](const IVec& v, int offset, int total) {
        IVec r(static_cast<size_t>(total), 0);
        for (size_t i = 0; i < v.size(); ++i) r[static_cast<size_t>(offset) + i] = v[i];
        return r;
    };
    for (int i = 0; i < a.ss_rank(); ++i) {
        d.roots.push_back(lift(a.roots[static_cast<size_t>(a.simples[static_cast<size_t>(i)])], 0, d.rank));
        d.coroots.push_back(lift(a.coroots[static_cast<size_t>(a.simples[static_cast<size_t>(i)])], 0, d.rank));
        d.simples.push_back(static_cast<int>(d.simples.size()));
    }
    for (int i = 0; i < b.ss_rank(); ++i) {
        d.roots.push_back(lift(b.roots[static_cast<size_t>(b.simples[static_cast<size_t>(i)])], a.rank, d.rank));
        d.coroots.push_back(lift(b.coroots[static_cast<size_t>(b.simples[static_cast<size_t>(i)])], a.rank, d.rank));
        d.simples.push_back(static_cast<int>(d.simples.size()));
    }
    d.finalize();
    IMat sm(d.rank, d.rank);
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j) sm.at(i, j) = a.sigma.m.at(i, j);
    for (int i = 0; i < b.rank; ++i)
        for (int j = 0; j < b.rank; ++j) sm.at(a.rank + i, a.rank + j) = b.sigma.m.at(i, j);
    d.sigma = sigma_from_matrix(d, sm);
    d.validate();
    return d;
}

namespace {

json ivec_to_json(const IVec& v) { return json(v); }
json imat_to_json(const IMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}
IMat imat_from_json(const json& j) {
    IMat m(static_cast<int>(j.size()), j.empty() ? 0 : static_cast<int>(j[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int jj = 0; jj < m.cols; ++jj) m.at(i, jj) = j[static_cast<size_t>(i)][static_cast<size_t>(jj)].get<long long>();
    return m;
}

}  // namespace

std::string datum_to_json(const RootDatum& d) {
    json j;
    j["label"] = d.label;
    j["rank"] = d.rank;
    json basis = json::array();
    for (int i = 0; i < d.rank; ++i) {
        IVec e(static_cast<size_t>(d.rank), 0);
        e[static_cast<size_t>(i)] = 1;
        basis.push_back(ivec_to_json(e));
    }
    j["basis"] = basis;
    json roots = json::array(), coroots = json::array();
    for (const auto& r : d.roots) roots.push_back(ivec_to_json(r));
    for (const auto& c : d.coroots) coroots.push_back(ivec_to_json(c));
    j["roots"] = roots;
    j["coroots"] = coroots;
    j["simples"] = d.simples;
    j["num_positive"] = d.num_positive;
    j["pairing"] = imat_to_json(IMat::identity(d.rank));
    j["sigma"] = {{"matrix", imat_to_json(d.sigma.m)}, {"order", d.sigma.order}};
    return j.dump(2);
}

RootDatum datum_from_json(const std::string& text) {
    json j = json::parse(text);
    RootDatum d;
    d.label = j.value("label", std::string("custom"));
    d.rank = j.at("rank").get<int>();
    IMat pairing = imat_from_json(j.at("pairing"));
    if (!pairing.is_identity())
        fail("datum file: pairing must be the identity (characters in dual coordinates)");
    std::vector<IVec> roots, coroots;
    for (const auto& r : j.at("roots")) roots.push_back(r.get<IVec>());
    for (const auto& c : j.at("coroots")) coroots.push_back(c.get<IVec>());
    if (roots.size() != coroots.size()) fail("datum file: roots/coroots size mismatch");
    std::vector<int> simples = j.at("simples").get<std::vector<int>>();
    for (int s : simples) {
        if (s < 0 || s >= static_cast<int>(roots.size())) fail("datum file: bad simple index");
        d.roots.push_back(roots[static_cast<size_t>(s)]);
        d.coroots.push_back(coroots[static_cast<size_t>(s)]);
        d.simples.push_back(static_cast<int>(d.simples.size()));
    }
    d.finalize();
    // The closure of the declared simples must reproduce the declared roots.
    if (static_cast<int>(roots.size()) != d.num_roots()) fail("datum file: root set is not the closure of the simples");
    for (const auto& r : roots)
        if (d.root_index(r) < 0) fail("datum file: declared root missing from closure");
    if (j.contains("sigma")) {
        IMat m = imat_from_json(j.at("sigma").at("matrix"));
        d.sigma = sigma_from_matrix(d, m);
        if (j.at("sigma").contains("order") &&
            j.at("sigma").at("order").get<int>() != d.sigma.order)
            fail("datum file: declared sigma order is wrong");
    }
    d.validate();
    return d;
}

}  // namespace fundalc
