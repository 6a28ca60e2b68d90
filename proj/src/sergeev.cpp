#include "schurq/sergeev.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schurq {

namespace test_hooks {
bool bk_sign_fault = false;
} // namespace test_hooks

Perm::Perm(int k) : img_(k) {
    std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> img) : img_(std::move(img)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
}

Perm Perm::adjacent(int k, int i) {
    if (i < 0 || i + 1 >= k)
        throw std::invalid_argument("adjacent transposition out of range");
    Perm p(k);
    std::swap(p.img_[i], p.img_[i + 1]);
    return p;
}

Perm Perm::operator*(const Perm& v) const {
    if (k() != v.k())
        throw std::invalid_argument("permutation size mismatch");
    Perm out(k());
    for (int j = 0; j < k(); ++j)
        out.img_[j] = img_[v.img_[j]];
    return out;
}

Perm Perm::inverse() const {
    Perm out(k());
    for (int j = 0; j < k(); ++j)
        out.img_[img_[j]] = j;
    return out;
}

bool Perm::is_identity() const {
    for (int j = 0; j < k(); ++j)
        if (img_[j] != j)
            return false;
    return true;
}

long Perm::lehmer_rank() const {
    const int n = k();
    long rank = 0;
    long fact = 1;
    for (int j = 2; j <= n; ++j)
        fact *= j;
    for (int j = 0; j < n; ++j) {
        if (n - j > 1)
            fact /= (n - j);
        int smaller = 0;
        for (int m = j + 1; m < n; ++m)
            if (img_[m] < img_[j])
                ++smaller;
        rank += smaller * fact;
    }
    return rank;
}

std::string Perm::str() const {
    std::ostringstream os;
    os << "(";
    for (int j = 0; j < k(); ++j) {
        if (j)
            os << " ";
        os << img_[j] + 1;
    }
    os << ")";
    return os.str();
}

std::vector<int> lex_min_reduced_word(const Perm& w) {
    // Greedy: take the smallest left descent i (w^{-1}(i) > w^{-1}(i+1)),
    // strip s_i from the left, repeat.
    std::vector<int> word;
    Perm v = w;
    while (!v.is_identity()) {
        Perm vinv = v.inverse();
        int pick = -1;
        for (int i = 0; i + 1 < v.k(); ++i)
            if (vinv(i) > vinv(i + 1)) {
                pick = i;
                break;
            }
        word.push_back(pick);
        v = Perm::adjacent(v.k(), pick) * v;
    }
    return word;
}

std::vector<int> adjacent_word(const Perm& w) {
    // Right-multiply by descents until sorted; reversing yields a word
    // with w = s_{a_m} ... s_{a_1} applied left to right.
    std::vector<int> swaps;
    Perm v = w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < v.k(); ++i) {
            if (v(i) > v(i + 1)) {
                swaps.push_back(i);
                v = v * Perm::adjacent(v.k(), i);
                changed = true;
            }
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

BkElem BkElem::unit(int k) {
    return basis(k, 0, Perm(k));
}

BkElem BkElem::basis(int k, uint32_t mask, const Perm& w, FieldElem coeff) {
    if (w.k() != k)
        throw std::invalid_argument("permutation size mismatch");
    if (k < 32 && mask >= (1u << k))
        throw std::invalid_argument("Clifford subset out of range");
    BkElem e(k);
    if (!coeff.is_zero())
        e.terms_[{mask, w}] = std::move(coeff);
    return e;
}

BkElem BkElem::clifford(int k, uint32_t mask, FieldElem coeff) {
    return basis(k, mask, Perm(k), std::move(coeff));
}

FieldElem BkElem::coeff(uint32_t mask, const Perm& w) const {
    auto it = terms_.find({mask, w});
    return it == terms_.end() ? FieldElem::zero() : it->second;
}

bool BkElem::is_clifford() const {
    for (const auto& [key, c] : terms_)
        if (!key.second.is_identity())
            return false;
    return true;
}

std::optional<int> BkElem::degree() const {
    std::optional<int> deg;
    for (const auto& [key, c] : terms_) {
        int d = std::popcount(key.first) & 1;
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg ? deg : std::optional<int>(0);
}

BkElem BkElem::operator+(const BkElem& o) const {
    if (k_ != o.k_)
        throw std::invalid_argument("Sergeev algebra size mismatch");
    BkElem out = *this;
    for (const auto& [key, c] : o.terms_) {
        auto it = out.terms_.find(key);
        if (it == out.terms_.end()) {
            out.terms_[key] = c;
        } else {
            it->second += c;
            if (it->second.is_zero())
                out.terms_.erase(it);
        }
    }
    return out;
}

BkElem BkElem::operator-(const BkElem& o) const {
    return *this + o.scaled(FieldElem(-1));
}

BkElem BkElem::scaled(const FieldElem& c) const {
    BkElem out(k_);
    if (c.is_zero())
        return out;
    for (const auto& [key, v] : terms_)
        out.terms_[key] = v * c;
    return out;
}

namespace {

// Sign of sorting the sequence (w(j) : j in J ascending) into ascending
// order: parity of the inversions among the images.
int conjugation_sign(uint32_t mask_j, const Perm& w) {
    std::vector<int> images;
    for (int j = 0; j < w.k(); ++j)
        if (mask_j & (1u << j))
            images.push_back(w(j));
    int inv = 0;
    for (size_t a = 0; a < images.size(); ++a)
        for (size_t b = a + 1; b < images.size(); ++b)
            if (images[a] > images[b])
                ++inv;
    return (inv & 1) ? -1 : 1;
}

// Sign of the canonical merge xi_I xi_S = +- xi_{I xor S}: each generator
// in S moves left past the larger generators of I (duplicates cancel with
// xi^2 = 1 and contribute no extra sign).
int merge_sign(uint32_t mask_i, uint32_t mask_s) {
    int inv = 0;
    for (int j = 0; j < 32; ++j) {
        if (!(mask_s & (1u << j)))
            continue;
        uint32_t above = mask_i >> (j + 1);
        inv += std::popcount(above);
    }
    return (inv & 1) ? -1 : 1;
}

} // namespace

BkElem BkElem::operator*(const BkElem& o) const {
    if (k_ != o.k_)
        throw std::invalid_argument("Sergeev algebra size mismatch");
    BkElem out(k_);
    for (const auto& [lk, lc] : terms_) {
        const auto& [mask_i, w] = lk;
        for (const auto& [rk, rc] : o.terms_) {
            const auto& [mask_j, v] = rk;
            uint32_t mask_wj = 0;
            for (int j = 0; j < k_; ++j)
                if (mask_j & (1u << j))
                    mask_wj |= 1u << w(j);
            int sign = merge_sign(mask_i, mask_wj);
            if (!test_hooks::bk_sign_fault)
                sign *= conjugation_sign(mask_j, w);
            Key key{mask_i ^ mask_wj, w * v};
            FieldElem add = lc * rc;
            if (sign < 0)
                add = -add;
            auto it = out.terms_.find(key);
            if (it == out.terms_.end()) {
                if (!add.is_zero())
                    out.terms_[key] = std::move(add);
            } else {
                it->second += add;
                if (it->second.is_zero())
                    out.terms_.erase(it);
            }
        }
    }
    return out;
}

SparseVec BkElem::flatten() const {
    SparseVec v;
    for (const auto& [key, c] : terms_)
        v.add_term(key.second.lehmer_rank() * (1L << k_) + key.first, c);
    return v;
}

BkElem BkElem::unflatten(int k, const SparseVec& v) {
    // Recover (mask, w) from index = lehmer(w) * 2^k + mask.
    BkElem out(k);
    for (const auto& [idx, c] : v.terms()) {
        uint32_t mask = static_cast<uint32_t>(idx & ((1L << k) - 1));
        long rank = idx >> k;
        std::vector<int> pool(k), img;
        std::iota(pool.begin(), pool.end(), 0);
        long fact = 1;
        for (int j = 2; j <= k; ++j)
            fact *= j;
        for (int j = k; j >= 1; --j) {
            fact /= j;
            long q = rank / fact;
            rank %= fact;
            img.push_back(pool[q]);
            pool.erase(pool.begin() + q);
        }
        out.terms_[{mask, Perm(img)}] = c;
    }
    return out;
}

std::string BkElem::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << c.short_str() << " * xi{";
        bool f2 = true;
        for (int j = 0; j < k_; ++j)
            if (key.first & (1u << j)) {
                if (!f2)
                    os << ",";
                f2 = false;
                os << j + 1;
            }
        os << "} * s" << key.second.str();
    }
    return os.str();
}

BkElem pow(const BkElem& x, int e) {
    BkElem out = BkElem::unit(x.k());
    for (int j = 0; j < e; ++j)
        out = out * x;
    return out;
}

BkGenerators bk_generators(int k) {
    if (k < 1)
        throw std::invalid_argument("B_k needs k >= 1");
    BkGenerators g{BkElem::clifford(k, 1u), {}, {}};
    for (int i = 0; i + 1 < k; ++i)
        g.sigma.push_back(BkElem::basis(k, 0, Perm::adjacent(k, i)));
    for (int j = 0; j < k; ++j) {
        // tau_j = sigma_{j-1} ... sigma_1 tau sigma_1 ... sigma_{j-1}
        BkElem t = g.tau;
        for (int i = 0; i < j; ++i)
            t = g.sigma[i] * t * g.sigma[i];
        g.tau_i.push_back(t);
    }
    return g;
}

BkElem theta_gamma(int j, int k) {
    if (j < 1 || j > k - 1)
        throw std::invalid_argument("gamma index out of range");
    auto g = bk_generators(k);
    return ((g.tau_i[j - 1] - g.tau_i[j]) * g.sigma[j - 1])
        .scaled(FieldElem::sqrt2_pow(-1));
}

BkElem gamma_mu(const Partition& mu, int k) {
    if (mu.weight() != k)
        throw std::invalid_argument("gamma^mu weight mismatch");
    BkElem out = BkElem::unit(k);
    int offset = 0;
    for (int part : mu.parts()) {
        for (int j = offset + 1; j <= offset + part - 1; ++j)
            out = out * theta_gamma(j, k);
        offset += part;
    }
    return out;
}

BkElem sigma_class(const Partition& lambda, const Partition& mu, int k) {
    if (lambda.weight() + mu.weight() != k)
        throw std::invalid_argument("sigma^(lambda,mu) weight mismatch");
    auto g = bk_generators(k);
    BkElem out = BkElem::unit(k);
    int offset = 0;
    for (int part : lambda.parts()) {
        for (int j = offset + 1; j <= offset + part - 1; ++j)
            out = out * g.sigma[j - 1];
        offset += part;
    }
    for (int part : mu.parts()) {
        for (int j = offset + 1; j <= offset + part - 1; ++j)
            out = out * g.sigma[j - 1];
        offset += part;
        out = out * g.tau_i[offset - 1];
    }
    return out;
}

std::vector<RelationCheck> check_presentation(int k) {
    if (k < 1)
        throw std::invalid_argument("presentation check needs k >= 1");
    std::vector<RelationCheck> checks;
    auto g = bk_generators(k);
    const BkElem one = BkElem::unit(k);
    const BkElem minus_one = one.scaled(FieldElem(-1));
    auto add = [&checks](std::string name, bool pass) {
        checks.push_back({std::move(name), pass});
    };

    add("tau^2=1", g.tau * g.tau == one);
    for (int i = 1; i < k; ++i)
        add("sigma" + std::to_string(i) + "^2=1",
            g.sigma[i - 1] * g.sigma[i - 1] == one);
    for (int i = 1; i + 1 < k; ++i)
        add("(sigma" + std::to_string(i) + "*sigma" + std::to_string(i + 1) + ")^3=1",
            pow(g.sigma[i - 1] * g.sigma[i], 3) == one);
    for (int i = 1; i < k; ++i)
        for (int j = i + 2; j < k; ++j)
            add("(sigma" + std::to_string(i) + "*sigma" + std::to_string(j) + ")^2=1",
                pow(g.sigma[i - 1] * g.sigma[j - 1], 2) == one);
    if (k >= 2)
        add("(tau*sigma1)^4=-1", pow(g.tau * g.sigma[0], 4) == minus_one);
    for (int i = 2; i < k; ++i)
        add("(tau*sigma" + std::to_string(i) + ")^2=1",
            pow(g.tau * g.sigma[i - 1], 2) == one);

    // Clifford relations for the tau_i
    for (int i = 1; i <= k; ++i)
        add("tau" + std::to_string(i) + "^2=1", g.tau_i[i - 1] * g.tau_i[i - 1] == one);
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            add("tau" + std::to_string(i) + "*tau" + std::to_string(j) + "=-tau" +
                    std::to_string(j) + "*tau" + std::to_string(i),
                g.tau_i[i - 1] * g.tau_i[j - 1] ==
                    (g.tau_i[j - 1] * g.tau_i[i - 1]).scaled(FieldElem(-1)));

    // Spin relations for the gamma~_j and anticommutation with the tau_i
    std::vector<BkElem> gam;
    for (int j = 1; j < k; ++j)
        gam.push_back(theta_gamma(j, k));
    for (int j = 1; j < k; ++j)
        add("gamma" + std::to_string(j) + "^2=-1",
            gam[j - 1] * gam[j - 1] == minus_one);
    for (int j = 1; j + 1 < k; ++j)
        add("(gamma" + std::to_string(j) + "*gamma" + std::to_string(j + 1) + ")^3=-1",
            pow(gam[j - 1] * gam[j], 3) == minus_one);
    for (int i = 1; i < k; ++i)
        for (int j = i + 2; j < k; ++j)
            add("(gamma" + std::to_string(i) + "*gamma" + std::to_string(j) + ")^2=-1",
                pow(gam[i - 1] * gam[j - 1], 2) == minus_one);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j < k; ++j)
            add("tau" + std::to_string(i) + "*gamma" + std::to_string(j) + "=-gamma" +
                    std::to_string(j) + "*tau" + std::to_string(i),
                g.tau_i[i - 1] * gam[j - 1] ==
                    (gam[j - 1] * g.tau_i[i - 1]).scaled(FieldElem(-1)));
    return checks;
}

long subalgebra_dim(const std::vector<BkElem>& gens) {
    if (gens.empty())
        return 1;
    const int k = gens[0].k();
    for (const auto& g : gens)
        if (g.k() != k)
            throw std::invalid_argument("generator size mismatch");
    EchelonBasis ech;
    std::deque<BkElem> work;
    BkElem one = BkElem::unit(k);
    ech.insert(one.flatten());
    work.push_back(one);
    while (!work.empty()) {
        BkElem b = std::move(work.front());
        work.pop_front();
        for (const auto& g : gens) {
            BkElem p = b * g;
            SparseVec residual = ech.reduce(p.flatten());
            if (!residual.empty()) {
                ech.insert(residual);
                work.push_back(BkElem::unflatten(k, residual));
            }
        }
    }
    return static_cast<long>(ech.dim());
}

namespace {

void all_perms_rec(int k, std::vector<int>& img, std::vector<bool>& used,
                   std::vector<Perm>& out) {
    if (static_cast<int>(img.size()) == k) {
        out.push_back(Perm(img));
        return;
    }
    for (int v = 0; v < k; ++v) {
        if (used[v])
            continue;
        used[v] = true;
        img.push_back(v);
        all_perms_rec(k, img, used, out);
        img.pop_back();
        used[v] = false;
    }
}

std::vector<Perm> all_perms(int k) {
    std::vector<Perm> out;
    std::vector<int> img;
    std::vector<bool> used(k, false);
    all_perms_rec(k, img, used, out);
    return out;
}

} // namespace

long theta_image_dim(int k) {
    std::vector<BkElem> gam;
    for (int j = 1; j < k; ++j)
        gam.push_back(theta_gamma(j, k));
    EchelonBasis ech;
    for (const Perm& w : all_perms(k)) {
        BkElem gw = BkElem::unit(k);
        for (int i : lex_min_reduced_word(w))
            gw = gw * gam[i];
        for (uint32_t mask = 0; mask < (1u << k); ++mask)
            ech.insert((BkElem::clifford(k, mask) * gw).flatten());
    }
    return static_cast<long>(ech.dim());
}

FieldMatrix XkModule::action(const BkElem& c) const {
    if (!c.is_clifford())
        throw std::invalid_argument("X_k action is defined for Clifford elements");
    CoordEchelon coords;
    for (size_t j = 0; j < basis.size(); ++j)
        coords.insert(basis[j].flatten(), static_cast<long>(j));
    FieldMatrix m(dim(), dim());
    for (int j = 0; j < dim(); ++j) {
        auto sol = coords.solve((c * basis[j]).flatten());
        if (!sol)
            throw std::logic_error("X_k is not stable under the Clifford action");
        for (const auto& [i, v] : *sol)
            m.at(static_cast<int>(i), j) = v;
    }
    return m;
}

XkModule xk_build(int k) {
    if (k < 1)
        throw std::invalid_argument("X_k needs k >= 1");
    XkModule xk;
    xk.k = k;
    xk.r = k / 2;

    // e_i = (1/sqrt2)(1 + i xi_{2i-1} xi_{2i}); check the eigenprojection
    // identity (sqrt(-1) xi_{2i-1} xi_{2i}) e_i = e_i.
    std::vector<BkElem> e;
    for (int i = 1; i <= xk.r; ++i) {
        uint32_t pair_mask = (1u << (2 * i - 2)) | (1u << (2 * i - 1));
        BkElem u = BkElem::clifford(k, pair_mask, FieldElem::i());
        BkElem ei = (BkElem::unit(k) + u).scaled(FieldElem::sqrt2_pow(-1));
        if (u * ei != ei)
            throw std::logic_error("e_i is not an eigenprojection");
        e.push_back(ei);
    }

    const int r = xk.r;
    for (uint32_t eps = 0; eps < (1u << r); ++eps) {
        BkElem v = BkElem::unit(k);
        for (int i = 1; i <= r; ++i) {
            BkElem factor = e[i - 1];
            if (eps & (1u << (i - 1)))
                factor = BkElem::clifford(k, 1u << (2 * i - 2)) * factor;
            v = v * factor;
        }
        xk.basis.push_back(v);
        xk.basis_degree.push_back(std::popcount(eps) & 1);
    }
    if (k % 2 == 1) {
        const size_t half = xk.basis.size();
        BkElem xik = BkElem::clifford(k, 1u << (k - 1));
        for (size_t j = 0; j < half; ++j) {
            xk.basis.push_back(xk.basis[j] * xik);
            xk.basis_degree.push_back(xk.basis_degree[j] ^ 1);
        }
    }

    if (static_cast<int>(xk.basis.size()) != (1 << ((k + 1) / 2)))
        throw std::logic_error("unexpected X_k dimension");
    CoordEchelon coords;
    for (size_t j = 0; j < xk.basis.size(); ++j)
        if (!coords.insert(xk.basis[j].flatten(), static_cast<long>(j)))
            throw std::logic_error("X_k basis is not independent");

    for (int m = 1; m <= k; ++m)
        xk.xi_action.push_back(xk.action(BkElem::clifford(k, 1u << (m - 1))));

    if (k % 2 == 1) {
        // z_k(xi^eps xi_k^alpha) = (-1)^{sum eps + alpha} xi^eps xi_k^{alpha+1}
        const int half = 1 << r;
        xk.z_action = FieldMatrix(xk.dim(), xk.dim());
        for (int m = 0; m < half; ++m) {
            for (int alpha = 0; alpha < 2; ++alpha) {
                int from = m + alpha * half;
                int to = m + (1 - alpha) * half;
                int s = (std::popcount(static_cast<uint32_t>(m)) + alpha) & 1;
                xk.z_action.at(to, from) = FieldElem(s ? -1 : 1);
            }
        }
        FieldMatrix z2 = xk.z_action * xk.z_action;
        if (!(z2 == FieldMatrix::identity(xk.dim()).scaled(FieldElem(-1))))
            throw std::logic_error("z_k^2 != -1");
    }
    return xk;
}

FieldElem xk_char(const XkModule& xk, const BkElem& c) {
    return xk.action(c).trace();
}

FieldElem xk_char(int k, const BkElem& c) {
    return xk_char(xk_build(k), c);
}

FieldElem xi_product_coeff(const Partition& mu) {
    if (!mu.is_odd())
        throw std::invalid_argument("Xi product needs an odd partition");
    const int k = mu.weight();
    BkElem xi = BkElem::unit(k);
    int offset = 0;
    for (int part : mu.parts()) {
        for (int j = 1; j <= part - 1; ++j) {
            BkElem diff = BkElem::clifford(k, 1u << (offset + j - 1)) -
                          BkElem::clifford(k, 1u << (offset + j));
            xi = xi * diff;
        }
        offset += part;
    }
    return xk_char(k, xi);
}

} // namespace schurq
