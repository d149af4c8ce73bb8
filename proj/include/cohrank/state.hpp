#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cohrank/errors.hpp"
#include "cohrank/numeric.hpp"

namespace cohrank {

/// Per-mode complex displacement values of one coherent product state.
class coherent_label {
public:
    coherent_label() = default;

    explicit coherent_label(std::vector<cdouble> alphas) : alphas_(std::move(alphas)) {
        if (alphas_.empty()) throw dimension_error("coherent_label needs at least one mode");
        for (const auto& a : alphas_)
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
                throw validation_error("coherent_label entries must be finite");
    }

    coherent_label(std::initializer_list<cdouble> alphas)
        : coherent_label(std::vector<cdouble>(alphas)) {}

    static coherent_label vacuum(int modes) {
        return coherent_label(std::vector<cdouble>(static_cast<std::size_t>(modes), cdouble{0.0, 0.0}));
    }

    int modes() const { return static_cast<int>(alphas_.size()); }
    const cdouble& operator[](int j) const { return alphas_[static_cast<std::size_t>(j)]; }
    const std::vector<cdouble>& alphas() const { return alphas_; }

private:
    std::vector<cdouble> alphas_;
};

/// One amplitude-label pair of a superposition.
struct term {
    cdouble amplitude;
    coherent_label label;
};

/// Overlap <a|b> of two coherent product states (product over modes of the
/// single-mode inner product formula). |result| <= 1, equality iff a == b.
inline cdouble overlap(std::span<const cdouble> a, std::span<const cdouble> b) {
    if (a.size() != b.size()) throw dimension_error("overlap: mode count mismatch");
    double dist2 = 0.0;
    double phase = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        dist2 += std::norm(a[j] - b[j]);
        phase -= std::imag(a[j] * std::conj(b[j]));
    }
    return std::polar(std::exp(-0.5 * dist2), phase);
}

inline cdouble overlap(const coherent_label& a, const coherent_label& b) {
    return overlap(std::span<const cdouble>(a.alphas()), std::span<const cdouble>(b.alphas()));
}

/// Finite superposition of multi-mode coherent states,
/// sum_i c_i |alpha_i^(1), ..., alpha_i^(m)>.
///
/// Terms are held as flat arrays (amplitudes of length k, labels of length
/// k*m with each term's modes contiguous) so per-term work maps cleanly onto
/// data-parallel loops. An empty term list represents the zero vector and is
/// never flagged normalized.
class coherent_superposition {
public:
    explicit coherent_superposition(int modes) : modes_(modes) {
        if (modes < 1) throw dimension_error("mode count must be positive");
    }

    static coherent_superposition zero(int modes) { return coherent_superposition(modes); }

    static coherent_superposition vacuum(int modes) {
        coherent_superposition s(modes);
        s.push_term(cdouble{1.0, 0.0}, std::vector<cdouble>(static_cast<std::size_t>(modes)));
        s.normalized_ = true;
        return s;
    }

    /// Rank-1 state |label> with unit amplitude.
    static coherent_superposition single(const coherent_label& label) {
        coherent_superposition s(label.modes());
        s.push_term(cdouble{1.0, 0.0}, label.alphas());
        s.normalized_ = true;
        return s;
    }

    int modes() const { return modes_; }
    int rank() const { return static_cast<int>(amps_.size()); }
    bool is_normalized() const { return normalized_; }
    void set_normalized(bool v) { normalized_ = v; }

    cdouble amplitude(int i) const { return amps_[static_cast<std::size_t>(i)]; }
    cdouble& amplitude(int i) { return amps_[static_cast<std::size_t>(i)]; }

    std::span<const cdouble> label(int i) const {
        return {labels_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(modes_),
                static_cast<std::size_t>(modes_)};
    }
    std::span<cdouble> label(int i) {
        return {labels_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(modes_),
                static_cast<std::size_t>(modes_)};
    }

    const std::vector<cdouble>& amplitudes() const { return amps_; }
    const std::vector<cdouble>& labels_flat() const { return labels_; }
    std::vector<cdouble>& labels_flat() { return labels_; }

    void push_term(cdouble amplitude, std::span<const cdouble> label) {
        if (static_cast<int>(label.size()) != modes_)
            throw dimension_error("term label has wrong mode count");
        if (!std::isfinite(amplitude.real()) || !std::isfinite(amplitude.imag()))
            throw validation_error("term amplitude must be finite");
        amps_.push_back(amplitude);
        labels_.insert(labels_.end(), label.begin(), label.end());
        normalized_ = false;
    }

    void push_term(cdouble amplitude, const std::vector<cdouble>& label) {
        push_term(amplitude, std::span<const cdouble>(label));
    }

    term get_term(int i) const {
        auto l = label(i);
        return {amplitude(i), coherent_label(std::vector<cdouble>(l.begin(), l.end()))};
    }

    void reserve(int terms) {
        amps_.reserve(static_cast<std::size_t>(terms));
        labels_.reserve(static_cast<std::size_t>(terms) * static_cast<std::size_t>(modes_));
    }

    /// True when max|c_i| is close enough to the double range that Gram sums
    /// over k terms may overflow. Amplitudes are stored explicitly (there is
    /// no symbolic prefactor), so very aggressive decomposition parameters
    /// surface here.
    bool amplitudes_near_overflow() const {
        const double cap = 1e300 / std::max(1, rank());
        for (const auto& c : amps_)
            if (std::abs(c) > cap) return true;
        return false;
    }

private:
    int modes_;
    std::vector<cdouble> amps_;
    std::vector<cdouble> labels_;
    bool normalized_ = false;
};

/// <psi|phi> as the double Gram sum over term pairs; O(m k_psi k_phi).
inline cdouble inner_product(const coherent_superposition& psi, const coherent_superposition& phi) {
    if (psi.modes() != phi.modes()) throw dimension_error("inner_product: mode count mismatch");
    const std::size_t kp = static_cast<std::size_t>(psi.rank());
    const std::size_t kq = static_cast<std::size_t>(phi.rank());
    return pairwise_sum<cdouble>(kp * kq, [&](std::size_t idx) {
        const int i = static_cast<int>(idx / kq);
        const int j = static_cast<int>(idx % kq);
        return std::conj(psi.amplitude(i)) * phi.amplitude(j) * overlap(psi.label(i), phi.label(j));
    });
}

/// ||psi||^2; tiny negative Gram round-off is clamped to zero.
inline double norm_squared(const coherent_superposition& psi) {
    const double v = std::real(inner_product(psi, psi));
    if (v < 0.0) {
        if (v < -1e-12 * std::max(1.0, static_cast<double>(psi.rank())))
            throw validation_error("norm_squared: Gram matrix significantly indefinite");
        return 0.0;
    }
    return v;
}

/// Rescale amplitudes to unit norm. Labels are untouched.
inline coherent_superposition normalize(const coherent_superposition& psi) {
    const double n2 = norm_squared(psi);
    if (n2 <= 1e-30) throw degenerate_error("normalize: state norm is numerically zero");
    const double inv = 1.0 / std::sqrt(n2);
    coherent_superposition out(psi.modes());
    out.reserve(psi.rank());
    for (int i = 0; i < psi.rank(); ++i) out.push_term(psi.amplitude(i) * inv, psi.label(i));
    out.set_normalized(true);
    return out;
}

/// Tensor product: modes add, ranks multiply, amplitudes multiply and labels
/// concatenate. Term order is left-major.
inline coherent_superposition tensor(const coherent_superposition& psi,
                                     const coherent_superposition& phi) {
    coherent_superposition out(psi.modes() + phi.modes());
    out.reserve(psi.rank() * phi.rank());
    std::vector<cdouble> label(static_cast<std::size_t>(out.modes()));
    for (int i = 0; i < psi.rank(); ++i) {
        const auto li = psi.label(i);
        for (int j = 0; j < phi.rank(); ++j) {
            const auto lj = phi.label(j);
            std::copy(li.begin(), li.end(), label.begin());
            std::copy(lj.begin(), lj.end(), label.begin() + psi.modes());
            out.push_term(psi.amplitude(i) * phi.amplitude(j), label);
        }
    }
    if (psi.is_normalized() && phi.is_normalized()) out.set_normalized(true);
    return out;
}

struct prune_result {
    coherent_superposition state;
    /// |1 - |<psi|psi_pruned>|^2 / (||psi||^2 ||psi_pruned||^2)|
    double fidelity_loss;
};

/// Drop terms with |amplitude| <= tol. Pruning is opt-in: tol = 0 keeps
/// every term (including exact zeros).
inline prune_result prune(const coherent_superposition& psi, double tol = 0.0) {
    if (tol < 0.0) throw validation_error("prune: tolerance must be nonnegative");
    coherent_superposition out(psi.modes());
    for (int i = 0; i < psi.rank(); ++i) {
        if (tol > 0.0 && std::abs(psi.amplitude(i)) <= tol) continue;
        out.push_term(psi.amplitude(i), psi.label(i));
    }
    if (out.rank() == 0) throw degenerate_error("prune: every term removed");
    if (out.rank() == psi.rank()) {
        prune_result r{out, 0.0};
        r.state.set_normalized(psi.is_normalized());
        return r;
    }
    const double n_psi = norm_squared(psi);
    const double n_out = norm_squared(out);
    if (n_psi <= 1e-30 || n_out <= 1e-30)
        throw degenerate_error("prune: remaining state has numerically zero norm");
    const double cross = std::norm(inner_product(psi, out));
    return {out, std::abs(1.0 - cross / (n_psi * n_out))};
}

} // namespace cohrank
