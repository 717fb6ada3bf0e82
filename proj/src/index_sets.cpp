#include "qcramer/index_sets.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qcramer {

IndexSubset::IndexSubset(std::vector<std::size_t> elements, std::size_t universe)
    : elements_(std::move(elements)), universe_(universe) {
    for (std::size_t p = 0; p < elements_.size(); ++p) {
        const std::size_t e = elements_[p];
        if (e < 1 || e > universe_ || (p > 0 && elements_[p - 1] >= e)) {
            throw Error(ErrorKind::domain, "index subset must be strictly increasing within 1.." +
                                               std::to_string(universe_));
        }
    }
}

IndexSubset IndexSubset::full(std::size_t n) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{1});
    return IndexSubset(std::move(all), n);
}

bool IndexSubset::contains(std::size_t index) const {
    return std::binary_search(elements_.begin(), elements_.end(), index);
}

std::optional<std::size_t> IndexSubset::position_of(std::size_t index) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), index);
    if (it == elements_.end() || *it != index) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - elements_.begin()) + 1;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::size_t out = 1;
    for (std::size_t t = 1; t <= k; ++t) {
        out = out * (n - k + t) / t;
    }
    return out;
}

SubsetFamily::SubsetFamily(std::size_t k, std::size_t n, std::optional<std::size_t> anchor)
    : k_(k), n_(n), anchor_(anchor) {
    if (k < 1 || k > n) {
        throw Error(ErrorKind::domain, "subset size " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
    if (anchor && (*anchor < 1 || *anchor > n)) {
        throw Error(ErrorKind::domain, "anchor " + std::to_string(*anchor) + " outside 1.." + std::to_string(n));
    }
}

std::size_t SubsetFamily::size() const { return anchor_ ? binomial(n_ - 1, k_ - 1) : binomial(n_, k_); }

std::vector<IndexSubset> SubsetFamily::to_vector() const {
    std::vector<IndexSubset> out;
    out.reserve(size());
    for (auto s : *this) {
        out.push_back(std::move(s));
    }
    return out;
}

SubsetFamily::iterator::iterator(const SubsetFamily* family) : family_(family), current_(family->k_), done_(false) {
    std::iota(current_.begin(), current_.end(), std::size_t{1});
    if (family_->anchor_ && !std::binary_search(current_.begin(), current_.end(), *family_->anchor_)) {
        ++*this;
    }
}

bool SubsetFamily::iterator::advance() {
    const std::size_t k = family_->k_;
    const std::size_t n = family_->n_;
    std::size_t p = k;
    while (p > 0) {
        --p;
        if (current_[p] < n - k + p + 1) {
            ++current_[p];
            for (std::size_t q = p + 1; q < k; ++q) {
                current_[q] = current_[q - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

SubsetFamily::iterator& SubsetFamily::iterator::operator++() {
    while (true) {
        if (!advance()) {
            done_ = true;
            current_.clear();
            return *this;
        }
        if (!family_->anchor_ || std::binary_search(current_.begin(), current_.end(), *family_->anchor_)) {
            return *this;
        }
    }
}

namespace {

void check_square_subset(std::size_t rows, std::size_t cols, const IndexSubset& beta) {
    if (rows != cols) {
        throw Error(ErrorKind::shape_mismatch, "principal submatrix requires a square matrix");
    }
    if (beta.universe() != rows || (beta.size() > 0 && beta.elements().back() > rows)) {
        throw Error(ErrorKind::domain, "index subset does not match matrix order " + std::to_string(rows));
    }
}

}  // namespace

template <Coefficient T>
QMatrix<T> principal_submatrix(const QMatrix<T>& h, const IndexSubset& beta) {
    check_square_subset(h.rows(), h.cols(), beta);
    const std::size_t k = beta.size();
    QMatrix<T> out(k, k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            out(r, c) = h(beta[r] - 1, beta[c] - 1);
        }
    }
    return out;
}

template <Coefficient T>
QMatrix<T> replace_col_then_restrict(const QMatrix<T>& h, std::size_t i, std::span<const Quaternion<T>> v,
                                     const IndexSubset& beta) {
    check_square_subset(h.rows(), h.cols(), beta);
    if (!beta.contains(i)) {
        throw Error(ErrorKind::domain, "replaced index " + std::to_string(i) + " is not in the subset");
    }
    if (v.size() != h.rows()) {
        throw Error(ErrorKind::shape_mismatch, "replacement column has wrong length");
    }
    QMatrix<T> out = principal_submatrix(h, beta);
    const std::size_t col = *beta.position_of(i) - 1;
    for (std::size_t r = 0; r < beta.size(); ++r) {
        out(r, col) = v[beta[r] - 1];
    }
    return out;
}

template <Coefficient T>
QMatrix<T> replace_row_then_restrict(const QMatrix<T>& h, std::size_t i, std::span<const Quaternion<T>> v,
                                     const IndexSubset& alpha) {
    check_square_subset(h.rows(), h.cols(), alpha);
    if (!alpha.contains(i)) {
        throw Error(ErrorKind::domain, "replaced index " + std::to_string(i) + " is not in the subset");
    }
    if (v.size() != h.cols()) {
        throw Error(ErrorKind::shape_mismatch, "replacement row has wrong length");
    }
    QMatrix<T> out = principal_submatrix(h, alpha);
    const std::size_t row = *alpha.position_of(i) - 1;
    for (std::size_t c = 0; c < alpha.size(); ++c) {
        out(row, c) = v[alpha[c] - 1];
    }
    return out;
}

#define QCRAMER_INSTANTIATE_SUBSETS(T)                                                                 \
    template QMatrix<T> principal_submatrix(const QMatrix<T>&, const IndexSubset&);                    \
    template QMatrix<T> replace_col_then_restrict(const QMatrix<T>&, std::size_t,                      \
                                                  std::span<const Quaternion<T>>, const IndexSubset&); \
    template QMatrix<T> replace_row_then_restrict(const QMatrix<T>&, std::size_t,                      \
                                                  std::span<const Quaternion<T>>, const IndexSubset&);

QCRAMER_INSTANTIATE_SUBSETS(Rational)
QCRAMER_INSTANTIATE_SUBSETS(double)

}  // namespace qcramer
