#include "nhf/cmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace nhf {

std::string GaussQ::str() const {
    std::ostringstream os;
    os << "(" << re.str() << (im.sign() >= 0 ? "+" : "") << im.str() << "i)";
    return os.str();
}

bool CMatrix::is_zero() const {
    for (const auto& e : a_)
        if (!e.is_zero()) return false;
    return true;
}

bool CMatrix::is_anti_hermitian() const {
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = r; c < n_; ++c)
            if (at(r, c) != -at(c, r).conj()) return false;
    return true;
}

CMatrix CMatrix::operator-() const {
    CMatrix out(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
    return out;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("CMatrix: size mismatch");
    CMatrix out(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
    return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("CMatrix: size mismatch");
    CMatrix out(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
    return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("CMatrix: size mismatch");
    CMatrix out(a.n_);
    for (std::size_t r = 0; r < a.n_; ++r)
        for (std::size_t k = 0; k < a.n_; ++k) {
            const GaussQ& ark = a.at(r, k);
            if (ark.is_zero()) continue;
            for (std::size_t c = 0; c < a.n_; ++c) {
                if (b.at(k, c).is_zero()) continue;
                out.at(r, c) += ark * b.at(k, c);
            }
        }
    return out;
}

CMatrix operator*(const GaussQ& s, const CMatrix& a) {
    CMatrix out(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = s * a.a_[i];
    return out;
}

GaussQ CMatrix::trace() const {
    GaussQ t;
    for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

CMatrix CMatrix::conj_transpose() const {
    CMatrix out(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) out.at(c, r) = at(r, c).conj();
    return out;
}

std::string CMatrix::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < n_; ++r) {
        os << (r ? "; " : "[");
        for (std::size_t c = 0; c < n_; ++c) os << (c ? "," : "") << at(r, c).str();
    }
    os << "]";
    return os.str();
}

CMatrix bracket(const CMatrix& x, const CMatrix& y) { return x * y - y * x; }

QExt minus_re_trace_prod(const CMatrix& x, const CMatrix& y) {
    if (x.size() != y.size()) throw std::invalid_argument("pairing: size mismatch");
    QExt re;
    for (std::size_t r = 0; r < x.size(); ++r)
        for (std::size_t k = 0; k < x.size(); ++k) {
            const GaussQ& a = x.at(r, k);
            const GaussQ& b = y.at(k, r);
            if (a.is_zero() || b.is_zero()) continue;
            re += a.re * b.re - a.im * b.im;
        }
    return -re;
}

namespace {

// flatten a matrix into real coordinates (re, im per entry)
std::vector<QExt> flatten(const CMatrix& x) {
    std::vector<QExt> out;
    out.reserve(2 * x.size() * x.size());
    for (std::size_t r = 0; r < x.size(); ++r)
        for (std::size_t c = 0; c < x.size(); ++c) {
            out.push_back(x.at(r, c).re);
            out.push_back(x.at(r, c).im);
        }
    return out;
}

// Reduced row echelon form; returns pivot column per row.
std::vector<int> rref(std::vector<std::vector<QExt>>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    std::size_t m = rows.size(), w = rows[0].size(), r = 0;
    for (std::size_t col = 0; col < w && r < m; ++col) {
        std::size_t piv = r;
        while (piv < m && rows[piv][col].is_zero()) ++piv;
        if (piv == m) continue;
        std::swap(rows[r], rows[piv]);
        QExt inv = rows[r][col].inverse();
        for (std::size_t c = col; c < w; ++c) rows[r][c] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            QExt f = rows[i][col];
            for (std::size_t c = col; c < w; ++c) rows[i][c] -= f * rows[r][c];
        }
        pivots.push_back(static_cast<int>(col));
        ++r;
    }
    return pivots;
}

} // namespace

std::optional<std::vector<QExt>> expand_in_basis(const std::vector<CMatrix>& basis,
                                                 const CMatrix& x) {
    if (basis.empty()) {
        if (x.is_zero()) return std::vector<QExt>{};
        return std::nullopt;
    }
    // solve sum c_i basis_i = x by RREF on the transposed system
    std::size_t k = basis.size();
    std::vector<std::vector<QExt>> rows;
    std::vector<QExt> fx = flatten(x);
    std::vector<std::vector<QExt>> fb;
    for (const auto& b : basis) fb.push_back(flatten(b));
    std::size_t w = fx.size();
    // build augmented system row per coordinate: sum_i c_i fb[i][j] = fx[j]
    for (std::size_t j = 0; j < w; ++j) {
        std::vector<QExt> row(k + 1);
        bool nonzero = false;
        for (std::size_t i = 0; i < k; ++i) {
            row[i] = fb[i][j];
            nonzero = nonzero || !row[i].is_zero();
        }
        row[k] = fx[j];
        if (nonzero || !row[k].is_zero()) rows.push_back(std::move(row));
    }
    std::vector<int> piv = rref(rows);
    std::vector<QExt> coeff(k);
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == static_cast<int>(k)) return std::nullopt;  // inconsistent
        coeff[static_cast<std::size_t>(piv[r])] = rows[r][k];
    }
    return coeff;
}

bool in_real_span(const std::vector<CMatrix>& basis, const CMatrix& x) {
    return expand_in_basis(basis, x).has_value();
}

std::size_t real_span_rank(const std::vector<CMatrix>& mats) {
    std::vector<std::vector<QExt>> rows;
    for (const auto& m : mats) rows.push_back(flatten(m));
    return rref(rows).size();
}

namespace {

std::vector<CMatrix> kernel_in_span(const std::vector<CMatrix>& space,
                                    const std::vector<std::vector<QExt>>& constraint_rows) {
    std::size_t k = space.size();
    std::vector<std::vector<QExt>> rows = constraint_rows;
    std::vector<int> piv = rref(rows);
    std::vector<char> is_piv(k, 0);
    for (int pc : piv) is_piv[static_cast<std::size_t>(pc)] = 1;
    std::vector<CMatrix> out;
    for (std::size_t free_col = 0; free_col < k; ++free_col) {
        if (is_piv[free_col]) continue;
        std::vector<QExt> x(k);
        x[free_col] = QExt(1);
        for (std::size_t r = 0; r < piv.size(); ++r)
            x[static_cast<std::size_t>(piv[r])] = -rows[r][free_col];
        CMatrix w(space.empty() ? 0 : space[0].size());
        for (std::size_t i = 0; i < k; ++i) {
            if (x[i].is_zero()) continue;
            w = w + (GaussQ(x[i]) * space[i]);
        }
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace

std::vector<CMatrix> centralizer_in_span(const std::vector<CMatrix>& space,
                                         const std::vector<CMatrix>& commutants) {
    if (space.empty()) return {};
    std::size_t k = space.size();
    std::vector<std::vector<QExt>> rows;
    for (const auto& c : commutants) {
        // [c, sum x_i b_i] = 0: one constraint row per flattened coordinate
        std::vector<std::vector<QExt>> cols;
        for (const auto& b : space) {
            CMatrix br = bracket(c, b);
            std::vector<QExt> f;
            f.reserve(2 * br.size() * br.size());
            for (std::size_t r = 0; r < br.size(); ++r)
                for (std::size_t cc = 0; cc < br.size(); ++cc) {
                    f.push_back(br.at(r, cc).re);
                    f.push_back(br.at(r, cc).im);
                }
            cols.push_back(std::move(f));
        }
        std::size_t w = cols[0].size();
        for (std::size_t j = 0; j < w; ++j) {
            std::vector<QExt> row(k);
            bool nonzero = false;
            for (std::size_t i = 0; i < k; ++i) {
                row[i] = cols[i][j];
                nonzero = nonzero || !row[i].is_zero();
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    return kernel_in_span(space, rows);
}

std::vector<CMatrix> orthogonal_in_span(const std::vector<CMatrix>& space,
                                        const std::vector<CMatrix>& constraints) {
    if (space.empty()) return {};
    std::size_t k = space.size();
    std::vector<std::vector<QExt>> rows;
    for (const auto& c : constraints) {
        std::vector<QExt> row(k);
        bool nonzero = false;
        for (std::size_t i = 0; i < k; ++i) {
            row[i] = minus_re_trace_prod(space[i], c);
            nonzero = nonzero || !row[i].is_zero();
        }
        if (nonzero) rows.push_back(std::move(row));
    }
    return kernel_in_span(space, rows);
}

} // namespace nhf
