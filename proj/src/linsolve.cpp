#include "fql/linsolve.hpp"

#include <stdexcept>
#include <string>

namespace fql {

std::vector<RatFunc> solve_linear(const std::vector<std::vector<RatFunc>>& M,
                                  const std::vector<RatFunc>& b) {
    size_t rows = M.size();
    if (rows == 0 || b.size() != rows) throw std::invalid_argument("bad system shape");
    size_t cols = M[0].size();
    if (cols == 0) throw std::invalid_argument("bad system shape");
    for (const auto& row : M)
        if (row.size() != cols) throw std::invalid_argument("bad system shape");
    if (rows < cols) throw std::runtime_error("underdetermined");
    const Field* F = M[0][0].field();

    // clear denominators row by row: augmented integer (polynomial) matrix
    std::vector<std::vector<TTPoly>> W(rows, std::vector<TTPoly>(cols + 1, TTPoly::zero(F)));
    for (size_t i = 0; i < rows; ++i) {
        TTPoly L = TTPoly::one(F);
        auto fold = [&](const RatFunc& e) {
            if (!e.is_polynomial()) L = tt_divide_exact(L * e.den(), tt_gcd(L, e.den()));
        };
        for (size_t j = 0; j < cols; ++j) fold(M[i][j]);
        fold(b[i]);
        auto clear = [&](const RatFunc& e) {
            return e.num() * tt_divide_exact(L, e.den());
        };
        for (size_t j = 0; j < cols; ++j) W[i][j] = clear(M[i][j]);
        W[i][cols] = clear(b[i]);
    }

    // fraction-free elimination
    TTPoly prev = TTPoly::one(F);
    for (size_t k = 0; k < cols; ++k) {
        size_t piv = rows;
        for (size_t i = k; i < rows; ++i)
            if (!W[i][k].is_zero()) { piv = i; break; }
        if (piv == rows) throw std::runtime_error("underdetermined");
        if (piv != k) std::swap(W[piv], W[k]);
        for (size_t i = k + 1; i < rows; ++i) {
            for (size_t j = k + 1; j <= cols; ++j)
                W[i][j] = tt_divide_exact(W[k][k] * W[i][j] - W[i][k] * W[k][j], prev);
            W[i][k] = TTPoly::zero(F);
        }
        prev = W[k][k];
    }

    // back substitution on the leading square block
    std::vector<RatFunc> x(cols, RatFunc::zero(F));
    for (size_t k = cols; k-- > 0;) {
        RatFunc acc = RatFunc(W[k][cols]);
        for (size_t j = k + 1; j < cols; ++j) acc = acc - RatFunc(W[k][j]) * x[j];
        x[k] = acc / RatFunc(W[k][k]);
    }

    // verify every original row; surplus rows certify the overdetermined fit
    for (size_t i = 0; i < rows; ++i) {
        RatFunc acc = RatFunc::zero(F);
        for (size_t j = 0; j < cols; ++j) acc = acc + M[i][j] * x[j];
        if (!(acc == b[i]))
            throw std::runtime_error("inconsistent system: row " + std::to_string(i));
    }
    return x;
}

}  // namespace fql
