#include "plumbforge/exact.hpp"

#include <algorithm>
#include <utility>

#include "plumbforge/error.hpp"

namespace plumbforge {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_input: return "invalid_input";
        case ErrorCode::parse: return "parse_error";
        case ErrorCode::indefinite: return "indefinite_lattice";
        case ErrorCode::cap_exceeded: return "cap_exceeded";
        case ErrorCode::not_applicable: return "not_applicable";
        case ErrorCode::mismatch: return "relator_mismatch";
        case ErrorCode::inconsistent: return "inconsistent_inputs";
        case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

ZMatrix to_integer_matrix(const IntMatrix& m) {
    ZMatrix z(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) z(i, j) = Integer(static_cast<long>(m(i, j)));
    return z;
}

ZMatrix multiply(const ZMatrix& a, const ZMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::invalid_input, "matrix dimension mismatch");
    ZMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

std::vector<Integer> leading_minors(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::invalid_input, "matrix is not square");
    const std::size_t n = m.rows();
    ZMatrix a = to_integer_matrix(m);
    std::vector<Integer> minors;
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const Integer pivot = a(k, k);
        minors.push_back(pivot);
        if (pivot == 0) break;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * pivot - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        }
        prev = pivot;
    }
    return minors;
}

bool is_negative_definite(const IntMatrix& m) {
    if (!m.is_symmetric()) throw Error(ErrorCode::invalid_input, "matrix is not symmetric");
    if (m.rows() == 0) return true;
    const auto minors = leading_minors(m);
    if (minors.size() != m.rows()) return false;
    for (std::size_t k = 0; k < minors.size(); ++k) {
        // sign of D_{k+1} must be (-1)^{k+1}
        const int s = sgn(minors[k]);
        if ((k % 2 == 0 && s >= 0) || (k % 2 == 1 && s <= 0)) return false;
    }
    return true;
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::invalid_input, "matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    ZMatrix a = to_integer_matrix(m);
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::vector<Rational> solve_exact(const IntMatrix& m, const std::vector<Rational>& rhs) {
    const std::size_t n = m.rows();
    if (m.cols() != n || rhs.size() != n) throw Error(ErrorCode::invalid_input, "dimension mismatch in linear solve");
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(static_cast<long>(m(i, j)));
        a[i][n] = rhs[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) throw Error(ErrorCode::indefinite, "singular matrix in linear solve");
        std::swap(a[p], a[k]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            const Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = a[i][n] / a[i][i];
        x[i].canonicalize();
    }
    return x;
}

SmithForm smith_normal_form(const ZMatrix& input) {
    ZMatrix a = input;
    const std::size_t rows = a.rows(), cols = a.cols();
    SmithForm out;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero pivot in the remaining block
        bool found = false;
        std::size_t pi = t, pj = t;
        Integer best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a(i, j) != 0 && (!found || abs(a(i, j)) < best)) {
                    best = abs(a(i, j));
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(t, j), a(pi, j));
        for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, t), a(i, pj));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
                if (a(i, t) != 0) {
                    for (std::size_t j = t; j < cols; ++j) std::swap(a(i, j), a(t, j));
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
                if (a(t, j) != 0) {
                    for (std::size_t i = t; i < rows; ++i) std::swap(a(i, j), a(i, t));
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide the rest of the block
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        for (std::size_t k = t; k < cols; ++k) a(t, k) += a(i, k);
                        clean = false;
                        break;
                    }
        }
        out.factors.push_back(abs(a(t, t)));
        ++t;
    }
    out.rank = out.factors.size();
    return out;
}

long long floor_to_ll(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!f.fits_slong_p()) throw Error(ErrorCode::invalid_input, "coefficient out of range");
    return f.get_si();
}

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

}  // namespace plumbforge
