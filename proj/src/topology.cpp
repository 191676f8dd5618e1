#include "trigon/topology.hpp"

#include <utility>

#include <json.hpp>

namespace trigon {

namespace {

// Off-diagonal linking sign; -1 reproduces |H1| = |pqr - pq - qr - rp|.
constexpr int kLinkingSign = -1;

BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) { std::swap(m[i], m[j]); }

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
    for (auto& row : m) std::swap(row[i], row[j]);
}

/// row_i += k row_j
void add_row(IntMatrix& m, std::size_t i, std::size_t j, const BigInt& k) {
    for (std::size_t c = 0; c < m[i].size(); ++c) m[i][c] += k * m[j][c];
}

/// col_i += k col_j
void add_col(IntMatrix& m, std::size_t i, std::size_t j, const BigInt& k) {
    for (auto& row : m) row[i] += k * row[j];
}

}  // namespace

SurgeryPresentation surgery_presentation(const TriangleParams& t) {
    SurgeryPresentation pres;
    pres.slopes = {t.p - 1, t.q - 1, t.r_infinite() ? std::nullopt : std::optional<int>(t.r - 1)};
    pres.pairwise_linking.assign(3, std::vector<BigInt>(3, 0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) pres.pairwise_linking[i][j] = kLinkingSign;
    return pres;
}

IntMatrix linking_matrix(const SurgeryPresentation& pres) {
    IntMatrix m;
    for (int i = 0; i < 3; ++i) {
        if (!pres.slopes[i]) continue;
        std::vector<BigInt> row = pres.pairwise_linking[i];
        row[i] = *pres.slopes[i];
        m.push_back(std::move(row));
    }
    return m;
}

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
    const std::size_t n = x.size(), k = y.size(), m = y.empty() ? 0 : y[0].size();
    IntMatrix out(n, std::vector<BigInt>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < m; ++j) out[i][j] += x[i][l] * y[l][j];
    return out;
}

BigInt determinant(const IntMatrix& M) {
    // Bareiss fraction-free elimination.
    IntMatrix a = M;
    const std::size_t n = a.size();
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            swap_rows(a, k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

SmithForm smith_normal_form(const IntMatrix& M) {
    SmithForm s;
    s.D = M;
    const std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
    s.U = identity_matrix(rows);
    s.V = identity_matrix(cols);
    IntMatrix& d = s.D;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Smallest nonzero entry of the remaining block becomes the pivot.
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (d[i][j] != 0 && (pi == rows || abs(d[i][j]) < abs(d[pi][pj]))) pi = i, pj = j;
            if (pi == rows) return s;
            swap_rows(d, t, pi);
            swap_rows(s.U, t, pi);
            swap_cols(d, t, pj);
            swap_cols(s.V, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                const BigInt k = d[i][t] / d[t][t];
                add_row(d, i, t, -k);
                add_row(s.U, i, t, -k);
                if (d[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                const BigInt k = d[t][j] / d[t][t];
                add_col(d, j, t, -k);
                add_col(s.V, j, t, -k);
                if (d[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility: fold an offending row into the pivot row and retry.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        add_row(d, t, i, 1);
                        add_row(s.U, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (d[t][t] < 0) {
            for (auto& x : d[t]) x = -x;
            for (auto& x : s.U[t]) x = -x;
        }
    }
    return s;
}

BigInt AbelianGroupDesc::order() const {
    if (free_rank > 0) return 0;
    BigInt n = 1;
    for (const auto& f : invariant_factors) n *= f;
    return n;
}

AbelianGroupDesc cokernel(const IntMatrix& M) {
    const SmithForm s = smith_normal_form(M);
    const std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
    AbelianGroupDesc g;
    int rank = 0;
    for (std::size_t i = 0; i < std::min(rows, cols); ++i) {
        const BigInt& x = s.D[i][i];
        if (x == 0) continue;
        ++rank;
        if (x > 1) g.invariant_factors.push_back(x);
    }
    g.free_rank = static_cast<int>(cols) - rank;
    return g;
}

AbelianGroupDesc h1(const SurgeryPresentation& pres) { return cokernel(linking_matrix(pres)); }

std::string to_string(const AbelianGroupDesc& g) {
    std::string out;
    for (const auto& f : g.invariant_factors) out += (out.empty() ? "" : " + ") + ("Z/" + f.str());
    for (int i = 0; i < g.free_rank; ++i) out += out.empty() ? "Z" : " + Z";
    return out.empty() ? "0" : out;
}

std::string h1_json(const SurgeryPresentation& pres, int indent) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["schema"] = 1;
    auto& slopes = j["slopes"] = ordered_json::array();
    for (const auto& s : pres.slopes) slopes.push_back(s ? ordered_json(*s) : ordered_json("removed"));
    auto& matrix = j["matrix"] = ordered_json::array();
    for (const auto& row : linking_matrix(pres)) {
        ordered_json r = ordered_json::array();
        for (const auto& x : row) r.push_back(static_cast<long long>(x));
        matrix.push_back(r);
    }
    const AbelianGroupDesc g = h1(pres);
    auto& factors = j["invariant_factors"] = ordered_json::array();
    for (const auto& f : g.invariant_factors) factors.push_back(f.str());
    j["free_rank"] = g.free_rank;
    j["order"] = g.free_rank > 0 ? ordered_json("inf") : ordered_json(g.order().str());
    j["group"] = to_string(g);
    return j.dump(indent);
}

}  // namespace trigon
