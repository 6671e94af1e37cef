#include "kh/algebra.hpp"

#include <algorithm>
#include <cstdlib>

#include "kh/errors.hpp"

namespace kh {

Int IntMatrix::at(int r, int c) const {
    const auto& col = col_data_[c];
    auto it = col.find(r);
    return it == col.end() ? Int(0) : it->second;
}

void IntMatrix::row_insert(int r, int c) {
    auto& v = row_cols_[r];
    auto it = std::lower_bound(v.begin(), v.end(), c);
    if (it == v.end() || *it != c)
        v.insert(it, c);
}

void IntMatrix::row_erase(int r, int c) {
    auto& v = row_cols_[r];
    auto it = std::lower_bound(v.begin(), v.end(), c);
    if (it != v.end() && *it == c)
        v.erase(it);
}

void IntMatrix::set(int r, int c, Int v) {
    auto& col = col_data_[c];
    auto it = col.find(r);
    if (v == 0) {
        if (it != col.end()) {
            col.erase(it);
            row_erase(r, c);
        }
        return;
    }
    if (it == col.end()) {
        col.emplace(r, std::move(v));
        row_insert(r, c);
    } else {
        it->second = std::move(v);
    }
}

void IntMatrix::add(int r, int c, const Int& v) {
    if (v == 0)
        return;
    auto& col = col_data_[c];
    auto it = col.find(r);
    if (it == col.end()) {
        col.emplace(r, v);
        row_insert(r, c);
    } else {
        it->second += v;
        if (it->second == 0) {
            col.erase(it);
            row_erase(r, c);
        }
    }
}

std::size_t IntMatrix::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& col : col_data_)
        n += col.size();
    return n;
}

namespace {

// Shared working form for the elimination algorithms: columns as sorted
// maps plus per-row supports, with retired rows/columns masked out.
struct Elimination {
    explicit Elimination(const IntMatrix& m)
        : rows(m.rows()), cols(m.cols()), col_data(m.cols()), row_cols(m.rows()),
          row_alive(m.rows(), true), col_alive(m.cols(), true) {
        for (int c = 0; c < cols; ++c) {
            col_data[c] = m.column(c);
            for (const auto& [r, v] : col_data[c])
                row_cols[r].push_back(c);
        }
    }

    int rows, cols;
    std::vector<std::map<int, Int>> col_data;
    std::vector<std::vector<int>> row_cols;
    std::vector<char> row_alive, col_alive;

    Int value(int r, int c) const {
        auto it = col_data[c].find(r);
        return it == col_data[c].end() ? Int(0) : it->second;
    }

    void set(int r, int c, Int v) {
        auto& col = col_data[c];
        auto it = col.find(r);
        if (v == 0) {
            if (it != col.end()) {
                col.erase(it);
                auto& rc = row_cols[r];
                auto rit = std::lower_bound(rc.begin(), rc.end(), c);
                if (rit != rc.end() && *rit == c)
                    rc.erase(rit);
            }
            return;
        }
        if (it == col.end()) {
            col.emplace(r, std::move(v));
            auto& rc = row_cols[r];
            auto rit = std::lower_bound(rc.begin(), rc.end(), c);
            rc.insert(rit, c);
        } else {
            it->second = std::move(v);
        }
    }

    int col_nnz(int c) const {
        int n = 0;
        for (const auto& [r, v] : col_data[c])
            if (row_alive[r])
                ++n;
        return n;
    }

    int row_nnz(int r) const {
        int n = 0;
        for (int c : row_cols[r])
            if (col_alive[c])
                ++n;
        return n;
    }

    // row r2 -= q * row r1 (live columns of r1).
    void row_axpy(int r2, int r1, const Int& q) {
        if (q == 0)
            return;
        std::vector<int> cs = row_cols[r1];
        for (int c : cs) {
            if (!col_alive[c])
                continue;
            set(r2, c, value(r2, c) - q * value(r1, c));
        }
    }

    // col c2 -= q * col c1 (live rows of c1).
    void col_axpy(int c2, int c1, const Int& q) {
        if (q == 0)
            return;
        std::vector<std::pair<int, Int>> entries(col_data[c1].begin(), col_data[c1].end());
        for (const auto& [r, v] : entries) {
            if (!row_alive[r])
                continue;
            set(r, c2, value(r, c2) - q * v);
        }
    }

    // Pivot choice: prefer +-1 entries with the fewest live nonzeros in
    // their row+column; otherwise smallest absolute value (ties by fill).
    // Scans the smallest live columns first and falls back to a full scan.
    bool select_pivot(int& pr, int& pc) {
        bool found = false;
        bool found_unit = false;
        long best_fill = 0;
        Int best_abs;

        auto consider = [&](int r, int c, const Int& v) {
            Int va = abs(v);
            bool unit = va == 1;
            long fill = row_nnz(r) + col_nnz(c);
            if (unit) {
                if (!found_unit || fill < best_fill) {
                    found_unit = found = true;
                    best_fill = fill;
                    best_abs = va;
                    pr = r;
                    pc = c;
                }
            } else if (!found_unit) {
                if (!found || va < best_abs || (va == best_abs && fill < best_fill)) {
                    found = true;
                    best_fill = fill;
                    best_abs = va;
                    pr = r;
                    pc = c;
                }
            }
        };

        for (int c = 0; c < cols; ++c) {
            if (!col_alive[c])
                continue;
            for (const auto& [r, v] : col_data[c]) {
                if (!row_alive[r])
                    continue;
                consider(r, c, v);
            }
        }
        return found;
    }

    void retire(int r, int c) {
        row_alive[r] = false;
        col_alive[c] = false;
    }

    bool any_live_entry_not_divisible(const Int& p, int& r, int& c) const {
        for (int cc = 0; cc < cols; ++cc) {
            if (!col_alive[cc])
                continue;
            for (const auto& [rr, v] : col_data[cc]) {
                if (!row_alive[rr])
                    continue;
                if (v % p != 0) {
                    r = rr;
                    c = cc;
                    return true;
                }
            }
        }
        return false;
    }
};

// Clears the pivot row and column with Euclidean steps. The pivot may move
// (strictly decreasing in absolute value); its final position is returned.
void clear_pivot_cross(Elimination& e, int& pr, int& pc) {
    for (;;) {
        bool clean = true;
        Int p = e.value(pr, pc);

        std::vector<int> col_rows;
        for (const auto& [r, v] : e.col_data[pc])
            if (r != pr && e.row_alive[r])
                col_rows.push_back(r);
        for (int r : col_rows) {
            Int a = e.value(r, pc);
            if (a == 0)
                continue;
            Int q = a / p; // truncated: |a - q p| < |p|
            e.row_axpy(r, pr, q);
            Int rem = e.value(r, pc);
            if (rem != 0) {
                pr = r; // smaller pivot
                clean = false;
                break;
            }
        }
        if (!clean)
            continue;

        std::vector<int> row_cols;
        for (int c : e.row_cols[pr])
            if (c != pc && e.col_alive[c])
                row_cols.push_back(c);
        for (int c : row_cols) {
            Int a = e.value(pr, c);
            if (a == 0)
                continue;
            Int q = a / p;
            e.col_axpy(c, pc, q);
            Int rem = e.value(pr, c);
            if (rem != 0) {
                pc = c;
                clean = false;
                break;
            }
        }
        if (clean)
            return;
    }
}

bool is_prime(std::int64_t p) {
    if (p < 2)
        return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    std::int64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1)
            result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    Elimination e(m);
    std::vector<Int> factors;

    int pr = 0, pc = 0;
    while (e.select_pivot(pr, pc)) {
        for (;;) {
            clear_pivot_cross(e, pr, pc);
            Int p = e.value(pr, pc);
            int r = 0, c = 0;
            // Temporarily hide the pivot cross when looking for entries the
            // pivot must divide.
            e.row_alive[pr] = false;
            e.col_alive[pc] = false;
            bool bad = e.any_live_entry_not_divisible(p, r, c);
            e.row_alive[pr] = true;
            e.col_alive[pc] = true;
            if (!bad)
                break;
            // Fold the offending row into the pivot row and keep clearing.
            e.row_axpy(pr, r, Int(-1));
        }
        factors.push_back(abs(e.value(pr, pc)));
        e.retire(pr, pc);
    }

    SmithForm out;
    out.rank = static_cast<int>(factors.size());
    out.invariant_factors = std::move(factors);
    return out;
}

int rank(const IntMatrix& m) {
    Elimination e(m);
    int rk = 0;
    int pr = 0, pc = 0;
    while (e.select_pivot(pr, pc)) {
        ++rk;
        Int p = e.value(pr, pc);
        std::vector<int> col_rows;
        for (const auto& [r, v] : e.col_data[pc])
            if (r != pr && e.row_alive[r])
                col_rows.push_back(r);
        for (int r : col_rows) {
            Int a = e.value(r, pc);
            if (a == 0)
                continue;
            Int g = gcd(p, a);
            Int scale_keep = p / g;
            Int scale_sub = a / g;
            // row r := (p/g) row r - (a/g) pivot row; kills (r, pc) exactly.
            std::vector<int> cs = e.row_cols[r];
            for (int c : e.row_cols[pr]) {
                if (!e.col_alive[c])
                    continue;
                auto it = std::lower_bound(cs.begin(), cs.end(), c);
                if (it == cs.end() || *it != c)
                    cs.insert(it, c);
            }
            Int content;
            std::vector<std::pair<int, Int>> updated;
            for (int c : cs) {
                if (!e.col_alive[c])
                    continue;
                Int nv = scale_keep * e.value(r, c) - scale_sub * e.value(pr, c);
                if (nv != 0)
                    content = content == 0 ? abs(nv) : gcd(content, abs(nv));
                updated.emplace_back(c, std::move(nv));
            }
            for (auto& [c, nv] : updated)
                e.set(r, c, content > 1 && nv != 0 ? Int(nv / content) : nv);
        }
        e.retire(pr, pc);
    }
    return rk;
}

int rank_mod_p(const IntMatrix& m, std::int64_t p) {
    if (!is_prime(p))
        throw domain_error("rank_mod_p requires a prime modulus");

    std::vector<std::map<int, std::int64_t>> cols(m.cols());
    for (int c = 0; c < m.cols(); ++c) {
        for (const auto& [r, v] : m.column(c)) {
            std::int64_t red = static_cast<std::int64_t>(v % p);
            if (red < 0)
                red += p;
            if (red != 0)
                cols[c][r] = red;
        }
    }

    std::vector<char> row_used(m.rows(), 0);
    int rk = 0;
    for (int c = 0; c < m.cols(); ++c) {
        int pivot_row = -1;
        for (const auto& [r, v] : cols[c]) {
            if (!row_used[r]) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0)
            continue;
        ++rk;
        row_used[pivot_row] = 1;
        std::int64_t pv = cols[c][pivot_row];
        std::int64_t inv = mod_pow(pv, p - 2, p);
        for (int c2 = c + 1; c2 < m.cols(); ++c2) {
            auto it = cols[c2].find(pivot_row);
            if (it == cols[c2].end())
                continue;
            std::int64_t factor = it->second * inv % p;
            for (const auto& [r, v] : cols[c]) {
                if (row_used[r] && r != pivot_row)
                    continue;
                std::int64_t nv = ((cols[c2].count(r) ? cols[c2][r] : 0) - factor * v) % p;
                if (nv < 0)
                    nv += p;
                if (nv == 0)
                    cols[c2].erase(r);
                else
                    cols[c2][r] = nv;
            }
            cols[c2].erase(pivot_row);
        }
    }
    return rk;
}

} // namespace kh
