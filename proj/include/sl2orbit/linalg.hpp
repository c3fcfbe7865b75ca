#pragma once

#include <sl2orbit/rational.hpp>

#include <stdexcept>
#include <vector>

namespace sl2orbit {

// Incremental exact row space over Q. Rows are scaled to integer vectors with
// content removed; elimination is fraction-free (cross-multiplication plus a
// content division per step) to control coefficient growth.
class ExactRowSpace {
public:
    explicit ExactRowSpace(int cols) : cols_(cols) {
        if (cols < 0) throw std::invalid_argument("negative column count");
    }

    int columns() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Adds the row if independent of the current span; returns true if added.
    bool insert(const std::vector<Rational>& row) {
        std::vector<Integer> reduced = reduce_against_basis(row);
        int lead = leading_index(reduced);
        if (lead < 0) return false;
        normalize_content(reduced);
        // Keep rows ordered by leading column so reduction is one pass.
        std::size_t pos = 0;
        while (pos < rows_.size() && lead_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(reduced));
        lead_.insert(lead_.begin() + pos, lead);
        return true;
    }

    bool contains(const std::vector<Rational>& row) const {
        return leading_index(reduce_against_basis(row)) < 0;
    }

    // Row-reduced rational basis, each row scaled to leading coefficient 1.
    std::vector<std::vector<Rational>> basis() const {
        std::vector<std::vector<Rational>> result;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::vector<Rational> row(cols_);
            Rational lead_value(rows_[r][lead_[r]]);
            for (int t = 0; t < cols_; ++t) row[t] = Rational(rows_[r][t]) / lead_value;
            result.push_back(std::move(row));
        }
        return result;
    }

private:
    static int leading_index(const std::vector<Integer>& row) {
        for (std::size_t t = 0; t < row.size(); ++t)
            if (row[t] != 0) return static_cast<int>(t);
        return -1;
    }

    static void normalize_content(std::vector<Integer>& row) {
        Integer g = 0;
        for (const auto& v : row) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) break;
        }
        if (g == 0 || g == 1) return;
        for (auto& v : row) v /= g;
    }

    std::vector<Integer> reduce_against_basis(const std::vector<Rational>& row) const {
        if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("column mismatch");
        // Clear denominators.
        Integer denom = 1;
        for (const auto& c : row) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den_mpz_t());
        std::vector<Integer> work(cols_);
        for (int t = 0; t < cols_; ++t) {
            Rational scaled = row[t] * Rational(denom);
            work[t] = scaled.get_num();
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            int lead = lead_[r];
            if (work[lead] == 0) continue;
            Integer pivot = rows_[r][lead];
            Integer factor = work[lead];
            Integer g;
            mpz_gcd(g.get_mpz_t(), pivot.get_mpz_t(), factor.get_mpz_t());
            Integer mul = pivot / g;
            Integer sub = factor / g;
            for (int t = 0; t < cols_; ++t) work[t] = work[t] * mul - rows_[r][t] * sub;
        }
        std::vector<Integer> out(std::move(work));
        normalize_content(out);
        return out;
    }

    int cols_;
    std::vector<std::vector<Integer>> rows_;
    std::vector<int> lead_;
};

}  // namespace sl2orbit
