#include "evo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace evo {

namespace {

using Word = std::uint64_t;
using Column = std::vector<Word>;

// Search state over F_p in adapted (ann-first) coordinates of both algebras.
class PatternSearch {
public:
    PatternSearch(const EvolutionAlgebra& e1, const EvolutionAlgebra& e2, const AnnSeries& s1, const AnnSeries& s2)
        : p_(e1.field().modulus()), n_(e1.dim()), field_(e1.field()) {
        for (const auto& b : s1.blocks) order1_.insert(order1_.end(), b.begin(), b.end());
        for (const auto& b : s2.blocks) order2_.insert(order2_.end(), b.begin(), b.end());
        a1_ = reduce(e1, order1_);
        a2_ = reduce(e2, order2_);
        std::size_t start = 0;
        for (const auto& b : s1.blocks) {
            std::vector<std::size_t> idx;
            for (std::size_t k = 0; k < b.size(); ++k) idx.push_back(start + k);
            blocks_.push_back(idx);
            for (std::size_t k = 0; k < b.size(); ++k) block_of_.push_back(blocks_.size() - 1);
            start += b.size();
        }
        cols_.assign(n_, Column(n_, 0));
        appears_.assign(n_, false);
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t k = 0; k < n_; ++k) appears_[k] = appears_[k] || a1_[r][k] != 0;
    }

    std::optional<Matrix> exhaustive() {
        if (!dfs(0)) return std::nullopt;
        return result();
    }

    // Depth-first search visiting accepted candidates in random order; every
    // dead end uses one trial of the budget.
    std::optional<Matrix> sample(std::mt19937_64& rng, std::uint64_t max_trials) {
        std::uint64_t trials = 0;
        if (!random_dfs(0, rng, trials, max_trials)) return std::nullopt;
        return result();
    }

private:
    Word mul(Word a, Word b) const { return static_cast<Word>((static_cast<unsigned __int128>(a) * b) % p_); }
    Word addm(Word a, Word b) const { return (a + b) % p_; }

    static std::vector<Column> reduce(const EvolutionAlgebra& e, const std::vector<std::size_t>& order) {
        std::size_t n = e.dim();
        std::vector<Column> a(n, Column(n, 0));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) a[r][c] = e.structure()(order[r], order[c]).residue();
        }
        return a;
    }

    // Product of two vectors in E2 (adapted coordinates).
    Column product(const Column& v, const Column& w) const {
        Column out(n_, 0);
        for (std::size_t t = 0; t < n_; ++t) {
            Word c = mul(v[t], w[t]);
            if (c == 0) continue;
            for (std::size_t k = 0; k < n_; ++k) out[k] = addm(out[k], mul(c, a2_[t][k]));
        }
        return out;
    }

    // Calls f on every accepted pattern column for j until f returns true.
    // Annihilator coordinates change neither the square nor the products with
    // earlier columns, so acceptance is decided on the block part alone and the
    // accepted block parts are then combined with every annihilator part. When
    // e_j occurs in no square its annihilator part is never constrained, and
    // the single value 0 (or one random value) stands for all of them.
    template <typename F>
    bool for_each_accepted(std::size_t j, F&& f, std::mt19937_64* rng = nullptr) const {
        const auto& own = blocks_[block_of_[j]];
        std::vector<std::size_t> ann = block_of_[j] == 0 ? std::vector<std::size_t>{} : blocks_[0];
        if (!appears_[j] && !ann.empty()) {
            Column lhs = target(j);
            Column v(n_, 0);
            return odometer(own, v, [&](Column& x) {
                if (!accept(j, x, lhs)) return false;
                Column full = x;
                for (std::size_t t : ann) full[t] = rng ? std::uniform_int_distribution<Word>(0, p_ - 1)(*rng) : 0;
                return f(full);
            });
        }
        Column lhs = target(j);
        Column v(n_, 0);
        return odometer(own, v, [&](Column& x) {
            if (!accept(j, x, lhs)) return false;
            return odometer(ann, x, [&](Column& full) { return f(full); });
        });
    }

    // Runs through all values of the coordinates idx of v (restoring zeros after).
    template <typename F>
    bool odometer(const std::vector<std::size_t>& idx, Column& v, F&& f) const {
        std::vector<Word> digits(idx.size(), 0);
        bool found = false;
        while (true) {
            for (std::size_t k = 0; k < idx.size(); ++k) v[idx[k]] = digits[k];
            if (f(v)) {
                found = true;
                break;
            }
            std::size_t k = idx.size();
            bool carry = true;
            while (carry && k > 0) {
                --k;
                if (++digits[k] < p_) carry = false;
                else digits[k] = 0;
            }
            if (carry) break;
        }
        for (std::size_t t : idx) v[t] = 0;
        return found;
    }

    bool independent_in_block(std::size_t j, const Column& v) const {
        std::size_t b = block_of_[j];
        const auto& idx = blocks_[b];
        std::vector<Column> rows;
        for (std::size_t k : idx) {
            if (k >= j) break;
            Column r;
            for (std::size_t t : idx) r.push_back(cols_[k][t]);
            rows.push_back(r);
        }
        Column r;
        for (std::size_t t : idx) r.push_back(v[t]);
        rows.push_back(r);
        // Gaussian elimination mod p.
        std::size_t rank = 0;
        std::size_t width = idx.size();
        for (std::size_t c = 0; c < width && rank < rows.size(); ++c) {
            std::size_t piv = rank;
            while (piv < rows.size() && rows[piv][c] == 0) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[piv], rows[rank]);
            Word inv = inverse(rows[rank][c]);
            for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
                if (r2 == rank || rows[r2][c] == 0) continue;
                Word factor = mul(rows[r2][c], inv);
                for (std::size_t c2 = 0; c2 < width; ++c2) rows[r2][c2] = addm(rows[r2][c2], p_ - mul(factor, rows[rank][c2]));
            }
            ++rank;
        }
        return rank == rows.size();
    }

    Word inverse(Word a) const {
        Word result = 1;
        Word base = a;
        Word e = p_ - 2;
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    // Columns 0..j-1 are assigned; the square of basis vector j only involves
    // earlier blocks, so phi(e_j^2) is already known.
    Column target(std::size_t j) const {
        Column lhs(n_, 0);
        for (std::size_t k = 0; k < n_; ++k) {
            if (a1_[j][k] == 0) continue;
            for (std::size_t t = 0; t < n_; ++t) lhs[t] = addm(lhs[t], mul(a1_[j][k], cols_[k][t]));
        }
        return lhs;
    }

    bool accept(std::size_t j, const Column& v, const Column& lhs) const {
        if (product(v, v) != lhs) return false;
        for (std::size_t k = 0; k < j; ++k) {
            if (!orthogonal(v, cols_[k])) return false;
        }
        return independent_in_block(j, v);
    }

    bool orthogonal(const Column& v, const Column& w) const {
        Column out = product(v, w);
        return std::all_of(out.begin(), out.end(), [](Word x) { return x == 0; });
    }

    bool dfs(std::size_t j) {
        if (j == n_) return true;
        return for_each_accepted(j, [&](const Column& v) {
            cols_[j] = v;
            return dfs(j + 1);
        });
    }

    bool random_dfs(std::size_t j, std::mt19937_64& rng, std::uint64_t& trials, std::uint64_t max_trials) {
        if (j == n_) return true;
        std::vector<Column> accepted;
        for_each_accepted(
            j,
            [&](const Column& v) {
                accepted.push_back(v);
                return false;
            },
            &rng);
        std::shuffle(accepted.begin(), accepted.end(), rng);
        if (accepted.empty()) ++trials;
        for (const auto& v : accepted) {
            if (trials >= max_trials) return false;
            cols_[j] = v;
            if (random_dfs(j + 1, rng, trials, max_trials)) return true;
        }
        return false;
    }

    Matrix result() const {
        Matrix m(n_, n_, field_);
        for (std::size_t c = 0; c < n_; ++c) {
            for (std::size_t r = 0; r < n_; ++r) m(order2_[r], order1_[c]) = FieldElement::from_int(field_, static_cast<long>(cols_[c][r]));
        }
        return m;
    }

    Word p_;
    std::size_t n_;
    FieldDescriptor field_;
    std::vector<std::size_t> order1_, order2_;
    std::vector<Column> a1_, a2_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> block_of_;
    std::vector<Column> cols_;
    std::vector<bool> appears_;  // basis vector k of E1 occurs in some square
};

struct Prepared {
    AnnSeries s1, s2;
    bool comparable = false;
};

Prepared prepare(const EvolutionAlgebra& e1, const EvolutionAlgebra& e2) {
    if (!(e1.field() == e2.field())) raise(ErrorCode::MixedFields, "algebras over different fields");
    if (!e1.field().is_prime_field()) raise(ErrorCode::UnsupportedField, "the oracle searches over prime fields only");
    Prepared p;
    if (e1.dim() != e2.dim()) return p;
    p.s1 = upper_series(e1);
    p.s2 = upper_series(e2);
    p.comparable = p.s1.nilpotent && p.s2.nilpotent && p.s1.type_vector == p.s2.type_vector;
    return p;
}

std::optional<Matrix> checked(const EvolutionAlgebra& e1, const EvolutionAlgebra& e2, std::optional<Matrix> m) {
    if (m && !verify_hom(e1, e2, *m)) raise(ErrorCode::DomainError, "internal: oracle produced a map that is not a homomorphism");
    return m;
}

}  // namespace

bool verify_hom(const EvolutionAlgebra& e1, const EvolutionAlgebra& e2, const Matrix& m) {
    std::size_t n = e1.dim();
    if (e2.dim() != n || m.rows() != n || m.cols() != n) raise(ErrorCode::ShapeError, "map and algebras differ in size");
    if (!(e1.field() == e2.field()) || !(m.field() == e1.field())) raise(ErrorCode::MixedFields, "map and algebras over different fields");
    if (!m.is_invertible()) raise(ErrorCode::Singular, "the map is not invertible");
    std::vector<Vector> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(m.col(i));
    for (std::size_t i = 0; i < n; ++i) {
        if (m * e1.square_of_basis(i) != square(e2, images[i])) return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!is_zero_vector(multiply(e2, images[i], images[j]))) return false;
        }
    }
    return true;
}

std::size_t free_entry_count(const std::vector<std::size_t>& type_vector) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < type_vector.size(); ++i) {
        count += type_vector[i] * type_vector[i];
        if (i > 0) count += type_vector[0] * type_vector[i];
    }
    return count;
}

std::optional<Matrix> exhaustive_iso(const EvolutionAlgebra& e1, const EvolutionAlgebra& e2, const SearchBudget& budget) {
    (void)budget;
    Prepared prep = prepare(e1, e2);
    if (!prep.comparable) return std::nullopt;
    double size = std::pow(static_cast<double>(e1.field().modulus()), static_cast<double>(free_entry_count(prep.s1.type_vector)));
    if (size > kExhaustiveLimit) {
        raise(ErrorCode::BudgetExceeded, "exhaustive search over about " + std::to_string(static_cast<long double>(size)) + " maps exceeds the limit");
    }
    PatternSearch search(e1, e2, prep.s1, prep.s2);
    return checked(e1, e2, search.exhaustive());
}

std::optional<Matrix> randomized_iso(const EvolutionAlgebra& e1, const EvolutionAlgebra& e2, const SearchBudget& budget) {
    Prepared prep = prepare(e1, e2);
    if (!prep.comparable) return std::nullopt;
    std::mt19937_64 rng(budget.seed);
    PatternSearch search(e1, e2, prep.s1, prep.s2);
    return checked(e1, e2, search.sample(rng, budget.max_trials));
}

}  // namespace evo
