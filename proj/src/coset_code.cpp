#include "secbeam/coset_code.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "secbeam/errors.hpp"

namespace secbeam {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t smallest_prime_geq(std::uint32_t n) {
    std::uint32_t p = std::max<std::uint32_t>(n, 2);
    while (!is_prime(p)) ++p;
    return p;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
    if (!is_prime(q)) throw InvalidParameters("PrimeField: modulus must be prime");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1 % q_;
    std::uint32_t base = a % q_;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % q_ == 0) throw InvalidInput("PrimeField: zero has no inverse");
    return pow(a, q_ - 2);
}

namespace {

// Inverse of a square matrix over GF(q) by Gauss-Jordan; empty on singular.
std::vector<std::uint32_t> invert_matrix(const PrimeField& f,
                                         std::vector<std::uint32_t> a, int n) {
    std::vector<std::uint32_t> inv(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(i) * n + i] = 1;
    auto at = [n](std::vector<std::uint32_t>& m, int r, int c) -> std::uint32_t& {
        return m[static_cast<size_t>(r) * n + c];
    };
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (at(a, r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return {};
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(at(a, pivot, c), at(a, col, c));
                std::swap(at(inv, pivot, c), at(inv, col, c));
            }
        }
        const std::uint32_t scale = f.inv(at(a, col, col));
        for (int c = 0; c < n; ++c) {
            at(a, col, c) = f.mul(at(a, col, c), scale);
            at(inv, col, c) = f.mul(at(inv, col, c), scale);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || at(a, r, col) == 0) continue;
            const std::uint32_t factor = at(a, r, col);
            for (int c = 0; c < n; ++c) {
                at(a, r, c) = f.sub(at(a, r, c), f.mul(factor, at(a, col, c)));
                at(inv, r, c) = f.sub(at(inv, r, c), f.mul(factor, at(inv, col, c)));
            }
        }
    }
    return inv;
}

void validate_symbols(const CosetCode& code, const std::vector<std::uint32_t>& v) {
    for (std::uint32_t s : v)
        if (s >= code.q) throw InvalidInput("coset code: symbol outside GF(q)");
}

}  // namespace

CosetCode build_code(int n, int k, std::uint32_t q) {
    if (k < 1 || n < 1 || k > n) throw InvalidParameters("build_code: need 1 <= K <= N");
    if (!is_prime(q)) throw InvalidParameters("build_code: q must be prime");
    if (static_cast<std::uint32_t>(n) > q - 1)
        throw FieldTooSmall("build_code: need N <= q-1 distinct nonzero points");

    const PrimeField f(q);
    CosetCode code;
    code.n = n;
    code.k = k;
    code.q = q;
    code.eval_points.resize(n);
    for (int j = 0; j < n; ++j) code.eval_points[j] = static_cast<std::uint32_t>(j + 1);
    code.parity_check.resize(static_cast<size_t>(k) * n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
            code.parity_check[static_cast<size_t>(i) * n + j] =
                f.pow(code.eval_points[j], static_cast<std::uint64_t>(i));

    std::vector<std::uint32_t> pivot(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) pivot[static_cast<size_t>(i) * k + j] = code.parity_at(i, j);
    code.pivot_inverse = invert_matrix(f, std::move(pivot), k);
    if (code.pivot_inverse.empty())
        throw InvalidParameters("build_code: parity-check pivot block singular");
    return code;
}

bool columns_invertible(const CosetCode& code, const std::vector<int>& cols) {
    if (static_cast<int>(cols.size()) != code.k) return false;
    const PrimeField f(code.q);
    std::vector<std::uint32_t> sub(static_cast<size_t>(code.k) * code.k);
    for (int i = 0; i < code.k; ++i)
        for (int j = 0; j < code.k; ++j)
            sub[static_cast<size_t>(i) * code.k + j] = code.parity_at(i, cols[j]);
    return !invert_matrix(f, std::move(sub), code.k).empty();
}

std::vector<std::uint32_t> encode(const CosetCode& code,
                                  const std::vector<std::uint32_t>& message, Rng& rng) {
    if (static_cast<int>(message.size()) != code.k)
        throw InvalidInput("encode: message length must be K");
    validate_symbols(code, message);

    const PrimeField f(code.q);
    std::vector<std::uint32_t> x(code.n, 0);
    for (int j = code.k; j < code.n; ++j)
        x[j] = static_cast<std::uint32_t>(rng.uniform_int(code.q));

    // Solve the first K coordinates from H x = s given the free tail.
    std::vector<std::uint32_t> rhs(code.k);
    for (int i = 0; i < code.k; ++i) {
        std::uint32_t acc = message[i];
        for (int j = code.k; j < code.n; ++j)
            acc = f.sub(acc, f.mul(code.parity_at(i, j), x[j]));
        rhs[i] = acc;
    }
    for (int i = 0; i < code.k; ++i) {
        std::uint32_t acc = 0;
        for (int j = 0; j < code.k; ++j)
            acc = f.add(acc, f.mul(code.pivot_inverse[static_cast<size_t>(i) * code.k + j], rhs[j]));
        x[i] = acc;
    }
    return x;
}

std::vector<std::uint32_t> decode(const CosetCode& code, const std::vector<std::uint32_t>& x) {
    if (static_cast<int>(x.size()) != code.n) throw InvalidInput("decode: block length must be N");
    validate_symbols(code, x);
    const PrimeField f(code.q);
    std::vector<std::uint32_t> s(code.k, 0);
    for (int i = 0; i < code.k; ++i)
        for (int j = 0; j < code.n; ++j) s[i] = f.add(s[i], f.mul(code.parity_at(i, j), x[j]));
    return s;
}

std::vector<std::uint32_t> decode(const CosetCode& code, const ObservationSequence& z) {
    if (z.n != code.n) throw InvalidInput("decode: observation length must be N");
    for (int t = 0; t < code.n; ++t)
        if (!z.observed[t]) throw IncompleteReception("decode: erased symbols present");
    return decode(code, z.symbols);
}

ObservationSequence make_observation(const std::vector<std::uint32_t>& x,
                                     const std::vector<int>& observed_positions) {
    ObservationSequence z;
    z.n = static_cast<int>(x.size());
    z.symbols.assign(z.n, 0);
    z.observed.assign(z.n, false);
    for (int pos : observed_positions) {
        if (pos < 1 || pos > z.n) throw InvalidInput("make_observation: position out of range");
        z.symbols[pos - 1] = x[pos - 1];
        z.observed[pos - 1] = true;
    }
    z.observed_set = observed_positions;
    std::sort(z.observed_set.begin(), z.observed_set.end());
    z.observed_set.erase(std::unique(z.observed_set.begin(), z.observed_set.end()),
                         z.observed_set.end());
    return z;
}

namespace {

// Shared enumeration state: all codewords of the [N, N-K] code plus one coset
// representative per syndrome. Cosets are x_s + C.
struct CosetTables {
    std::vector<std::uint32_t> codewords;        // (q^(N-K)) x N flat
    std::vector<std::uint32_t> representatives;  // (q^K) x N flat
    std::uint64_t num_codewords = 0;
    std::uint64_t num_syndromes = 0;
};

CosetTables enumerate_cosets(const CosetCode& code) {
    const PrimeField f(code.q);
    CosetTables t;
    const int free_len = code.n - code.k;
    t.num_codewords = 1;
    for (int i = 0; i < free_len; ++i) t.num_codewords *= code.q;
    t.num_syndromes = 1;
    for (int i = 0; i < code.k; ++i) t.num_syndromes *= code.q;

    auto solve_pivots = [&](std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& s) {
        std::vector<std::uint32_t> rhs(code.k);
        for (int i = 0; i < code.k; ++i) {
            std::uint32_t acc = s.empty() ? 0 : s[i];
            for (int j = code.k; j < code.n; ++j)
                acc = f.sub(acc, f.mul(code.parity_at(i, j), x[j]));
            rhs[i] = acc;
        }
        for (int i = 0; i < code.k; ++i) {
            std::uint32_t acc = 0;
            for (int j = 0; j < code.k; ++j)
                acc = f.add(acc,
                            f.mul(code.pivot_inverse[static_cast<size_t>(i) * code.k + j], rhs[j]));
            x[i] = acc;
        }
    };

    t.codewords.resize(t.num_codewords * code.n);
    std::vector<std::uint32_t> x(code.n, 0);
    std::vector<std::uint32_t> zero;
    for (std::uint64_t idx = 0; idx < t.num_codewords; ++idx) {
        std::uint64_t rem = idx;
        for (int j = 0; j < free_len; ++j) {
            x[code.k + j] = static_cast<std::uint32_t>(rem % code.q);
            rem /= code.q;
        }
        solve_pivots(x, zero);
        std::copy(x.begin(), x.end(), t.codewords.begin() + idx * code.n);
    }

    t.representatives.resize(t.num_syndromes * code.n);
    std::vector<std::uint32_t> s(code.k);
    std::fill(x.begin(), x.end(), 0);
    for (std::uint64_t idx = 0; idx < t.num_syndromes; ++idx) {
        std::uint64_t rem = idx;
        for (int i = 0; i < code.k; ++i) {
            s[i] = static_cast<std::uint32_t>(rem % code.q);
            rem /= code.q;
        }
        std::fill(x.begin() + code.k, x.end(), 0);
        solve_pivots(x, s);
        std::copy(x.begin(), x.end(), t.representatives.begin() + idx * code.n);
    }
    return t;
}

void check_budget(const CosetCode& code, double budget) {
    const double total = std::pow(static_cast<double>(code.q), code.n);
    if (total > budget)
        throw OracleInfeasible("equivocation oracle: q^N exceeds enumeration budget");
}

double entropy_for_set(const CosetCode& code, const CosetTables& tables,
                       const std::vector<int>& zero_based_positions) {
    const PrimeField f(code.q);
    const int mu = static_cast<int>(zero_based_positions.size());
    const double total = static_cast<double>(tables.num_codewords) *
                         static_cast<double>(tables.num_syndromes);

    std::uint64_t obs_states = 1;
    for (int i = 0; i < mu; ++i) obs_states *= code.q;

    // counts keyed by (projection of x onto O, syndrome index)
    const std::uint64_t dense_size = obs_states * tables.num_syndromes;
    const bool dense = dense_size <= (1ull << 24);
    std::vector<std::uint32_t> dense_counts;
    std::unordered_map<std::uint64_t, std::uint32_t> sparse_counts;
    if (dense)
        dense_counts.assign(dense_size, 0);
    else
        sparse_counts.reserve(static_cast<size_t>(total));

    std::vector<std::uint32_t> x(code.n);
    for (std::uint64_t s_idx = 0; s_idx < tables.num_syndromes; ++s_idx) {
        const std::uint32_t* rep = &tables.representatives[s_idx * code.n];
        for (std::uint64_t c_idx = 0; c_idx < tables.num_codewords; ++c_idx) {
            const std::uint32_t* cw = &tables.codewords[c_idx * code.n];
            std::uint64_t z_key = 0;
            for (int i = 0; i < mu; ++i) {
                const int pos = zero_based_positions[i];
                z_key = z_key * code.q + f.add(rep[pos], cw[pos]);
            }
            const std::uint64_t key = z_key * tables.num_syndromes + s_idx;
            if (dense)
                ++dense_counts[key];
            else
                ++sparse_counts[key];
        }
    }

    // H(S | Z) = sum_z P(z) [log2 c_z - (1/c_z) sum_s c_{z,s} log2 c_{z,s}]
    double entropy = 0.0;
    if (dense) {
        for (std::uint64_t z = 0; z < obs_states; ++z) {
            std::uint64_t cz = 0;
            double inner = 0.0;
            for (std::uint64_t s = 0; s < tables.num_syndromes; ++s) {
                const std::uint32_t c = dense_counts[z * tables.num_syndromes + s];
                if (c == 0) continue;
                cz += c;
                inner += static_cast<double>(c) * std::log2(static_cast<double>(c));
            }
            if (cz == 0) continue;
            entropy += (static_cast<double>(cz) / total) *
                       (std::log2(static_cast<double>(cz)) - inner / static_cast<double>(cz));
        }
    } else {
        std::unordered_map<std::uint64_t, std::pair<std::uint64_t, double>> by_z;
        by_z.reserve(sparse_counts.size());
        for (const auto& [key, c] : sparse_counts) {
            auto& acc = by_z[key / tables.num_syndromes];
            acc.first += c;
            acc.second += static_cast<double>(c) * std::log2(static_cast<double>(c));
        }
        for (const auto& [z, acc] : by_z) {
            (void)z;
            entropy += (static_cast<double>(acc.first) / total) *
                       (std::log2(static_cast<double>(acc.first)) -
                        acc.second / static_cast<double>(acc.first));
        }
    }
    return entropy;
}

}  // namespace

double conditional_entropy_bits(const CosetCode& code, const std::vector<int>& observed_positions,
                                double budget) {
    check_budget(code, budget);
    std::vector<int> zero_based;
    zero_based.reserve(observed_positions.size());
    for (int pos : observed_positions) {
        if (pos < 1 || pos > code.n)
            throw InvalidInput("conditional_entropy_bits: position out of range");
        zero_based.push_back(pos - 1);
    }
    std::sort(zero_based.begin(), zero_based.end());
    zero_based.erase(std::unique(zero_based.begin(), zero_based.end()), zero_based.end());
    const CosetTables tables = enumerate_cosets(code);
    return entropy_for_set(code, tables, zero_based);
}

double equivocation(const CosetCode& code, int mu, double budget) {
    if (mu < 0 || mu > code.n) throw InvalidInput("equivocation: need 0 <= mu <= N");
    check_budget(code, budget);
    const CosetTables tables = enumerate_cosets(code);

    // Walk all C(N, mu) observation sets.
    std::vector<int> select(mu);
    for (int i = 0; i < mu; ++i) select[i] = i;
    double best = std::numeric_limits<double>::infinity();
    while (true) {
        best = std::min(best, entropy_for_set(code, tables, select));
        int i = mu - 1;
        while (i >= 0 && select[i] == code.n - mu + i) --i;
        if (i < 0) break;
        ++select[i];
        for (int j = i + 1; j < mu; ++j) select[j] = select[j - 1] + 1;
    }
    return best;
}

}  // namespace secbeam
