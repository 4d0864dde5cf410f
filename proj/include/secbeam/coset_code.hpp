#ifndef SECBEAM_COSET_CODE_HPP
#define SECBEAM_COSET_CODE_HPP

#include <cstdint>
#include <vector>

#include "secbeam/rng.hpp"

namespace secbeam {

bool is_prime(std::uint32_t n);
std::uint32_t smallest_prime_geq(std::uint32_t n);

/// Arithmetic modulo a prime q. Elements are plain uint32_t in {0..q-1}.
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t q);  // throws InvalidParameters unless q prime

    std::uint32_t order() const { return q_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % q_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + q_ - b) % q_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % q_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const;  // throws InvalidInput on 0
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : q_ - a; }

  private:
    std::uint32_t q_;
};

/// Coset code built on an [N, N-K] Reed-Solomon code over GF(q). The K x N
/// parity-check matrix is Vandermonde on distinct nonzero evaluation points,
/// so every K columns are invertible (MDS). Messages are syndromes: a message
/// s is sent as a uniformly random x with H x = s.
struct CosetCode {
    int n = 0;  // block length N
    int k = 0;  // message length K
    std::uint32_t q = 0;
    std::vector<std::uint32_t> eval_points;   // N distinct nonzero points
    std::vector<std::uint32_t> parity_check;  // K x N row-major
    std::vector<std::uint32_t> pivot_inverse; // inverse of the first K columns, K x K

    std::uint32_t parity_at(int row, int col) const {
        return parity_check[static_cast<size_t>(row) * n + col];
    }
};

/// Symbol knowledge after eavesdropping: position t (1-based, matching time
/// steps) is either the transmitted symbol or erased.
struct ObservationSequence {
    int n = 0;
    std::vector<std::uint32_t> symbols;  // valid only where observed
    std::vector<bool> observed;
    std::vector<int> observed_set;       // sorted 1-based positions
};

CosetCode build_code(int n, int k, std::uint32_t q);

/// True when the selected columns (0-based) of the parity-check matrix form
/// an invertible K x K submatrix.
bool columns_invertible(const CosetCode& code, const std::vector<int>& cols);

/// Uniformly random coset member with syndrome = message.
std::vector<std::uint32_t> encode(const CosetCode& code,
                                  const std::vector<std::uint32_t>& message, Rng& rng);

/// Syndrome H x of a full received block.
std::vector<std::uint32_t> decode(const CosetCode& code, const std::vector<std::uint32_t>& x);

/// Decode from an observation; throws IncompleteReception if anything is erased.
std::vector<std::uint32_t> decode(const CosetCode& code, const ObservationSequence& z);

ObservationSequence make_observation(const std::vector<std::uint32_t>& x,
                                     const std::vector<int>& observed_positions);

/// Exact H(S^K | Z) in bits for one observation set (1-based positions),
/// by enumerating all q^N transmit blocks. Throws OracleInfeasible when
/// q^N exceeds the budget.
double conditional_entropy_bits(const CosetCode& code, const std::vector<int>& observed_positions,
                                double budget = 1e7);

/// Worst-case equivocation over all observation sets of size mu:
/// min_{|O|=mu} H(S^K | Z^{N,O}) in bits.
double equivocation(const CosetCode& code, int mu, double budget = 1e7);

}  // namespace secbeam

#endif
