#pragma once
// Coset (syndrome) coding: k secret symbols ride as the syndrome of an
// [n, n-k] code; the transmitted word is a uniformly random member of the
// selected coset. Leakage against a linear observation is counted in q-ary
// symbols via ranks.

#include <string>
#include <vector>

#include "wnc/matrix.hpp"
#include "wnc/rng.hpp"

namespace wnc {

struct SecrecyReport {
  std::vector<int> wiretap_set;
  int observed_rank = 0;
  int leakage_qary = 0;
  bool secure = true;
};

class WiretapCode {
 public:
  // parity must be k x n of full row rank; any such matrix is accepted.
  WiretapCode(Field field, int n, int k, Matrix parity);

  // MDS construction: parity = first k rows of an n-point Vandermonde
  // matrix, so every k columns are independent and the code withstands any
  // n-k observed symbols. Evaluation points are taken in canonical value
  // order 1, 2, ..., with 0 appended when n equals the field order.
  static WiretapCode mds(const Field& field, int n, int k);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  int k() const { return k_; }
  const Matrix& parity() const { return parity_; }

  // Y = A s + B r with parity * A = I and the columns of B spanning the
  // null space of the parity matrix; r is the randomness, one symbol per
  // coset dimension. Enumerating all q^(n-k) randomness vectors walks the
  // coset of s exactly once.
  std::vector<uint32_t> encode_with_randomness(
      const std::vector<uint32_t>& secret,
      const std::vector<uint32_t>& randomness) const;
  std::vector<uint32_t> encode(const std::vector<uint32_t>& secret,
                               Rng& rng) const;
  // Syndrome of y.
  std::vector<uint32_t> decode(const std::vector<uint32_t>& y) const;

  size_t randomness_len() const { return static_cast<size_t>(n_ - k_); }

 private:
  Field field_;
  int n_;
  int k_;
  Matrix parity_;      // k x n
  Matrix right_inv_;   // n x k
  Matrix null_basis_;  // n x (n-k)
};

// leakage_qary = rank(H) + rank(observation) - rank([H; observation]),
// the dimension of the row-space intersection; equals I(S; Z) in units of
// log q under uniform secrets and uniform coset sampling.
SecrecyReport leakage(const WiretapCode& code, const Matrix& observation);

std::string serialize_wiretap_code(const WiretapCode& code);
WiretapCode parse_wiretap_code(const std::string& text);

}  // namespace wnc
