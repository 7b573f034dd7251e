#include "wnc/wiretap.hpp"

#include <sstream>
#include <stdexcept>

namespace wnc {

namespace {

// Reduced row echelon form of H together with the transform T (R = T H)
// and the pivot columns. H must have full row rank.
struct Rref {
  Matrix reduced;
  Matrix transform;
  std::vector<size_t> pivots;
};

Rref rref_full_rank(const Matrix& h) {
  Matrix r = h;
  Matrix t = Matrix::identity(h.field(), h.rows());
  const Field& f = h.field();
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    size_t sel = r.rows();
    for (size_t i = row; i < r.rows(); ++i) {
      if (r.value_at(i, col) != 0) {
        sel = i;
        break;
      }
    }
    if (sel == r.rows()) continue;
    if (sel != row) {
      auto tmp = r.row_values(row);
      r.set_row_values(row, r.row_values(sel));
      r.set_row_values(sel, tmp);
      tmp = t.row_values(row);
      t.set_row_values(row, t.row_values(sel));
      t.set_row_values(sel, tmp);
    }
    uint32_t inv = f.inv_v(r.value_at(row, col));
    for (size_t c = 0; c < r.cols(); ++c)
      r.set_value(row, c, f.mul_v(r.value_at(row, c), inv));
    for (size_t c = 0; c < t.cols(); ++c)
      t.set_value(row, c, f.mul_v(t.value_at(row, c), inv));
    for (size_t i = 0; i < r.rows(); ++i) {
      if (i == row) continue;
      uint32_t factor = r.value_at(i, col);
      if (factor == 0) continue;
      for (size_t c = 0; c < r.cols(); ++c)
        r.set_value(i, c,
                    f.sub_v(r.value_at(i, c), f.mul_v(factor, r.value_at(row, c))));
      for (size_t c = 0; c < t.cols(); ++c)
        t.set_value(i, c,
                    f.sub_v(t.value_at(i, c), f.mul_v(factor, t.value_at(row, c))));
    }
    pivots.push_back(col);
    ++row;
  }
  if (pivots.size() != h.rows())
    throw std::invalid_argument("parity matrix must have full row rank");
  return {std::move(r), std::move(t), std::move(pivots)};
}

}  // namespace

WiretapCode::WiretapCode(Field field, int n, int k, Matrix parity)
    : field_(std::move(field)),
      n_(n),
      k_(k),
      parity_(std::move(parity)),
      right_inv_(field_, 0, 0),
      null_basis_(field_, 0, 0) {
  if (k < 0 || n < 1 || k > n)
    throw std::invalid_argument("need 0 <= k <= n, n >= 1");
  if (parity_.rows() != static_cast<size_t>(k) ||
      parity_.cols() != static_cast<size_t>(n))
    throw std::invalid_argument("parity matrix must be k x n");
  if (!parity_.field().same_as(field_))
    throw std::invalid_argument("parity matrix field mismatch");

  Rref r = rref_full_rank(parity_);
  // Right inverse: columns solve H a = e_j with free coordinates zero.
  right_inv_ = Matrix(field_, n_, k_);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j)
      right_inv_.set_value(r.pivots[i], j, r.transform.value_at(i, j));
  // Null-space basis, one column per free coordinate.
  null_basis_ = Matrix(field_, n_, n_ - k_);
  size_t out = 0;
  std::vector<char> is_pivot(n_, 0);
  for (size_t p : r.pivots) is_pivot[p] = 1;
  for (int c = 0; c < n_; ++c) {
    if (is_pivot[c]) continue;
    null_basis_.set_value(c, out, 1);
    for (int i = 0; i < k_; ++i)
      null_basis_.set_value(r.pivots[i], out,
                            field_.neg_v(r.reduced.value_at(i, c)));
    ++out;
  }
}

WiretapCode WiretapCode::mds(const Field& field, int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("mds code needs 1 <= k <= n");
  if (static_cast<uint32_t>(n) > field.order())
    throw std::invalid_argument(
        "mds code needs n <= q: only " + std::to_string(field.order()) +
        " distinct evaluation points available");
  std::vector<Fe> points;
  for (uint32_t v = 1; v < field.order() && points.size() < static_cast<size_t>(n);
       ++v)
    points.push_back(field.element(v));
  if (points.size() < static_cast<size_t>(n)) points.push_back(field.zero());
  Matrix h = Matrix::vandermonde(field, k, points);
  return WiretapCode(field, n, k, std::move(h));
}

std::vector<uint32_t> WiretapCode::encode_with_randomness(
    const std::vector<uint32_t>& secret,
    const std::vector<uint32_t>& randomness) const {
  if (secret.size() != static_cast<size_t>(k_))
    throw std::invalid_argument("secret length must be k");
  if (randomness.size() != randomness_len())
    throw std::invalid_argument("randomness length must be n-k");
  std::vector<uint32_t> y = right_inv_.mul_vec_values(secret);
  std::vector<uint32_t> coset = null_basis_.mul_vec_values(randomness);
  for (int i = 0; i < n_; ++i) y[i] = field_.add_v(y[i], coset[i]);
  return y;
}

std::vector<uint32_t> WiretapCode::encode(const std::vector<uint32_t>& secret,
                                          Rng& rng) const {
  std::vector<uint32_t> r(randomness_len());
  for (auto& v : r) v = rng.symbol(field_);
  return encode_with_randomness(secret, r);
}

std::vector<uint32_t> WiretapCode::decode(const std::vector<uint32_t>& y) const {
  if (y.size() != static_cast<size_t>(n_))
    throw std::invalid_argument("codeword length must be n");
  return parity_.mul_vec_values(y);
}

SecrecyReport leakage(const WiretapCode& code, const Matrix& observation) {
  if (observation.cols() != static_cast<size_t>(code.n()))
    throw std::invalid_argument("observation must have n columns");
  if (!observation.field().same_as(code.field()))
    throw std::invalid_argument("observation field mismatch");
  SecrecyReport rep;
  size_t rank_h = code.parity().rank();
  size_t rank_obs = observation.rank();
  size_t rank_stack = code.parity().stacked(observation).rank();
  rep.observed_rank = static_cast<int>(rank_obs);
  rep.leakage_qary = static_cast<int>(rank_h + rank_obs - rank_stack);
  rep.secure = rep.leakage_qary == 0;
  return rep;
}

std::string serialize_wiretap_code(const WiretapCode& code) {
  std::ostringstream os;
  os << "field " << code.field().token() << "\n";
  os << "n " << code.n() << "\n";
  os << "k " << code.k() << "\n";
  os << "H [" << code.parity().token_list() << "]\n";
  return os.str();
}

WiretapCode parse_wiretap_code(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::string field_token;
  int n = -1, k = -1;
  std::vector<std::string> h_tokens;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    if (word == "field") {
      ls >> field_token;
    } else if (word == "n") {
      ls >> n;
    } else if (word == "k") {
      ls >> k;
    } else if (word == "H") {
      std::string rest;
      std::getline(ls, rest);
      auto lb = rest.find('[');
      auto rb = rest.rfind(']');
      if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw std::invalid_argument("H line needs a bracketed list");
      std::istringstream hs(rest.substr(lb + 1, rb - lb - 1));
      std::string tok;
      while (hs >> tok) h_tokens.push_back(tok);
    }
  }
  if (field_token.empty() || n < 1 || k < 0)
    throw std::invalid_argument("wiretap code needs field, n and k");
  Field f = Field::from_token(field_token);
  if (h_tokens.size() != static_cast<size_t>(n) * static_cast<size_t>(k))
    throw std::invalid_argument("H entry count does not match k x n");
  std::vector<uint32_t> vals;
  vals.reserve(h_tokens.size());
  for (const auto& t : h_tokens) vals.push_back(f.value_from_token(t));
  Matrix h = Matrix::from_values(f, k, n, std::move(vals));
  return WiretapCode(f, n, k, std::move(h));
}

}  // namespace wnc
