#pragma once
// Security-constrained code construction and the associated alphabet-size
// bounds: the modified flow construction keeps every wiretap observation's
// row space clear of the parity row space, closed-form secure codes for
// combination networks, projective-line colors for two-source networks, and
// the rank-based security checker.

#include <optional>
#include <string>
#include <vector>

#include "wnc/netcode.hpp"
#include "wnc/wiretap.hpp"

namespace wnc {

struct SecureCodeBundle {
  Network net;
  WiretapCode code;
  NetworkCode net_code;
  int mu = 0;
  // Edges the adversary may tap during construction; empty optional = all.
  std::optional<std::vector<int>> tappable;

  std::vector<int> tappable_ids() const;
};

struct SecureConstructError : std::runtime_error {
  int edge_id;
  std::vector<int> wiretap_subset;  // a violated set, when one was seen
  SecureConstructError(int edge, std::vector<int> subset,
                       const std::string& what)
      : std::runtime_error(what),
        edge_id(edge),
        wiretap_subset(std::move(subset)) {}
};

// Modified flow construction: every candidate local vector must, besides
// keeping receiver flow matrices invertible, keep rank([H; C_W]) equal to
// k + rank(C_W) for each wiretap set W = {e} u W' with W' drawn from the
// already-processed tappable edges. parity defaults to the MDS construction.
// Requires k + mu <= n.
SecureCodeBundle secure_lif_construct(
    const Network& net, int n, int k, int mu, const Field& field,
    std::optional<Matrix> parity, Rng& rng,
    std::optional<std::vector<int>> tappable = std::nullopt,
    bool shuffle_candidates = false);

// Sufficient alphabet size for the security-constrained flow construction:
// C(|E|-1, mu-1) + t; any field with q strictly greater works.
unsigned long long secure_lif_alphabet_bound(unsigned long long edge_count,
                                             unsigned long long mu,
                                             unsigned long long t);

// Network-size-independent variant counting only encoding nodes and the
// source out-degree delta: C(k^3 t^2 + delta, mu-1) + t.
unsigned long long encoding_node_alphabet_bound(unsigned long long k,
                                                unsigned long long t,
                                                unsigned long long delta,
                                                unsigned long long mu);

// Smallest sufficient alphabet for securing any two-source network with t
// receivers: floor(sqrt(2t - 7/4) + 1/2) + 1. Requires t >= 2.
unsigned long long two_source_alphabet(unsigned long long t);

// Projective-line points [0 1], [1 0], [1 a^i] minus [1 1]: exactly q
// colors, one per row, each independent of [1 1]. Requires q >= 3.
Matrix two_source_colors(const Field& field);

// Closed-form secure code for the combination network B(n, M): one
// n x (M+k) Vandermonde matrix supplies the parity matrix (first k columns,
// transposed) and the M source-edge coding vectors (remaining columns).
// Secure at mu = n-k against taps anywhere. Requires q >= M + k.
SecureCodeBundle combination_secure_code(int n, int mid, int k,
                                         const Field& field);

// One report per wiretap set of size 1..mu within the tappable edges (a
// single empty-set report when mu = 0), in lexicographic order.
std::vector<SecrecyReport> check_wiretap_security(const SecureCodeBundle& bundle,
                                                  int mu);

bool all_secure(const std::vector<SecrecyReport>& reports);

std::string serialize_bundle(const SecureCodeBundle& bundle);
// The bundle file stores the codes but not the topology; the caller supplies
// the network the bundle was built for.
SecureCodeBundle parse_bundle(const std::string& text, Network net);

}  // namespace wnc
