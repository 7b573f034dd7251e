#pragma once
// Linear network codes: per-edge local coefficients plus derived global
// coding vectors, and the flow-based construction that assigns coefficients
// edge by edge in topological order while keeping every receiver's flow
// matrix invertible.

#include <stdexcept>
#include <string>
#include <vector>

#include "wnc/matrix.hpp"
#include "wnc/network.hpp"
#include "wnc/rng.hpp"

namespace wnc {

struct NetworkCode {
  Field field;
  int n = 0;
  // local[e]: coefficients over the tail node's input edges (id order);
  // source edges take n coefficients over the source symbol slots.
  std::vector<std::vector<uint32_t>> local;
  // Row e = global coding vector of edge e; packet(e) = row e . y.
  Matrix global;
};

struct LifError : std::runtime_error {
  int edge_id;
  LifError(int edge, const std::string& what)
      : std::runtime_error(what), edge_id(edge) {}
};

// Multicast code construction. Candidate local vectors are enumerated in
// canonical field order and the first one keeping every receiver's flow
// matrix invertible is taken, so runs are reproducible; the rng is consumed
// only when shuffle_candidates is set (it then rotates the scan origin).
// Edges on no receiver flow combine their inputs with all-ones coefficients.
NetworkCode lif_construct(const Network& net, int n, const Field& field,
                          Rng& rng, bool shuffle_candidates = false);

// packet map: index e holds the symbol carried by edge e for source vector y.
std::vector<uint32_t> evaluate(const NetworkCode& code,
                               const std::vector<uint32_t>& y);

struct ReceiverDecoder {
  int receiver;
  std::vector<int> terminal_edges;  // last edge of each flow path
  Matrix matrix;
  Matrix inverse;
};

ReceiverDecoder make_receiver_decoder(const NetworkCode& code,
                                      const Flow& flow);

// Recovered source vector per receiver, in flow order.
std::vector<std::vector<uint32_t>> receiver_decode(
    const NetworkCode& code, const std::vector<Flow>& flows,
    const std::vector<uint32_t>& packets);

// |W| x n matrix of global coding vectors, rows in edge-id order.
Matrix observation_matrix(const NetworkCode& code,
                          const std::vector<int>& wiretap_set);

// Recomputes every global vector from the locals in topological order and
// compares with the stored rows.
bool globals_consistent(const Network& net, const NetworkCode& code);

std::string serialize_code(const NetworkCode& code);
NetworkCode parse_code(const std::string& text);

}  // namespace wnc
