#pragma once

// Encoding of connected vertex sets by binary sequences: a connected set A
// containing a root v, with |A| = a and |N(A)| = b, is identified by a string
// of a-1 ones and b zeros. The decoder replays the encoder's deterministic
// frontier scan, so distinct sets get distinct codes and the number of such
// sets is at most C(a+b-1, b).

#include <cstdint>
#include <string>
#include <vector>

#include "gstar/graph.hpp"

namespace gstar {

struct ConnectedSetCode {
    int root = 0;
    std::string bits;  // '0'/'1', exactly a-1 ones and b zeros
    int a = 0;         // |A|
    int b = 0;         // |N(A)|
};

// Grow S = {v}, B = {} by repeatedly taking the smallest-label vertex w of
// N(S) \ B: emit '1' and move w to S if w is in A, else emit '0' and move w
// to B. Stops once S = A and B = N(A).
//
// A must be connected and contain v. b = 0 is legal exactly when A is the
// whole connected component of v.
ConnectedSetCode encode_connected_set(const Graph& g, const std::vector<int>& A, int v);

// Inverse of encode_connected_set. Throws domain_error naming the failing bit
// position if the code is inconsistent with g (frontier empties too early, or
// bits run out with frontier vertices left undecided).
std::vector<int> decode_connected_set(const Graph& g, int v, const std::string& bits);

// All connected sets A with v in A, |A| = a, |N(A)| = b, each exactly once,
// in the canonical order of a depth-first scan of the code tree ('1' branch
// first). Empty result is valid.
std::vector<std::vector<int>> enumerate_connected_sets(const Graph& g, int v, int a, int b);

// C(n, k) in 64-bit arithmetic (throws domain_error on overflow).
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace gstar
