#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyclo4seq/cyclotomy.hpp"
#include "cyclo4seq/ext_field.hpp"
#include "cyclo4seq/poly.hpp"
#include "cyclo4seq/seqgen.hpp"

namespace cyclo4seq {

enum class LcMethod { gcd, berlekamp_massey, z4_annihilator };
std::string to_string(LcMethod m);

struct LcResultF4 {
  int L = 0;
  Poly<GF4> poly;  // minimal polynomial m(x) for gcd, connection C(x) for BM
  LcMethod method = LcMethod::gcd;
};

struct LcResultZ4 {
  int L = 0;
  Poly<Z4> connection;  // C(0) = 1, S(x) C(x) = 0 (mod x^N - 1)
  LcMethod method = LcMethod::z4_annihilator;
};

// L = N - deg gcd(x^N - 1, U(x)); m(x) = (x^N - 1) / gcd.
LcResultF4 lc_f4_gcd(const F4Sequence& seq);

// Berlekamp–Massey over GF(4) fed two periods; independent of the gcd route.
LcResultF4 lc_f4_bm(const F4Sequence& seq);

// Whether poly, read as a recurrence (sum_j c_j s(t+j) = 0 for the monic
// m(x), or s(t) = -sum_i c_i s(t-i) for a connection C(x)), annihilates the
// sequence over two periods.
bool annihilates(const Poly<GF4>& min_poly, const F4Sequence& seq);

// --- Z4 linear algebra ---------------------------------------------------

struct Z4System {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> a;  // row-major, rows x cols
  std::vector<std::uint8_t> b;  // rows
};

struct Z4SolveResult {
  bool solvable = false;
  std::vector<Z4> solution;
};

// Row elimination over Z4: unit pivots first (Gauss-Jordan), then the
// residual all-even block is solved as a GF(2) system on the halved entries.
Z4SolveResult z4_solve(const Z4System& system);

// Smith-style invariants (#unit pivots, #two pivots) via two-sided
// elimination. A system is solvable iff 2*n1 + n2 agrees between the
// coefficient matrix and the augmented matrix.
std::pair<int, int> z4_smith_invariants(int rows, int cols, std::vector<std::uint8_t> m);

// The degree-m connection system for the sequence: unknowns c_1..c_m with
// sum_{i=0..m} c_i s(k-i) = 0 for all k, c_0 = 1.
Z4System connection_system(const QuaternarySequence& seq, int m);

bool connection_exists(const QuaternarySequence& seq, int m, Poly<Z4>* witness = nullptr);

// Smallest m for which the connection system is solvable, by incremental m.
LcResultZ4 lc_z4(const QuaternarySequence& seq);

bool z4_witness_valid(const QuaternarySequence& seq, const Poly<Z4>& connection);

// --- root diagnostics ----------------------------------------------------

// Evaluation checks in GF(4^m), m = ord_p(4), and GF(2^r), r = ord_p(2),
// against the eq6 preset: class power sums, the auxiliary-polynomial
// identities, the root set and simplicity of the generating polynomial, and
// the residue-field evaluation of the mod-2 sequence image.
struct RootDiagnostics {
  bool ran = false;
  std::string skip_reason;
  int p = 0;
  unsigned ext_degree = 0;      // ord_p(4)
  unsigned residue_degree = 0;  // ord_p(2)
  bool class_sum_identity_ok = false;    // both lifted class sums equal U4(alpha^(g^k))
  bool aux_poly_identity_ok = false;     // U4(a^v) + U4(a^(v g^2)) = U2(a^v)
  bool eval_decomposition_ok = false;    // U(a^v) = U2(a^(g v)) + mu U2(a^v) + mu + 1
  bool derivative_identity_ok = false;   // U'(a^v) closed form
  bool root_set_ok = false;              // roots exactly H1 ∪ H3 (p=5 mod 8) / none (p=1 mod 8)
  int root_count = -1;
  bool root_count_matches_gcd = false;
  bool simple_roots_ok = false;          // U'(a^v) != 0 at every root
  bool residue_field_ok = false;         // mod-2 image evaluates to 1 at beta^v, v=1..p-1
  bool all_ok() const {
    return ran && class_sum_identity_ok && aux_poly_identity_ok && eval_decomposition_ok &&
           derivative_identity_ok && root_set_ok && root_count_matches_gcd && simple_roots_ok &&
           residue_field_ok;
  }
};

RootDiagnostics run_root_diagnostics(const CyclotomicSystem& sys, unsigned degree_limit = 24,
                                     std::uint64_t seed = kDefaultDrawSeed);

}  // namespace cyclo4seq
