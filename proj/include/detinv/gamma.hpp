#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "detinv/combinatorics.hpp"
#include "detinv/minor_lattice.hpp"

namespace detinv {

/// Diagonal block type: G is a full general linear group, S a special
/// linear group, T the trivial group.
enum class BlockType { G, S, T };

char to_char(BlockType t);

/// Block data for the subgroup H of GL_m that is block upper triangular with
/// diagonal blocks of sizes a_l - a_{l-1}, each of type G, S or T.
struct BlockSpec {
  int m = 0;
  std::vector<int> a;           // 0 = a_0 < a_1 < ... < a_s = m
  std::vector<BlockType> types; // types[l-1] is the type of block l

  int s() const { return int(types.size()); }
  int block_start(int l) const { return a[l - 1]; }  // a_{l-1}
  int block_end(int l) const { return a[l]; }        // a_l
  BlockType type(int l) const { return types[l - 1]; }
  /// Index of the first G block, s + 1 when there is none.
  int epsilon() const;
  /// Block containing the 1-based row position i.
  int block_of(int i) const;

  /// Parses "--a 0,1,3 --tags T,S" style values. Throws std::invalid_argument.
  static BlockSpec parse(int m, std::string_view a_list, std::string_view tag_list);
  /// "m=3 a=0,1,3 tags=T,S"
  std::string to_string() const;

  bool operator==(const BlockSpec&) const = default;
};

/// Throws std::invalid_argument unless a starts at 0, strictly increases,
/// ends at m, and there is exactly one tag per block.
void validate_blocks(const BlockSpec& b);

/// Membership in Γ, straight from the per-block definition.
bool in_gamma(const Minor& x, const BlockSpec& b);

/// All minors of Γ for an m x n matrix, in the lattice's linear extension order.
std::vector<Minor> gamma_generators(const BlockSpec& b, int n);

/// True iff every factor of v lies in Γ.
bool is_gamma_standard(const StandardMonomial& v, const BlockSpec& b);

/// Second route to the same predicate: shape_of(v) lies in Θ and every
/// factor's i-th row index sits inside the block that contains position i.
bool satisfies_block_condition(const StandardMonomial& v, const BlockSpec& b);

/// A dominant weight of GL_m lying in Θ, with its block slices.
struct ThetaWeight {
  DominantWeight weight;
  std::vector<DominantWeight> slices;  // slices[l-1] has rank a_l - a_{l-1}
};

/// The rank-m extension of λ if it lies in Θ (G slices zero, S slices constant).
std::optional<ThetaWeight> to_theta(const Partition& lambda, const BlockSpec& b);

/// Number of degree-d standard monomials with every factor in Γ.
mpz_class hilbert_gamma(const BlockSpec& b, int n, int d);

/// Partitions of d with at most min(m,n) parts that lie in Θ.
std::vector<Partition> theta_partitions(const BlockSpec& b, int n, int d);

/// sum over λ in theta_partitions of dim ∇_{GL_n}(λ) * prod_l dim ∇_{GL_{a_l-a_{l-1}}}(λ(l)).
mpz_class hilbert_theta(const BlockSpec& b, int n, int d);

struct IdentityRow {
  int d;
  mpz_class gamma;
  mpz_class theta;
  bool equal;
};

struct IdentityReport {
  BlockSpec spec;
  int n;
  std::vector<IdentityRow> rows;
  bool pass() const;
};

/// Compares hilbert_gamma and hilbert_theta for d = 0..d_max.
IdentityReport verify_main_identity(const BlockSpec& b, int n, int d_max);

/// Hilbert function of the variety of m x n matrices of rank <= t.
mpz_class hilbert_determinantal(int m, int n, int t, int d);

/// Every block spec for a given m with at most max_blocks blocks, over all
/// compositions of m and all tag assignments. Deterministic order.
std::vector<BlockSpec> all_block_specs(int m, int max_blocks);

}  // namespace detinv
