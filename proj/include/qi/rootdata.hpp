#pragma once

#include <map>
#include <optional>
#include <string>

#include "qi/common.hpp"

namespace qi::rootdata {

struct CartanType {
  char series = 'A';  // A,B,C,D,E,F,G
  int rank = 1;

  // Rank bounds as the paper's section headings fix them.
  bool valid_strict() const {
    switch (series) {
      case 'A': return rank >= 1;
      case 'B': return rank >= 2;
      case 'C': return rank >= 3;
      case 'D': return rank >= 4;
      case 'E': return rank >= 6 && rank <= 8;
      case 'F': return rank == 4;
      case 'G': return rank == 2;
      default: return false;
    }
  }
  // Relaxed bounds for internal use (dual of B_2 is C_2, subsystem labels
  // D_2 = A_1A_1, D_3 = A_3 appear in tables).
  bool valid_relaxed() const {
    switch (series) {
      case 'A': return rank >= 1;
      case 'B': return rank >= 1;
      case 'C': return rank >= 1;
      case 'D': return rank >= 2;
      case 'E': return rank >= 6 && rank <= 8;
      case 'F': return rank == 4;
      case 'G': return rank == 2;
      default: return false;
    }
  }
  std::string label() const { return std::string(1, series) + std::to_string(rank); }
  friend bool operator==(const CartanType& a, const CartanType& b) {
    return a.series == b.series && a.rank == b.rank;
  }
  friend bool operator<(const CartanType& a, const CartanType& b) {
    if (a.series != b.series) return a.series < b.series;
    return a.rank < b.rank;
  }
  i64 weyl_order() const;
  int num_roots() const;
};

// Dual Cartan type: swaps B and C, fixes everything else.
inline CartanType dual_type(CartanType t) {
  if (t.series == 'B') return {'C', t.rank};
  if (t.series == 'C') return {'B', t.rank};
  return t;
}

struct RootSystem {
  CartanType type;
  int n = 0;                      // rank
  IntMat cartan;                  // cartan[i][j] = <alpha_i, coroot_j>
  IntVec len2;                    // normalized squared length of alpha_i (2,4,6)
  std::vector<IntVec> roots;      // positives first (by height, then lex), then negatives
  int npos = 0;
  IntVec marks;                   // m_i with highest root = sum m_i alpha_i
  IntVec highest;                 // coords of the highest root
  std::vector<RatVec> cowt;       // cowt[j] = fundamental coweight j, coroot coords
  std::vector<RatVec> wt;         // wt[j] = fundamental weight j, root coords
  std::vector<std::vector<int>> sref;  // sref[j] = permutation of roots by s_{alpha_j}
  std::map<IntVec, int> index;

  int root_index(const IntVec& r) const {
    auto it = index.find(r);
    if (it == index.end()) throw std::logic_error("root_index: not a root");
    return it->second;
  }
  int simple_root_index(int j) const;   // index of alpha_j (0-based j)
  int negate(int ridx) const { return ridx < npos ? ridx + npos : ridx - npos; }
  bool is_positive(int ridx) const { return ridx < npos; }
  int lowest_root_index() const;        // index of alpha_0 = -highest

  i64 len2_of(const IntVec& r) const;   // (alpha, alpha) normalized
  bool is_long_root(const IntVec& r) const;
  Rat pairing(const IntVec& root_coords, const RatVec& coroot_coords) const;
  IntVec coroot(const IntVec& r) const; // coroot of r, simple-coroot coords

  // Number of extended nodes = n + 1 (node 0 is alpha_0).
  // Extended node i -> root index.
  int ext_node_root(int node) const {
    return node == 0 ? lowest_root_index() : simple_root_index(node - 1);
  }
  i64 ext_mark(int node) const { return node == 0 ? 1 : marks[node - 1]; }
  // Adjacency in the extended diagram: nonzero pairing.
  bool ext_adjacent(int a, int b) const;
  // <alpha_a, coroot(alpha_b)> for extended nodes a, b.
  i64 ext_cartan(int a, int b) const;
};

RootSystem build_root_system(CartanType t);

// Finite quotient group Q = (lattice generated by `gens` + modulus) / modulus,
// with elements stored as canonical representatives (reduced mod modulus).
// Used for Pi, dual Pi, centres, isogeny kernels.
struct ClassGroup {
  IntMat modulus_hnf;              // full-rank row HNF of the modulus lattice
  std::vector<RatVec> elems;       // elems[0] = 0
  std::map<std::vector<std::pair<i64, i64>>, int> lookup;

  int size() const { return int(elems.size()); }
  RatVec reduce(const RatVec& v) const { return reduce_mod_lattice(v, modulus_hnf); }
  int index_of(const RatVec& v) const;
  int add(int a, int b) const;
  int neg(int a) const;
  int scalar(int a, i64 k) const;
  int order_of(int a) const;
  // subgroup generated by the given element indices, as sorted element list
  std::vector<int> subgroup(const std::vector<int>& gen_idx) const;
  // elements of order coprime to p (p = 0 means all)
  std::vector<int> p_prime_part(i64 p) const;
  std::string structure_name() const;  // e.g. "1", "C2", "C4", "C2xC2"
};

ClassGroup make_class_group(const std::vector<RatVec>& gens, const IntMat& modulus_basis);

// Isogeny-type spec: the subgroup H of Pi = Z Omega / Z Phi that is the image
// of the character lattice X.  Generators are Bourbaki node indices (1-based);
// empty = adjoint, all nodes (or any generating set of Pi) = simply connected.
struct LatticeSpec {
  CartanType type;
  std::vector<int> gens;  // node indices of fundamental weights generating H

  static LatticeSpec sc(CartanType t);
  static LatticeSpec ad(CartanType t);
  static LatticeSpec so(CartanType t);     // type D: <pi_1>
  static LatticeSpec hspin(CartanType t);  // type D, even rank: <pi_n>
  std::string name() const;                // sc|ad|so|hspin|custom
};

// All lattice-derived data for one group G determined by (root system, H).
struct LatticeData {
  const RootSystem* rs = nullptr;
  LatticeSpec spec;
  ClassGroup pi;        // Z Omega / Z Phi, generators = classes of weights
  ClassGroup pi_dual;   // Z cOmega / Z cPhi
  std::vector<int> H;         // image of X in pi (sorted element indices)
  std::vector<int> H_dual;    // image of cX in pi_dual = Ann(H)
  IntMat x_hnf;         // HNF basis of X in root coords
  IntMat cx_hnf;        // HNF basis of cX in coroot coords

  // Centre Z(G) = (Z cOmega / cX)_{p'}: a class group on coweights mod cX.
  ClassGroup centre_full;   // before taking p'-part
  // Ker(delta_sc : G_sc -> G) = (cX / Z cPhi)_{p'} = Ann(H) inside pi_dual.

  // pairing of a pi-class and a pi_dual-class, value in Q/Z
  Rat pair_classes(const RatVec& xcls, const RatVec& ycls) const;
};

LatticeData make_lattice_data(const RootSystem& rs, const LatticeSpec& spec);

// Dual lattice spec: group with dual root system whose X-image subgroup is
// Ann(H).  For B/C this also swaps the Cartan type.
LatticeSpec dual_lattice(const RootSystem& rs, const LatticeSpec& spec);

// Annihilator of H inside pi_dual, as element indices of pi_dual.
std::vector<int> annihilator(const LatticeData& ld);

}  // namespace qi::rootdata
