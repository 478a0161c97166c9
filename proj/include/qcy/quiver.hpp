#pragma once

// Quivers, types (M, P, d), vertex-relabeling canonical forms, cycle
// enumeration, and the purely combinatorial eliminations (dead arrows,
// partition of the arrow set).

#include <optional>
#include <string>
#include <vector>

#include "qcy/eigen_support.hpp"

namespace qcy {

struct Arrow {
  int id;
  int src;
  int dst;
};

class Quiver {
public:
  Quiver() = default;
  explicit Quiver(IMat incidence);

  int vertex_count() const { return static_cast<int>(M_.rows()); }
  const IMat& incidence() const { return M_; }
  // arrows synthesized from M in row-major order; ids are stable
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int id) const { return arrows_[static_cast<std::size_t>(id)]; }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  bool connected() const;

private:
  IMat M_;
  std::vector<Arrow> arrows_;
};

// the permutation mu with P_{ij} = delta_{mu(i), j}
std::vector<int> permutation_of_matrix(const IMat& P);
IMat matrix_of_permutation(const std::vector<int>& mu);
bool is_permutation_matrix(const IMat& P);

struct CYType {
  Quiver quiver;
  IMat P;
  int d = 3;

  const IMat& M() const { return quiver.incidence(); }
  int m() const { return quiver.vertex_count(); }
  std::vector<int> mu() const { return permutation_of_matrix(P); }

  // structural invariants: P a permutation matrix, MP = PM, d >= 3
  bool valid(std::string* why = nullptr) const;
};

CYType make_type(IMat M, IMat P, int d);

struct CanonicalForm {
  IMat M;
  IMat P;
  std::vector<int> witness;  // vertex relabeling achieving the minimum
  bool transposed = false;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return mat_eq(a.M, b.M) && mat_eq(a.P, b.P);
  }
};

// Lexicographic minimum (row-major, M before P) over simultaneous vertex
// relabelings of (M, P), optionally joined with the transpose of both.
CanonicalForm canonicalize(const CYType& t, bool include_transpose = true);

// strict total order for deterministic output
bool canonical_less(const CanonicalForm& a, const CanonicalForm& b);
std::string canonical_key(const CanonicalForm& c);

// every closed composable arrow sequence of the given length; rotations are
// distinct sequences. Count always equals trace(M^length).
std::vector<std::vector<int>> enumerate_cycles(const Quiver& q, int length);

struct PartitionVerdict {
  enum class Kind { not_eliminable, eliminable_partition, dead_arrow };
  Kind kind = Kind::not_eliminable;
  int dead_arrow_id = -1;
  // arrow ids by co-occurrence component when eliminable
  std::vector<std::vector<int>> components;
};

// Dead arrow: some arrow on no s-cycle. Otherwise split the arrow set by
// co-occurrence on s-cycles; >= 2 components is an elimination.
PartitionVerdict partition_eliminable(const Quiver& q, int s);

}  // namespace qcy
