#pragma once

// Reference Betti numbers for monomial quotients R/I, computed through the
// squarefree complex K^b = {tau : x^(b-tau) in I} instead of graded pieces:
// the multiplicity at (i,b) is the reduced homology dimension in degree i-2
// of K^b. Only the exact rank routine is shared with the library under test.

#include <cstdint>
#include <vector>

#include "multibetti/alexander.hpp"
#include "multibetti/matrix.hpp"

namespace oracle {

inline std::size_t simplicial_betti(const multibetti::MonomialIdeal& ideal, std::size_t i,
                                    const multibetti::DegreeVector& b) {
  using namespace multibetti;
  const std::size_t m = ideal.vars();
  if (ideal.is_unit()) return 0;  // quotient is the zero module
  if (i == 0) return b == DegreeVector::zero(m) ? 1 : 0;
  if (i > m + 1) return 0;

  // faces grouped by cardinality; homological degree = cardinality - 1
  std::vector<std::vector<SubsetMask>> faces(m + 1);
  for (std::uint32_t raw = 0; raw < (std::uint32_t{1} << m); ++raw) {
    SubsetMask tau(raw);
    DegreeVector shifted = b;
    for (std::size_t j : tau.indices()) shifted[j] -= 1;
    if (ideal.contains(shifted)) faces[tau.count()].push_back(tau);
  }

  const RationalField field;
  // boundary from cardinality-k faces to cardinality-(k-1) faces
  const auto boundary_rank = [&](std::size_t k) -> std::size_t {
    if (k == 0 || k > m || faces[k].empty()) return 0;
    ExactMatrix<RationalField> mat(field, faces[k - 1].size(), faces[k].size());
    for (std::size_t col = 0; col < faces[k].size(); ++col) {
      const auto verts = faces[k][col].indices();
      for (std::size_t pos = 0; pos < verts.size(); ++pos) {
        const SubsetMask sub = faces[k][col].without(verts[pos]);
        for (std::size_t row = 0; row < faces[k - 1].size(); ++row) {
          if (faces[k - 1][row] == sub) {
            mat.at(row, col) =
                pos % 2 == 0 ? field.one() : field.neg(field.one());
            break;
          }
        }
      }
    }
    return rank(mat);
  };

  const std::size_t card = i - 1;  // faces of homological degree i-2
  const std::size_t dim = card <= m ? faces[card].size() : 0;
  return dim - boundary_rank(card) - boundary_rank(card + 1);
}

}  // namespace oracle
