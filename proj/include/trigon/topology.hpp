#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trigon/group_graph.hpp"

namespace trigon {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Surgery on the three components H^A, H^B, H^C of a Hopf-type link.
struct SurgeryPresentation {
    std::array<std::string, 3> components{"H^A", "H^B", "H^C"};
    std::array<std::optional<int>, 3> slopes;  ///< empty: component removed
    IntMatrix pairwise_linking;                ///< 3x3, zero diagonal
};

SurgeryPresentation surgery_presentation(const TriangleParams& params);

/// Relation matrix: slopes on the diagonal, linking numbers off it; rows of
/// removed components are dropped (2x3 when r is infinite).
IntMatrix linking_matrix(const SurgeryPresentation& pres);

struct SmithForm {
    IntMatrix D;
    IntMatrix U;  ///< unimodular, rows x rows
    IntMatrix V;  ///< unimodular, cols x cols
};

/// U M V = D with D diagonal, nonnegative, each entry dividing the next.
SmithForm smith_normal_form(const IntMatrix& M);

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);
IntMatrix identity_matrix(std::size_t n);
BigInt determinant(const IntMatrix& M);

struct AbelianGroupDesc {
    std::vector<BigInt> invariant_factors;  ///< each >= 2, dividing the next
    int free_rank = 0;

    /// Order of the torsion part times 0 when free_rank > 0.
    BigInt order() const;
};

/// Cokernel of the relation matrix (generators = columns).
AbelianGroupDesc cokernel(const IntMatrix& M);
AbelianGroupDesc h1(const SurgeryPresentation& pres);

std::string to_string(const AbelianGroupDesc& g);
std::string h1_json(const SurgeryPresentation& pres, int indent = 2);

}  // namespace trigon
