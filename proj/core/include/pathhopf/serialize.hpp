#pragma once

#include <string>

#include "pathhopf/weak_hopf.hpp"

namespace pathhopf {

/// JSON list of {length, left, right, coeff}; the essential vectors are written in
/// elementary-path coordinates, e.g. {"path": "0-1", "coeff": [re, im]}.
std::string element_to_json(const WeakHopfAlgebra& alg, const AlgebraElement& x, int indent = -1);

/// Inverse of element_to_json. The vectors are expanded in the essential basis of
/// `alg`, so a document written for another basis rotation is still read correctly.
/// Throws InputError on malformed documents.
AlgebraElement element_from_json(const WeakHopfAlgebra& alg, const std::string& text);

}  // namespace pathhopf
