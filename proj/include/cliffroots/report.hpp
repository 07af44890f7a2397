#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cliffroots/classify.hpp"
#include "cliffroots/golden.hpp"
#include "cliffroots/rep.hpp"
#include "cliffroots/roots.hpp"

namespace cliffroots {

using Json = nlohmann::ordered_json;

// Keys: p, q, n, s, ring, d, matrix_form, dim, group_components,
// class_count, ordinary_class_dim, has_exceptional.
Json to_json(const AlgebraClassification& cls);

// Keys: p, q, k, spec, scal, class_dim, centralizer_dim, representative,
// char_poly {n1, n2}, min_poly, then ordinary, class_cdim, centralizer_cdim,
// centralizer_basis. Rationals and multivectors are strings; absent values are null.
Json to_json(const RootClassReport& report);

// generator_images as rows of {re, im} rational strings, plus the idempotent,
// k_generator and ideal basis.
Json to_json(const MatrixRep& rep);

Json to_json(const GoldenResult& result);

// "Cl(4,1): M(4,C), d=2, 5 classes, 1 component" followed by key: value lines.
std::string classification_text(const AlgebraClassification& cls);

// k | f_k | Delta_k(t) | Spec | class dim | centralizer dim
std::string roots_text(const std::vector<RootClassReport>& reports);
std::string roots_csv(const std::vector<RootClassReport>& reports);

std::string represent_text(const MatrixRep& rep);

// One line per failing check plus a summary line.
std::string golden_text(const GoldenResult& result);

}  // namespace cliffroots
