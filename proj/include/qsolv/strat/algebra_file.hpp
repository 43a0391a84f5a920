#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qsolv/core/algebra.hpp"
#include "qsolv/orealg/ore.hpp"

namespace qsolv::strat {

using core::NcPoly;

/// Parsed arithmetic expression over integers, q, generators x1..xM and
/// named derived elements.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Throws ParseError with the offending column.
ExprPtr parse_expression(const std::string& text);

/// Evaluates in alg.  Negative exponents are accepted on q and on invertible
/// generators only.  Unknown names throw ParseError.
NcPoly evaluate(const Expr& e, const core::Algebra& alg,
                const std::map<std::string, NcPoly>& names = {});

/// Parses and evaluates in one step.
NcPoly parse_element(const std::string& text, const core::Algebra& alg,
                     const std::map<std::string, NcPoly>& names = {});

/// A user-declared stratum: elements that vanish, derived elements defined
/// by expressions, and the elements that become the torus generators.
struct StratumDeclaration {
  std::string name;
  std::vector<std::string> vanish;
  std::vector<std::string> invert;
  std::vector<std::pair<std::string, std::string>> derived;
};

struct AlgebraFile {
  orealg::OreAlgebraSpec spec;
  std::vector<StratumDeclaration> strata;
};

/// Throws ParseError (with a line number) on malformed text and
/// InvalidSpec when the data cannot define an algebra.
AlgebraFile parse_algebra_file(const std::string& text);
AlgebraFile load_algebra_file(const std::string& path);

std::string serialize_algebra_file(const AlgebraFile& file);

}  // namespace qsolv::strat
