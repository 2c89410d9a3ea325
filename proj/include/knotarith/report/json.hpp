#pragma once

#include "knotarith/arith/cyclotomic.hpp"
#include "knotarith/arith/quadratic.hpp"
#include "knotarith/covers/branched.hpp"
#include "knotarith/covers/conjecture_d.hpp"
#include "knotarith/foxhom/nine_term.hpp"
#include "knotarith/foxhom/zeta.hpp"
#include "knotarith/knots/wirtinger.hpp"

#include <json.hpp>

#include <string>

namespace knotarith::report {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json to_json(const BigInt& x);
/// Invariant factors with one 0 per free summand: Z/2 + Z/2 -> [2, 2], Z -> [0], 0 -> [].
Json to_json(const homalg::AbelianInvariants& a);
/// Rows of the matrix.
Json to_json(const IntMatrix& m);
/// Number, "infinite" or "unknown".
Json to_json(const covers::GroupOrder& o);

Json presentation_json(const std::string& name, const knots::WirtingerData& w);
Json to_json(const covers::CoverReport& r);
Json to_json(const covers::ConjectureDReport& r);
Json to_json(const fox::NineTermReport& r);
Json to_json(const fox::ZetaVerdict& v);
Json to_json(const arith::SplittingReport& r);
Json to_json(const arith::GaussSumReport& r);

/// Indented "key: value" lines; arrays of scalars stay on one line.
std::string to_text(const Json& j);

}  // namespace knotarith::report
