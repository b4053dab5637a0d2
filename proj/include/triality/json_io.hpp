#pragma once

#include <string>

#include "json.hpp"

#include "triality/arthur.hpp"
#include "triality/lfunction.hpp"
#include "triality/satake.hpp"
#include "triality/spin8.hpp"

namespace triality::io {

using nlohmann::json;

inline constexpr const char* kSchema = "v1";

/// Parses JSON text; ParseError at "" on malformed input.
json parse_json_text(const std::string& text);

/// Mode declared by an object's "mode" field, else `fallback`.
ScalarMode mode_of(const json& j, const std::string& ptr, ScalarMode fallback);

// Every reader throws ParseError(location, reason) with a JSON pointer.
// Scalars are strings ("3/4", "u^2-1", "(1.5,2)"); JSON integers are also
// accepted, floats only in complex mode.

Scalar read_scalar(const json& j, const std::string& ptr, ScalarMode mode);
json write_scalar(const Scalar& s);

std::vector<Scalar> read_scalars(const json& j, const std::string& ptr, ScalarMode mode);
json write_scalars(const std::vector<Scalar>& v);

EigenMultiset read_multiset(const json& j, const std::string& ptr, ScalarMode mode);
/// Entries in Scalar::compare order, so equal exact multisets print identically.
json write_multiset(const EigenMultiset& m);

Octonion read_octonion(const json& j, const std::string& ptr, ScalarMode mode);
json write_octonion(const Octonion& x);

/// 8 rows of 8 scalars, or the shorthands "I" and "-I".
Mat8 read_mat8(const json& j, const std::string& ptr, ScalarMode mode);
json write_mat8(const Mat8& m);

/// {"g1","g2","g3"}; not validated.
std::array<Mat8, 3> read_triple_matrices(const json& j, const std::string& ptr, ScalarMode mode);
/// {"g1","g2","g3"} validated, or {"lift":{"x","y"}}.
SpinTriple read_triple(const json& j, const std::string& ptr, ScalarMode mode);
json write_triple(const SpinTriple& s);

/// {"t":{"1","2","3"}, "spin": triple}.
TriSpinElement read_trispin(const json& j, const std::string& ptr, ScalarMode mode);
json write_trispin(const TriSpinElement& z);

/// {"group":"GSpinOdd"|"GSpinEven","n","chi","mu","mode"}.
GSpinParam read_param(const json& j, const std::string& ptr, ScalarMode mode);
GSpinOddParam read_odd_param(const json& j, const std::string& ptr, ScalarMode mode);
GSpinEvenParam read_even_param(const json& j, const std::string& ptr, ScalarMode mode);
json write_param(const GSpinParam& c);

Gl2Param read_gl2(const json& j, const std::string& ptr, ScalarMode mode);

/// {"label","degree","selfdual","satake":{"p":[...]},"root_number","central_character"}.
CuspConstituent read_constituent(const json& j, const std::string& ptr, ScalarMode mode);
json write_constituent(const CuspConstituent& c);

/// Array of constituent objects each with "d", or {"terms":[...]}.
ArthurParam read_arthur(const json& j, const std::string& ptr, ScalarMode mode);
json write_arthur(const ArthurParam& p);

/// Tagged union {"type":"GenericCuspidal"|"EndoscopicTempered"|"NonTempered", ...}.
SiegelStdShape read_shape(const json& j, const std::string& ptr, ScalarMode mode);
json write_shape(const SiegelStdShape& s);

/// {"p", "coeffs"}.
LocalFactor read_factor(const json& j, const std::string& ptr, ScalarMode mode);
json write_factor(const LocalFactor& f);

Complex read_complex(const json& j, const std::string& ptr);
json write_complex(Complex z);

ArchWeightParam read_weights(const json& j, const std::string& ptr);
json write_weights(const ArchWeightParam& wp);

}  // namespace triality::io
