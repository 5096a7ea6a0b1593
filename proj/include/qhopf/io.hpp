#pragma once

#include <iosfwd>
#include <string>

#include "qhopf/dualside.hpp"
#include "qhopf/repcat.hpp"

namespace qhopf {

// Structure-constant text format.  Lines:
//   field rationals | gaussian | fp <p>
//   dim n
//   basis name_1 ... name_n
// then sections, each a keyword line followed by entries "index... scalar":
//   mult i j k, unit i, comult i j k, counit i, phi i j k, phi_inv i j k,
//   antipode row col, alpha i, beta i.
// Only nonzero entries are listed; '#' starts a comment; the last line is "end".
// Dual structures start with a "dual" line and use the same sections for A.
// Modules: field line, "module dim m", then "act i" followed by m rows of m scalars.

std::string emit_structure(const QuasiHopfAlgebra& H);
QuasiHopfAlgebra parse_structure(const std::string& text);

std::string emit_dual(const DualQuasiHopf& A);
DualQuasiHopf parse_dual(const std::string& text);

std::string emit_module(const QuasiHopfAlgebra& H, const HModule& M);
HModule parse_module(const FieldSpec& expected, int algebra_dim, const std::string& text);

// True when the text starts (after comments) with the "dual" line.
bool is_dual_text(const std::string& text);

std::string read_file(const std::string& path);   // throws InvalidArgument
void write_file(const std::string& path, const std::string& text);

} // namespace qhopf
